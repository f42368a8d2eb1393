// Copyright 2026 The QSL Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef _QSL_BIT_VEC_H
#define _QSL_BIT_VEC_H

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsl/rng.h"

namespace qsl {

/// A fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bit i lives in word i/64 at position i%64. Bits past size() in the last
/// word are always zero, so word-level comparisons and popcounts are exact.
class BitVec {
   public:
    static constexpr size_t WORD_BITS = 64;

    BitVec() = default;
    explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + WORD_BITS - 1) / WORD_BITS, 0) {
    }

    /// Parses most-significant-first text, e.g. "110" has bit 2 and bit 1 set.
    static BitVec from_string(std::string_view text) {
        BitVec v(text.size());
        for (size_t k = 0; k < text.size(); k++) {
            char c = text[text.size() - 1 - k];
            if (c == '1') {
                v.set(k, true);
            } else if (c != '0') {
                throw std::invalid_argument("BitVec::from_string: expected only '0' and '1', got '" + std::string(text) + "'");
            }
        }
        return v;
    }

    static BitVec from_uint(size_t num_bits, uint64_t value) {
        if (num_bits < 64 && (value >> num_bits) != 0) {
            throw std::invalid_argument("BitVec::from_uint: value does not fit in the requested width");
        }
        BitVec v(num_bits);
        if (num_bits > 0) {
            v.words_[0] = value;
        }
        return v;
    }

    static BitVec unit(size_t num_bits, size_t index) {
        BitVec v(num_bits);
        v.set(index, true);
        return v;
    }

    static BitVec random(size_t num_bits, RngStream &rng) {
        BitVec v(num_bits);
        v.fill_random(rng);
        return v;
    }

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }

    bool operator[](size_t index) const {
        return (words_[index / WORD_BITS] >> (index % WORD_BITS)) & 1;
    }

    bool get(size_t index) const {
        check_index(index);
        return (*this)[index];
    }

    void set(size_t index, bool value) {
        check_index(index);
        uint64_t mask = uint64_t{1} << (index % WORD_BITS);
        uint64_t &w = words_[index / WORD_BITS];
        w = value ? (w | mask) : (w & ~mask);
    }

    void flip(size_t index) {
        check_index(index);
        words_[index / WORD_BITS] ^= uint64_t{1} << (index % WORD_BITS);
    }

    /// Unchecked single-bit xor, for inner loops that validated indices up front.
    void xor_bit(size_t index, bool value) {
        words_[index / WORD_BITS] ^= uint64_t{value} << (index % WORD_BITS);
    }

    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
    }

    void fill_random(RngStream &rng) {
        for (auto &w : words_) {
            w = rng();
        }
        mask_tail();
    }

    BitVec &operator^=(const BitVec &other) {
        check_same_size(other, "xor");
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] ^= other.words_[k];
        }
        return *this;
    }

    BitVec &operator&=(const BitVec &other) {
        check_same_size(other, "and");
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] &= other.words_[k];
        }
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }

    friend BitVec operator&(BitVec a, const BitVec &b) {
        a &= b;
        return a;
    }

    bool operator==(const BitVec &other) const = default;

    bool is_zero() const {
        for (auto w : words_) {
            if (w) {
                return false;
            }
        }
        return true;
    }

    size_t popcount() const {
        size_t total = 0;
        for (auto w : words_) {
            total += std::popcount(w);
        }
        return total;
    }

    std::optional<size_t> lowest_set_bit() const {
        for (size_t k = 0; k < words_.size(); k++) {
            if (words_[k]) {
                return k * WORD_BITS + std::countr_zero(words_[k]);
            }
        }
        return std::nullopt;
    }

    /// Value of the vector read as an unsigned integer (bit 0 least significant).
    uint64_t to_uint() const {
        if (num_bits_ > 64) {
            throw std::out_of_range("BitVec::to_uint: more than 64 bits");
        }
        return words_.empty() ? 0 : words_[0];
    }

    /// Most-significant-first text form.
    std::string str() const {
        std::string out(num_bits_, '0');
        for (size_t k = 0; k < num_bits_; k++) {
            if ((*this)[k]) {
                out[num_bits_ - 1 - k] = '1';
            }
        }
        return out;
    }

   private:
    void check_index(size_t index) const {
        if (index >= num_bits_) {
            throw std::out_of_range(
                "BitVec index " + std::to_string(index) + " out of range for size " + std::to_string(num_bits_));
        }
    }

    void check_same_size(const BitVec &other, const char *op) const {
        if (other.num_bits_ != num_bits_) {
            throw std::invalid_argument(
                std::string("BitVec ") + op + ": length mismatch (" + std::to_string(num_bits_) + " vs " +
                std::to_string(other.num_bits_) + ")");
        }
    }

    void mask_tail() {
        size_t r = num_bits_ % WORD_BITS;
        if (r != 0) {
            words_.back() &= (uint64_t{1} << r) - 1;
        }
    }

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Inner product mod 2.
inline bool dot(const BitVec &u, const BitVec &v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("dot: length mismatch");
    }
    auto a = u.words();
    auto b = v.words();
    uint64_t acc = 0;
    for (size_t k = 0; k < a.size(); k++) {
        acc ^= a[k] & b[k];
    }
    return std::popcount(acc) & 1;
}

}  // namespace qsl

#endif
