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

#ifndef _QSL_CIRCUIT_H
#define _QSL_CIRCUIT_H

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "qsl/perm_spec.h"

namespace qsl {

struct GateX {
    size_t target;
};
struct GateZ {
    size_t target;
};
struct GateH {
    size_t target;
};
struct GateCnot {
    size_t control;
    size_t target;
};
struct GateToffoli {
    size_t control1;
    size_t control2;
    size_t target;
};
/// Basis permutation on wires [first, first + spec.width()).
struct GatePerm {
    PermSpec spec;
    size_t first = 0;
};

using GateOp = std::variant<GateX, GateZ, GateH, GateCnot, GateToffoli, GatePerm>;

/// Wires touched by op, in declaration order.
inline std::vector<size_t> wires_of(const GateOp &op) {
    return std::visit(
        [](const auto &g) -> std::vector<size_t> {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, GateCnot>) {
                return {g.control, g.target};
            } else if constexpr (std::is_same_v<G, GateToffoli>) {
                return {g.control1, g.control2, g.target};
            } else if constexpr (std::is_same_v<G, GatePerm>) {
                std::vector<size_t> w(g.spec.width());
                for (size_t k = 0; k < w.size(); k++) {
                    w[k] = g.first + k;
                }
                return w;
            } else {
                return {g.target};
            }
        },
        op);
}

/// Throws unless every wire of op is below width and no wire repeats.
inline void validate_op(const GateOp &op, size_t width) {
    auto w = wires_of(op);
    for (auto q : w) {
        if (q >= width) {
            throw std::out_of_range(
                "gate wire " + std::to_string(q) + " out of range for width " + std::to_string(width));
        }
    }
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) {
        throw std::invalid_argument("gate wires must be distinct");
    }
}

/// The inverse gate: every op is self-inverse except PERM.
inline GateOp inverse_of(const GateOp &op) {
    if (auto *p = std::get_if<GatePerm>(&op)) {
        return GatePerm{p->spec.inverse(), p->first};
    }
    return op;
}

/// Ordered gate sequence over a fixed number of wires.
class Circuit {
   public:
    explicit Circuit(size_t width) : width_(width) {
    }

    Circuit &append(GateOp op) {
        validate_op(op, width_);
        ops_.push_back(std::move(op));
        return *this;
    }

    Circuit &append(const Circuit &other) {
        if (other.width_ != width_) {
            throw std::invalid_argument("Circuit::append: width mismatch");
        }
        ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
        return *this;
    }

    Circuit reversed() const {
        Circuit r(width_);
        r.ops_.reserve(ops_.size());
        for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
            r.ops_.push_back(inverse_of(*it));
        }
        return r;
    }

    size_t width() const {
        return width_;
    }
    const std::vector<GateOp> &ops() const {
        return ops_;
    }
    size_t size() const {
        return ops_.size();
    }

   private:
    size_t width_;
    std::vector<GateOp> ops_;
};

}  // namespace qsl

#endif
