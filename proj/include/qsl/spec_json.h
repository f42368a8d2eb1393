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

#ifndef _QSL_SPEC_JSON_H
#define _QSL_SPEC_JSON_H

// JSON forms of oracle specs:
//
//   {"type":"dj","n":3,"kind":"balanced","perm":{...}}
//   {"type":"simon","n":3,"secret":"101","perm":{...}}
//
// with perm one of
//
//   {"form":"table","width":m,"table":[...]}
//   {"form":"circuit","width":m,"gates":[["x",t],["cnot",c,t],["toffoli",c1,c2,t]]}
//   {"form":"seeded","width":m,"seed":u64,"depth":gate_count}
//
// and an optional "reversed":true on circuit forms.

#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "qsl/oracle.h"
#include "qsl/perm_spec.h"

namespace qsl {

struct SpecParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline nlohmann::json perm_to_json(const PermSpec &p) {
    nlohmann::json j;
    j["width"] = p.width();
    std::visit(
        [&](const auto &f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, PermTable>) {
                j["form"] = "table";
                j["table"] = f.mapping;
            } else if constexpr (std::is_same_v<F, RevCircuit>) {
                j["form"] = "circuit";
                auto gates = nlohmann::json::array();
                for (const auto &g : f.gates) {
                    switch (g.kind) {
                        case RevGateKind::x:
                            gates.push_back(nlohmann::json::array({"x", g.target}));
                            break;
                        case RevGateKind::cnot:
                            gates.push_back(nlohmann::json::array({"cnot", g.control1, g.target}));
                            break;
                        case RevGateKind::toffoli:
                            gates.push_back(nlohmann::json::array({"toffoli", g.control1, g.control2, g.target}));
                            break;
                    }
                }
                j["gates"] = std::move(gates);
            } else {
                j["form"] = "seeded";
                j["seed"] = f.seed;
                j["depth"] = f.gate_count;
            }
        },
        p.form());
    if (p.reversed()) {
        j["reversed"] = true;
    }
    return j;
}

inline PermSpec perm_from_json(const nlohmann::json &j) {
    try {
        size_t width = j.at("width").get<size_t>();
        std::string form = j.at("form").get<std::string>();
        bool reversed = j.value("reversed", false);
        if (form == "table") {
            return PermSpec(PermTable{width, j.at("table").get<std::vector<uint32_t>>()}, reversed);
        }
        if (form == "circuit") {
            RevCircuit c{width, {}};
            for (const auto &g : j.at("gates")) {
                auto name = g.at(0).get<std::string>();
                if (name == "x" && g.size() == 2) {
                    c.gates.push_back(RevGate::x(g.at(1).get<uint32_t>()));
                } else if (name == "cnot" && g.size() == 3) {
                    c.gates.push_back(RevGate::cnot(g.at(1).get<uint32_t>(), g.at(2).get<uint32_t>()));
                } else if (name == "toffoli" && g.size() == 4) {
                    c.gates.push_back(RevGate::toffoli(
                        g.at(1).get<uint32_t>(), g.at(2).get<uint32_t>(), g.at(3).get<uint32_t>()));
                } else {
                    throw SpecParseError("unknown gate " + g.dump());
                }
            }
            return PermSpec(std::move(c), reversed);
        }
        if (form == "seeded") {
            return PermSpec(
                SeededRevCircuit{width, j.at("seed").get<uint64_t>(), j.at("depth").get<size_t>()}, reversed);
        }
        throw SpecParseError("unknown permutation form '" + form + "'");
    } catch (const nlohmann::json::exception &e) {
        throw SpecParseError(std::string("malformed permutation: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw SpecParseError(std::string("invalid permutation: ") + e.what());
    }
}

inline nlohmann::json to_json(const DjOracleSpec &s) {
    nlohmann::json j{{"type", "dj"}, {"n", s.n}, {"kind", dj_kind_name(s.kind)}};
    if (s.kind == DjKind::balanced) {
        j["perm"] = perm_to_json(s.perm);
    }
    return j;
}

inline nlohmann::json to_json(const SimonOracleSpec &s) {
    return {{"type", "simon"}, {"n", s.n}, {"secret", s.secret.str()}, {"perm", perm_to_json(s.perm)}};
}

inline DjOracleSpec dj_spec_from_json(const nlohmann::json &j) {
    try {
        if (j.at("type") != "dj") {
            throw SpecParseError("expected an oracle spec of type 'dj'");
        }
        DjOracleSpec s;
        s.n = j.at("n").get<size_t>();
        auto kind = j.at("kind").get<std::string>();
        if (kind == "constant0") {
            s.kind = DjKind::constant_zero;
        } else if (kind == "constant1") {
            s.kind = DjKind::constant_one;
        } else if (kind == "balanced") {
            s.kind = DjKind::balanced;
            s.perm = perm_from_json(j.at("perm"));
        } else {
            throw SpecParseError("unknown DJ kind '" + kind + "'");
        }
        s.validate();
        return s;
    } catch (const nlohmann::json::exception &e) {
        throw SpecParseError(std::string("malformed DJ spec: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw SpecParseError(std::string("invalid DJ spec: ") + e.what());
    }
}

inline SimonOracleSpec simon_spec_from_json(const nlohmann::json &j) {
    try {
        if (j.at("type") != "simon") {
            throw SpecParseError("expected an oracle spec of type 'simon'");
        }
        SimonOracleSpec s;
        s.n = j.at("n").get<size_t>();
        s.secret = BitVec::from_string(j.at("secret").get<std::string>());
        s.perm = perm_from_json(j.at("perm"));
        s.validate();
        return s;
    } catch (const nlohmann::json::exception &e) {
        throw SpecParseError(std::string("malformed Simon spec: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw SpecParseError(std::string("invalid Simon spec: ") + e.what());
    }
}

}  // namespace qsl

#endif
