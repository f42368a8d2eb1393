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

// Runs the three-bit Simon example with s = 101 and a small DJ instance,
// printing each step.

#include <iostream>

#include "qsl/qsl.h"

int main() {
    qsl::RngStream rng(2026, 0);

    qsl::BitVec s = qsl::BitVec::from_string("101");
    auto basis = qsl::orthogonal_complement_basis(s);
    std::cout << "basis orthogonal to " << s.str() << ":";
    for (const auto &row : basis.rows()) {
        std::cout << ' ' << row.str();
    }
    std::cout << '\n';

    qsl::SimonOracleSpec spec{3, s, qsl::PermSpec::identity(3)};
    qsl::SimonOracle oracle(spec, rng);
    for (int k = 0; k < 4; k++) {
        std::cout << "sample y = " << qsl::simon_subroutine(oracle, 3, rng).str() << '\n';
    }
    auto det = qsl::simon_deterministic(oracle, 3, rng);
    std::cout << "deterministic rows:";
    for (const auto &row : det.y_rows.rows()) {
        std::cout << ' ' << row.str();
    }
    std::cout << "\nrecovered secret " << det.secret.str() << " with " << det.queries << " queries\n";

    qsl::DjOracleSpec dj_spec{4, qsl::DjKind::balanced, qsl::PermSpec::random(4, rng)};
    qsl::DjOracle dj(dj_spec);
    auto r = qsl::deutsch_jozsa(dj, 4, rng);
    std::cout << "DJ n=4: measured " << r.raw_measurement.str() << " -> " << qsl::dj_verdict_name(r.verdict)
              << " after " << r.queries << " query\n";
    return 0;
}
