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

#ifndef _QSL_QSL_H
#define _QSL_QSL_H

#include "qsl/agreement.h"
#include "qsl/algorithms.h"
#include "qsl/bit_matrix.h"
#include "qsl/bit_vec.h"
#include "qsl/circuit.h"
#include "qsl/experiment.h"
#include "qsl/oracle.h"
#include "qsl/perm_spec.h"
#include "qsl/qsl_register.h"
#include "qsl/reference_sim.h"
#include "qsl/rng.h"
#include "qsl/spec_json.h"

#endif
