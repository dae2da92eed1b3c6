// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NASHCORE_NASHCORE_H_
#define NASHCORE_NASHCORE_H_

#include "nashcore/axioms.h"
#include "nashcore/committee.h"
#include "nashcore/errors.h"
#include "nashcore/feasibility.h"
#include "nashcore/generators.h"
#include "nashcore/instance.h"
#include "nashcore/interval.h"
#include "nashcore/json_io.h"
#include "nashcore/lemmas.h"
#include "nashcore/parallel.h"
#include "nashcore/party_profile.h"
#include "nashcore/random.h"
#include "nashcore/rational.h"
#include "nashcore/report.h"
#include "nashcore/sampling.h"
#include "nashcore/scoring.h"
#include "nashcore/solvers.h"
#include "nashcore/suites.h"
#include "nashcore/surd.h"
#include "nashcore/utility.h"
#include "nashcore/verifiers.h"

#endif  // NASHCORE_NASHCORE_H_
