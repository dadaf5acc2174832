// Copyright 2026 The toribase Authors
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


// Umbrella header: the whole library.

#ifndef TORIBASE_TORIBASE_HPP
#define TORIBASE_TORIBASE_HPP

#include "toribase/binomial.hpp"
#include "toribase/block_patterns.hpp"
#include "toribase/cache.hpp"
#include "toribase/circuits.hpp"
#include "toribase/errors.hpp"
#include "toribase/fiber.hpp"
#include "toribase/graph.hpp"
#include "toribase/graph_classify.hpp"
#include "toribase/graph_enum.hpp"
#include "toribase/graph_sweep.hpp"
#include "toribase/graver.hpp"
#include "toribase/groebner.hpp"
#include "toribase/instance.hpp"
#include "toribase/integer_matrix.hpp"
#include "toribase/io.hpp"
#include "toribase/lattice.hpp"
#include "toribase/markov.hpp"
#include "toribase/numsgp.hpp"
#include "toribase/order.hpp"
#include "toribase/quadratic.hpp"
#include "toribase/rational_lp.hpp"
#include "toribase/report.hpp"
#include "toribase/robustness.hpp"
#include "toribase/saturation.hpp"
#include "toribase/semigroup_classify.hpp"
#include "toribase/semigroup_sweep.hpp"
#include "toribase/ugb.hpp"
#include "toribase/version.hpp"

#endif  // TORIBASE_TORIBASE_HPP
