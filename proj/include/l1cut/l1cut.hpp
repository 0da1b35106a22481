// Copyright 2026 The l1cut Authors
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

#pragma once

#include "l1cut/cut_measure.hpp"
#include "l1cut/error.hpp"
#include "l1cut/formula.hpp"
#include "l1cut/graph.hpp"
#include "l1cut/hypermetric.hpp"
#include "l1cut/l1_oracle.hpp"
#include "l1cut/rational.hpp"
#include "l1cut/reduction.hpp"
#include "l1cut/simplex.hpp"
#include "l1cut/theta_embedding.hpp"
