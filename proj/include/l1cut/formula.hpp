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

#include <cstddef>

#include "l1cut/error.hpp"
#include "l1cut/rational.hpp"

namespace l1cut {

/// c_1(K_{2,n}) = (3k - 2) / (2k - 1) with k = ceil(n / 2).
inline Rat c1_k2n(std::size_t n) {
  if (n == 0) {
    throw InputError("c1(K_{2,n}) needs n >= 1");
  }
  const std::int64_t k = static_cast<std::int64_t>((n + 1) / 2);
  return rat(3 * k - 2, 2 * k - 1);
}

/// Distortion of the two-cut-family embedding of K_{2,2k}^ell.
inline Rat theta_distortion(std::size_t k) {
  if (k == 0) {
    throw InputError("theta distortion needs k >= 1");
  }
  const auto kk = static_cast<std::int64_t>(k);
  return rat(3 * kk - 2, 2 * kk - 1);
}

/// Lower bound certified on unit K_{2,2k+1}: (3k + 1) / (2k + 1).
inline Rat k2n_certificate_bound(std::size_t k) {
  const auto kk = static_cast<std::int64_t>(k);
  return rat(3 * kk + 1, 2 * kk + 1);
}

}  // namespace l1cut
