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

// Hypermetric inequalities and the distortion lower bounds they certify.
//
// For integers b with sum 1, every l1-embeddable (pseudo)metric satisfies
// sum_{x,y} b_x b_y d(x,y) <= 0 over ordered pairs. Splitting the pairs by
// the sign of b_x b_y into a positive mass P and a negative mass N (each
// summed over unordered pairs), a non-contracting embedding with distortion
// D has P <= P_f <= N_f <= D N, hence D >= P / N.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "l1cut/error.hpp"
#include "l1cut/graph.hpp"
#include "l1cut/rational.hpp"

namespace l1cut {

struct HypermetricCertificate {
  std::vector<std::int64_t> b;
  Rat positive_mass;
  Rat negative_mass;
  Rat bound;
};

/// Evaluates hypermetric masses for many b-vectors against one fixed
/// distance table. Distances are brought to a common denominator once, so
/// the inner loop runs on machine integers whenever that cannot overflow.
class HypermetricForm {
 public:
  explicit HypermetricForm(const SymMatrix<Rat>& d) : n_(d.size()) {
    Integer denominator = 1;
    for (Vertex x = 0; x < n_; ++x) {
      for (Vertex y = x + 1; y < n_; ++y) denominator = lcm(denominator, denominator_of(d(x, y)));
    }
    scale_ = Rat(denominator);
    bool small = true;
    const Integer limit = Integer(1) << 31;
    for (Vertex x = 0; x < n_; ++x) {
      for (Vertex y = x + 1; y < n_; ++y) {
        const Rat scaled = d(x, y) * scale_;
        Integer value = numerator_of(scaled);
        if (value < 0) {
          throw InputError("negative distance in hypermetric evaluation");
        }
        if (value >= limit) small = false;
        wide_.push_back(std::move(value));
      }
    }
    if (small) {
      narrow_.reserve(wide_.size());
      for (const auto& v : wide_) narrow_.push_back(v.convert_to<std::int64_t>());
    }
  }

  std::size_t size() const noexcept { return n_; }

  /// (positive mass, negative mass) over unordered pairs.
  std::pair<Rat, Rat> masses(std::span<const std::int64_t> b) const {
    check_length(b);
    if (!narrow_.empty() && fits_narrow(b)) {
      std::int64_t positive = 0;
      std::int64_t negative = 0;
      accumulate_narrow(b, positive, negative);
      return {Rat(positive) / scale_, Rat(negative) / scale_};
    }
    Integer positive = 0;
    Integer negative = 0;
    std::size_t index = 0;
    for (Vertex x = 0; x < n_; ++x) {
      for (Vertex y = x + 1; y < n_; ++y, ++index) {
        const std::int64_t product = b[x] * b[y];
        if (product > 0) positive += wide_[index] * product;
        if (product < 0) negative += wide_[index] * (-product);
      }
    }
    return {Rat(positive) / scale_, Rat(negative) / scale_};
  }

  /// Machine-integer masses scaled by the common denominator; nullopt when
  /// the fast path does not apply.
  std::optional<std::pair<std::int64_t, std::int64_t>> scaled_masses(
      std::span<const std::int64_t> b) const {
    if (narrow_.empty() || !fits_narrow(b)) return std::nullopt;
    std::int64_t positive = 0;
    std::int64_t negative = 0;
    accumulate_narrow(b, positive, negative);
    return std::pair{positive, negative};
  }

 private:
  void check_length(std::span<const std::int64_t> b) const {
    if (b.size() != n_) {
      throw InputError("b-vector has " + std::to_string(b.size()) + " entries for " +
                       std::to_string(n_) + " points");
    }
  }

  // |b_x b_y| * d < 2^31 * 2^20 per term, and at most 2^11 terms.
  bool fits_narrow(std::span<const std::int64_t> b) const {
    if (n_ > 64) return false;
    for (std::int64_t v : b) {
      if (v > 1000 || v < -1000) return false;
    }
    return true;
  }

  void accumulate_narrow(std::span<const std::int64_t> b, std::int64_t& positive,
                         std::int64_t& negative) const {
    std::size_t index = 0;
    for (Vertex x = 0; x < n_; ++x) {
      const std::int64_t bx = b[x];
      for (Vertex y = x + 1; y < n_; ++y, ++index) {
        const std::int64_t product = bx * b[y];
        if (product > 0) positive += narrow_[index] * product;
        if (product < 0) negative -= narrow_[index] * product;
      }
    }
  }

  std::size_t n_;
  Rat scale_;
  std::vector<Integer> wide_;
  std::vector<std::int64_t> narrow_;
};

namespace detail {

inline void require_unit_sum(std::span<const std::int64_t> b) {
  const std::int64_t sum = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (sum != 1) {
    throw InputError("hypermetric coefficients must sum to 1, got " + std::to_string(sum));
  }
}

}  // namespace detail

/// sum over ordered pairs of b_x b_y d(x, y), i.e. twice the unordered sum.
/// At most zero for every l1-embeddable table.
inline Rat hypermetric_value(const SymMatrix<Rat>& d, std::span<const std::int64_t> b) {
  detail::require_unit_sum(b);
  const auto [positive, negative] = HypermetricForm(d).masses(b);
  return 2 * (positive - negative);
}

inline Rat hypermetric_value(const FiniteMetric& m, std::span<const std::int64_t> b) {
  return hypermetric_value(m.matrix(), b);
}

inline HypermetricCertificate distortion_lower_bound(const FiniteMetric& m,
                                                     std::span<const std::int64_t> b) {
  detail::require_unit_sum(b);
  auto [positive, negative] = HypermetricForm(m.matrix()).masses(b);
  if (negative == 0) {
    throw InputError("b-vector has no negative pairs; it certifies nothing");
  }
  Rat bound = positive / negative;
  if (bound < 1) bound = 1;
  return HypermetricCertificate{std::vector<std::int64_t>(b.begin(), b.end()), std::move(positive),
                                std::move(negative), std::move(bound)};
}

/// Unit K_{2,2k+1} with b = -k on both terminals and 1 on every B-vertex.
/// The bound is (3k+1)/(2k+1).
inline HypermetricCertificate k2n_certificate(std::size_t k) {
  if (k == 0) {
    throw InputError("k2n certificate needs k >= 1");
  }
  const FiniteMetric m = shortest_path_metric(build_k2n(2 * k + 1));
  std::vector<std::int64_t> b(m.size(), 1);
  b[0] = b[1] = -static_cast<std::int64_t>(k);
  return distortion_lower_bound(m, b);
}

/// The strongest certificate among all b in [-max_abs, max_abs]^n with sum
/// 1, visited in lexicographic order (first maximum wins). Refuses when
/// (2 max_abs + 1)^n exceeds `max_candidates`.
inline HypermetricCertificate search_b_vectors(const FiniteMetric& m, std::int64_t max_abs,
                                               double max_candidates = 1e7) {
  const std::size_t n = m.size();
  if (max_abs < 1 || n < 2) {
    throw InputError("b-vector search needs max_abs >= 1 and at least two points");
  }
  double space = 1;
  for (std::size_t i = 0; i < n; ++i) space *= static_cast<double>(2 * max_abs + 1);
  if (space > max_candidates) {
    throw GuardError("b-vector search space " + std::to_string(space) + " exceeds guard " +
                     std::to_string(max_candidates));
  }

  const HypermetricForm form(m.matrix());
  std::vector<std::int64_t> b(n, -max_abs);
  std::vector<std::int64_t> best_b;
  Rat best_positive;
  Rat best_negative;
  bool found = false;

  // Compare P/N candidates by cross-multiplication; all values share the
  // form's common scale so the fast path compares raw integers.
  auto consider = [&](const Rat& positive, const Rat& negative) {
    if (negative == 0) return;
    if (!found || positive * best_negative > best_positive * negative) {
      found = true;
      best_b = b;
      best_positive = positive;
      best_negative = negative;
    }
  };

  // Odometer over the first n-1 coordinates; the last is forced by sum = 1.
  const std::size_t free = n - 1;
  std::vector<std::int64_t> prefix(n, -max_abs);
  while (true) {
    std::int64_t partial = 0;
    for (std::size_t i = 0; i < free; ++i) partial += prefix[i];
    const std::int64_t last = 1 - partial;
    if (last >= -max_abs && last <= max_abs) {
      for (std::size_t i = 0; i < free; ++i) b[i] = prefix[i];
      b[free] = last;
      if (auto fast = form.scaled_masses(b)) {
        consider(Rat(fast->first), Rat(fast->second));
      } else {
        const auto [positive, negative] = form.masses(b);
        consider(positive, negative);
      }
    }
    std::size_t pos = free;
    while (pos > 0 && prefix[pos - 1] == max_abs) {
      prefix[pos - 1] = -max_abs;
      --pos;
    }
    if (pos == 0) break;
    ++prefix[pos - 1];
  }
  if (!found) {
    throw InputError("no b-vector in range has a negative pair");
  }
  return distortion_lower_bound(m, best_b);
}

}  // namespace l1cut
