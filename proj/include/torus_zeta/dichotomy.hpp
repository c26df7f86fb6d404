/* Copyright 2026 The torus-zeta Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Rationality diagnostics for power-series windows: Hankel determinants,
// Pade/Kronecker detection, denominators, linear-recurrence fitting and the
// sparse exceptional index sets used when tracking denominator growth.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "torus_zeta/radical.hpp"

namespace torus_zeta {

/// Coefficients a_offset, a_offset+1, ... of a power series.
struct SeriesWindow {
  RadicalField field;
  std::vector<RadicalElem> coeffs;
  std::size_t offset = 0;

  static SeriesWindow from_rationals(const std::vector<Rational>& values, std::size_t offset = 0);

  std::size_t size() const { return coeffs.size(); }
  /// Index of the last coefficient (T for a_0..a_T).
  std::size_t last() const { return offset + coeffs.size() - 1; }
  const RadicalElem& at(std::size_t n) const { return coeffs.at(n - offset); }
  bool is_rational() const;
  /// Requires is_rational().
  std::vector<Rational> rationals() const;
};

/// det (a_{l+i+j})_{0<=i,j<=m}. Needs a_0-based windows with l + 2m <= T.
RadicalElem hankel_det(const SeriesWindow& w, std::size_t l, std::size_t m);

struct RationalFunction {
  QPoly P, Q;  // reduced, Q(0) = 1
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// If Delta_m .. Delta_{m+d} all vanish, the reduced P/Q with deg P < m,
/// deg Q <= m agreeing with the window through z^{m+d}. Rational windows only.
std::optional<RationalFunction> kronecker_detect(const SeriesWindow& w, std::size_t m, std::size_t d);

struct KroneckerHit {
  std::size_t m = 0;
  RationalFunction f;
};

/// First m in 1..floor(T/2)-d for which kronecker_detect succeeds.
std::optional<KroneckerHit> kronecker_search(const SeriesWindow& w, std::size_t d);

Rational field_norm(const RadicalElem& x);

/// Coordinate-wise denominator in Z[p^(1/s)]. This equals the algebraic
/// denominator for rational multiples of powers of p^(1/s), which covers every
/// value the zeta pipeline produces; for general elements Z[p^(1/s)] can be
/// smaller than the maximal order, and the two notions may differ.
Integer denominator(const RadicalElem& x);

struct ExceptionalSet {
  std::uint64_t p = 2;
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> members;  // sorted
  double c5 = 0.0;                     // 1 / log p
  std::vector<std::pair<std::uint64_t, std::uint64_t>> density;  // sampled (n, |S ∩ [1,n]|)

  bool contains(std::uint64_t k) const;
  std::uint64_t count_upto(std::uint64_t n) const;
};

/// S = union over l >= 1 of {k in (p^{l-1}, p^l] : p^{l-j} | k}, where j is
/// the largest integer with p^j <= l; truncated to [1, bound].
ExceptionalSet build_exceptional_set(std::uint64_t p, std::uint64_t bound);

/// (ceil(log_p n) + 1)^2, the count ceiling for |S ∩ [1,n]|.
std::uint64_t exceptional_density_bound(std::uint64_t p, std::uint64_t n);

struct LcmGrowth {
  Integer L;                    // L_n
  std::vector<Integer> prefix;  // L_1 .. L_n
  std::vector<double> growth;   // log(L_j) / j
};

/// lcm of den(a_k) over 0 <= k <= n with k outside S (S may be null).
LcmGrowth lcm_den_growth(const SeriesWindow& w, const ExceptionalSet* S, std::size_t n);

struct BinomialBasis {
  std::vector<Rational> alpha;  // P(z) = sum alpha_i binom(z, i)
  Rational M;                   // max |P(i)| over i = 0..deg P
  bool bound_holds = true;      // |alpha_i| <= M 2^i i! for every i
};

BinomialBasis binomial_basis(const QPoly& P);

/// prod (z - s) over s in S ∩ [1, bound].
QPoly vanishing_poly(const ExceptionalSet& S, std::uint64_t bound);

struct RecurrenceFit {
  std::size_t r = 0;
  std::size_t s_roots = 0;
  QPoly charpoly;  // monic, degree r
  bool proper = false;
  friend bool operator==(const RecurrenceFit&, const RecurrenceFit&) = default;
};

/// Shortest constant-coefficient recurrence reproducing a rational window.
RecurrenceFit fit_polyexp(const SeriesWindow& w);

/// b_n = Q(start_index + n) a_n, for n counted from the window start.
SeriesWindow multiply_window_by_poly(const SeriesWindow& w, const QPoly& Q, std::size_t start_index);

struct RationalWindow {
  SeriesWindow window;  // u_M .. u_N, offset M
  std::size_t expected_rank = 0;
};

/// Maclaurin coefficients u_M..u_N of P/Q.
RationalWindow rational_window(const QPoly& P, const QPoly& Q, std::size_t M, std::size_t N);

/// Maclaurin coefficients a_0..a_{n-1} of P/Q (Q(0) != 0).
std::vector<Rational> series_of(const QPoly& P, const QPoly& Q, std::size_t n);

struct PolyaRow {
  std::size_t n = 0;
  double abs_delta = 0.0;
  double root = 0.0;  // |Delta_n|^(1/(n(n+1)))
};

/// Floating magnitudes of Delta_1..Delta_{n_max}; radical values take the
/// largest absolute value over the complex embeddings of Q(p^(1/s)).
std::vector<PolyaRow> polya_decay_report(const SeriesWindow& w, std::size_t n_max);

}  // namespace torus_zeta
