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

// Periodic-point counts and zeta functions of x -> Ax on (F((1/t))/F[t])^d.

#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "torus_zeta/dichotomy.hpp"
#include "torus_zeta/funcfield.hpp"

namespace torus_zeta {

/// Eigenvalues that are roots of unity, grouped by multiplicative order.
struct RouEntry {
  std::uint64_t order = 0;
  std::int64_t multiplicity = 0;
  friend bool operator==(const RouEntry&, const RouEntry&) = default;
};

/// Unit eigenvalues that are not roots of unity. For such an eigenvalue with
/// residue of order n, lambda^n = zeta + eta with |eta| = q^{-eta1_exponent} < 1;
/// entries are grouped by (order, eta1_exponent).
struct UnitEntry {
  std::uint64_t order = 0;
  Rational eta1_exponent;
  std::int64_t multiplicity = 0;
  friend bool operator==(const UnitEntry&, const UnitEntry&) = default;
};

struct SpectralData {
  FieldDesc field;
  std::uint64_t p = 0;
  Integer q;
  std::size_t d = 0;
  std::int64_t r_exponent = 0;  // r(A) = q^R
  std::vector<RouEntry> rou;          // sorted by order
  std::vector<UnitEntry> unit_nonrou;  // sorted by (order, exponent)
  std::int64_t zero_eigen_multiplicity = 0;
  std::int64_t large_eigen_count = 0;  // |lambda| > 1
  std::int64_t small_eigen_count = 0;  // 0 < |lambda| < 1

  /// The orders m_i expanded by multiplicity.
  std::vector<std::uint64_t> rou_orders() const;
};

/// N_k = |det(A^k - I)|, as q^E or 0.
AbsVal nk_oracle(const PolyMatrix& A, std::uint64_t k);

/// N_1..N_kmax. Worker threads split the k range; threads = 0 means 1.
std::vector<AbsVal> nk_sequence(const PolyMatrix& A, std::size_t kmax, unsigned threads = 1);

SpectralData spectral_data(const PolyMatrix& A);
SpectralData spectral_data_of_charpoly(const BiPoly& chi);

/// N_k reconstructed from eigenvalue data alone.
AbsVal nk_formula(const SpectralData& S, std::uint64_t k);

struct SubsetFactor {
  std::vector<std::size_t> indices;  // into rou_orders()
  std::uint64_t L = 0;
  Rational exponent;
};

struct ClosedFormFactor {
  std::uint64_t L = 0;
  Rational exponent;
  friend bool operator==(const ClosedFormFactor&, const ClosedFormFactor&) = default;
};

/// zeta(z) = prod over factors (1 - (q^R z)^L)^exponent.
struct ClosedForm {
  std::int64_t r_exponent = 0;
  Integer q;
  std::vector<SubsetFactor> subset_factors;
  /// Merged by L, including the leading (1, -1); zero totals dropped.
  std::vector<ClosedFormFactor> combined;
};

ClosedForm closed_form(const SpectralData& S);

struct Algebraic {
  ClosedForm closed_form;
  bool rational = false;
};

struct Transcendental {
  Rational boundary_radius;
  std::size_t witness = 0;  // 1-based index into unit_nonrou
};

using ZetaVerdict = std::variant<Algebraic, Transcendental>;

ZetaVerdict classify(const SpectralData& S);

/// Coefficients b_0..b_{terms-1} of exp(sum N_k z^k / k); uses N_1..N_{terms-1}.
std::vector<Rational> zeta_series(const std::vector<AbsVal>& N, const Integer& q, std::size_t terms);

std::vector<Rational> closed_form_series(const ClosedForm& C, std::size_t terms);

/// (1 - c z^L)^alpha up to z^{terms-1}.
std::vector<Rational> binomial_power_series(const Rational& c, std::uint64_t L, const Rational& alpha, std::size_t terms);

/// The window c_k = N_k / q^{Rk}, k = 1..kmax, with c_0 = 0. Every c_k is an
/// integral power of p or zero, so the radical index is always 1.
SeriesWindow dichotomy_coefficients(const SpectralData& S, std::size_t kmax);

/// True when N_k = 0 for some but not all k <= kmax.
bool mixed_degeneracy(const std::vector<AbsVal>& N);

}  // namespace torus_zeta
