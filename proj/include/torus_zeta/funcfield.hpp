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

// Arithmetic in GF(q)[t] and over the completion GF(q)((1/t)) at the
// precision the zeta pipeline needs. The absolute value is |x| = q^{deg x},
// i.e. the valuation v(x) = -deg_t x.

#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "torus_zeta/gfq.hpp"

namespace torus_zeta {

using TPoly = UPoly<FFElem, VarT>;
/// Elements of GF(q)[t][X].
using BiPoly = UPoly<TPoly, VarX>;

/// Exact quotient in GF(q)[t]; throws PreconditionViolated on a nonzero remainder.
TPoly exact_div(const TPoly& a, const TPoly& b);

/// |x|_F stored as an exponent of q; never expanded.
struct AbsVal {
  bool zero = true;
  std::int64_t exponent = 0;

  static AbsVal of_zero() { return {}; }
  static AbsVal power(std::int64_t e) { return {false, e}; }

  /// The integer q^exponent (or 0).
  Integer value(const Integer& q) const;

  friend AbsVal operator*(const AbsVal& a, const AbsVal& b) {
    if (a.zero || b.zero) return of_zero();
    return power(a.exponent + b.exponent);
  }
  friend bool operator==(const AbsVal&, const AbsVal&) = default;
  friend bool operator<=(const AbsVal& a, const AbsVal& b) { return a.zero || (!b.zero && a.exponent <= b.exponent); }
  friend std::ostream& operator<<(std::ostream& os, const AbsVal& a);
};

AbsVal abs_value(const TPoly& x);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  /// The d x d zero matrix.
  PolyMatrix(const FieldDesc& f, std::size_t d);
  /// Throws DegreeMismatch for a non-square layout, FieldMismatch for mixed fields.
  PolyMatrix(const FieldDesc& f, std::vector<std::vector<TPoly>> rows);

  static PolyMatrix identity(const FieldDesc& f, std::size_t d);
  /// Diagonal matrix of constants.
  static PolyMatrix diagonal(const std::vector<TPoly>& diag);

  const FieldDesc& field() const { return field_; }
  std::size_t dim() const { return d_; }
  const TPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * d_ + j]; }
  TPoly& operator()(std::size_t i, std::size_t j) { return e_[i * d_ + j]; }
  std::vector<std::vector<TPoly>> rows() const;
  /// Largest t-degree among the entries (-1 for the zero matrix).
  int max_degree() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.d_ == b.d_ && a.e_ == b.e_; }
  friend std::ostream& operator<<(std::ostream& os, const PolyMatrix& m);

 private:
  FieldDesc field_;
  std::size_t d_ = 0;
  std::vector<TPoly> e_;
};

/// Fraction-free (Bareiss) determinant over any integral domain with exact_div.
template <class R>
R bareiss_det(std::vector<std::vector<R>> a, const R& zero, const R& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  bool negate = false;
  R prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == zero) {
      std::size_t i = k + 1;
      while (i < n && a[i][k] == zero) ++i;
      if (i == n) return zero;
      std::swap(a[i], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

TPoly mat_det(const PolyMatrix& m);

/// M^k by binary exponentiation; k >= 1.
PolyMatrix mat_pow(const PolyMatrix& m, std::uint64_t k);

/// det(X*I - M), monic of degree d in X.
BiPoly charpoly(const PolyMatrix& m);

struct SmithForm {
  PolyMatrix U, D, V;  // U * M * V = D
  std::vector<TPoly> invariant_factors;  // monic, b_1 | b_2 | ... | b_d
};

/// Smallest-degree pivoting, ties broken row-major. Errors: SingularMatrix.
SmithForm smith_normal_form(const PolyMatrix& m);

/// Number of fixed points of multiplication by B on the torus, counted through
/// the invariant factors of B - I: prod |b_i|_F, or 0 when det(B - I) = 0.
AbsVal fixed_point_count_snf(const PolyMatrix& b);

/// chi(X + zeta). Errors: FieldMismatch unless zeta lives in chi's coefficient field.
BiPoly bipoly_shift(const BiPoly& chi, const FFElem& zeta);

/// Coefficientwise embedding of chi into an extension of its field.
BiPoly lift(const BiPoly& chi, const FieldDesc& target);

/// The constant polynomial c in GF(q)[t].
inline TPoly tconst(const FFElem& c) { return TPoly::constant(c.field(), c); }

}  // namespace torus_zeta
