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

#include "torus_zeta/funcfield.hpp"

#include <algorithm>
#include <utility>

namespace torus_zeta {

TPoly exact_div(const TPoly& a, const TPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(Errc::PreconditionViolated, "inexact division in GF(q)[t]");
  return q;
}

Integer AbsVal::value(const Integer& q) const {
  if (zero) return 0;
  return pow_integer(q, static_cast<std::uint64_t>(exponent));
}

std::ostream& operator<<(std::ostream& os, const AbsVal& a) {
  if (a.zero) return os << "0";
  return os << "q^" << a.exponent;
}

AbsVal abs_value(const TPoly& x) {
  if (x.is_zero()) return AbsVal::of_zero();
  return AbsVal::power(x.degree());
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(const FieldDesc& f, std::size_t d) : field_(f), d_(d), e_(d * d, TPoly(f)) {}

PolyMatrix::PolyMatrix(const FieldDesc& f, std::vector<std::vector<TPoly>> rows) : field_(f), d_(rows.size()) {
  e_.reserve(d_ * d_);
  for (auto& row : rows) {
    if (row.size() != d_) throw Error(Errc::DegreeMismatch, "matrix must be square");
    for (auto& x : row) {
      if (!x.is_zero() && !(x.field() == f)) throw Error(Errc::FieldMismatch, "matrix entries must share one field");
      e_.push_back(x.is_zero() ? TPoly(f) : std::move(x));
    }
  }
}

PolyMatrix PolyMatrix::identity(const FieldDesc& f, std::size_t d) {
  PolyMatrix m(f, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = TPoly::one(f);
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<TPoly>& diag) {
  if (diag.empty()) throw Error(Errc::DegreeMismatch, "empty diagonal");
  PolyMatrix m(diag.front().field(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

std::vector<std::vector<TPoly>> PolyMatrix::rows() const {
  std::vector<std::vector<TPoly>> out(d_);
  for (std::size_t i = 0; i < d_; ++i) out[i].assign(e_.begin() + static_cast<std::ptrdiff_t>(i * d_), e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * d_));
  return out;
}

int PolyMatrix::max_degree() const {
  int deg = -1;
  for (const auto& x : e_) deg = std::max(deg, x.degree());
  return deg;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.d_ != b.d_) throw Error(Errc::DegreeMismatch, "matrix dimensions differ");
  PolyMatrix out(a.field_, a.d_);
  for (std::size_t i = 0; i < a.d_; ++i) {
    for (std::size_t k = 0; k < a.d_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.d_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.d_ != b.d_) throw Error(Errc::DegreeMismatch, "matrix dimensions differ");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] += b.e_[i];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.d_ != b.d_) throw Error(Errc::DegreeMismatch, "matrix dimensions differ");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] -= b.e_[i];
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.d_; ++i) {
    os << (i ? ", " : "") << '[';
    for (std::size_t j = 0; j < m.d_; ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

// ---------------------------------------------------------------------------

TPoly mat_det(const PolyMatrix& m) {
  const FieldDesc& f = m.field();
  return bareiss_det(m.rows(), TPoly(f), TPoly::one(f));
}

PolyMatrix mat_pow(const PolyMatrix& m, std::uint64_t k) {
  if (k == 0) throw Error(Errc::PreconditionViolated, "mat_pow needs k >= 1");
  PolyMatrix result;
  bool have = false;
  PolyMatrix base = m;
  while (k) {
    if (k & 1) {
      result = have ? result * base : base;
      have = true;
    }
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

BiPoly charpoly(const PolyMatrix& m) {
  const FieldDesc& f = m.field();
  const std::size_t d = m.dim();
  std::vector<std::vector<BiPoly>> a(d, std::vector<BiPoly>(d, BiPoly(f)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a[i][j] = BiPoly::constant(f, -m(i, j));
      if (i == j) a[i][j] += BiPoly::variable(f);
    }
  }
  return bareiss_det(std::move(a), BiPoly(f), BiPoly::one(f));
}

namespace {

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.dim(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.dim(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += c * row_src
void add_row(PolyMatrix& m, std::size_t dst, std::size_t src, const TPoly& c) {
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (!m(src, j).is_zero()) m(dst, j) += c * m(src, j);
  }
}

// col_dst += c * col_src
void add_col(PolyMatrix& m, std::size_t dst, std::size_t src, const TPoly& c) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (!m(i, src).is_zero()) m(i, dst) += m(i, src) * c;
  }
}

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& m) {
  const FieldDesc& f = m.field();
  const std::size_t d = m.dim();
  PolyMatrix D = m, U = PolyMatrix::identity(f, d), V = PolyMatrix::identity(f, d);

  for (std::size_t k = 0; k < d; ++k) {
    for (;;) {
      std::size_t pi = d, pj = d;
      for (std::size_t i = k; i < d; ++i) {
        for (std::size_t j = k; j < d; ++j) {
          if (D(i, j).is_zero()) continue;
          if (pi == d || D(i, j).degree() < D(pi, pj).degree()) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == d) throw Error(Errc::SingularMatrix, "Smith normal form needs det != 0");
      swap_rows(D, k, pi);
      swap_rows(U, k, pi);
      swap_cols(D, k, pj);
      swap_cols(V, k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < d; ++i) {
        if (D(i, k).is_zero()) continue;
        auto [q, r] = divrem(D(i, k), D(k, k));
        add_row(D, i, k, -q);
        add_row(U, i, k, -q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < d; ++j) {
        if (D(k, j).is_zero()) continue;
        auto [q, r] = divrem(D(k, j), D(k, k));
        add_col(D, j, k, -q);
        add_col(V, j, k, -q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise fold an offending row in.
      std::size_t bad = d;
      for (std::size_t i = k + 1; i < d && bad == d; ++i) {
        for (std::size_t j = k + 1; j < d; ++j) {
          if (!rem(D(i, j), D(k, k)).is_zero()) {
            bad = i;
            break;
          }
        }
      }
      if (bad == d) break;
      add_row(D, k, bad, TPoly::one(f));
      add_row(U, k, bad, TPoly::one(f));
    }
    const TPoly inv = tconst(D(k, k).lead().inverse());
    for (std::size_t j = 0; j < d; ++j) {
      D(k, j) *= inv;
      U(k, j) *= inv;
    }
  }

  SmithForm out{std::move(U), std::move(D), std::move(V), {}};
  for (std::size_t i = 0; i < d; ++i) out.invariant_factors.push_back(out.D(i, i));
  return out;
}

AbsVal fixed_point_count_snf(const PolyMatrix& b) {
  const PolyMatrix shifted = b - PolyMatrix::identity(b.field(), b.dim());
  if (mat_det(shifted).is_zero()) return AbsVal::of_zero();
  AbsVal count = AbsVal::power(0);
  for (const auto& factor : smith_normal_form(shifted).invariant_factors) count = count * abs_value(factor);
  return count;
}

BiPoly lift(const BiPoly& chi, const FieldDesc& target) {
  std::vector<TPoly> c;
  c.reserve(chi.size());
  for (const auto& x : chi.coeffs()) c.push_back(lift(x, target));
  return BiPoly(target, std::move(c));
}

BiPoly bipoly_shift(const BiPoly& chi, const FFElem& zeta) {
  const FieldDesc& f = zeta.field();
  if (!chi.is_zero() && !(chi.field() == f)) throw Error(Errc::FieldMismatch, "shift constant outside the coefficient field");
  const BiPoly x_plus_zeta(f, {tconst(zeta), TPoly::one(f)});
  BiPoly acc(f);
  for (std::size_t i = chi.size(); i-- > 0;) acc = acc * x_plus_zeta + BiPoly::constant(f, chi[i]);
  return acc;
}

}  // namespace torus_zeta
