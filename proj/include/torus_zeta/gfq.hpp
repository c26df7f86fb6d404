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

// Finite fields GF(p), GF(p^e) and towers GF(q^delta) over GF(q), with the
// polynomial algorithms needed downstream: gcd, squarefree decomposition,
// Cantor-Zassenhaus factorization and multiplicative orders.
//
// Field descriptors are interned: two descriptors built from the same base
// and modulus compare equal and share storage for the life of the process.
// Elements store their prime-field coordinates flattened through the tower,
// relative coordinate i occupying the i-th block of base().abs_degree() slots.

#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "torus_zeta/error.hpp"
#include "torus_zeta/rational.hpp"
#include "torus_zeta/field.hpp"
#include "torus_zeta/upoly.hpp"

namespace torus_zeta {

class FFElem {
 public:
  using Coords = boost::container::small_vector<std::uint32_t, 4>;

  FFElem() = default;
  /// Image of an integer under Z -> GF(p) -> field.
  FFElem(const FieldDesc& f, std::int64_t v);
  /// From flattened prime-field coordinates; reduced mod p, padded with zeros.
  FFElem(const FieldDesc& f, Coords flat);

  static FFElem zero(const FieldDesc& f) { return FFElem(f, 0); }
  static FFElem one(const FieldDesc& f) { return FFElem(f, 1); }
  /// Element sum_i rel[i] * y^i where y is the root of f.modulus() and rel[i] lie in f.base().
  static FFElem from_relative(const FieldDesc& f, std::span<const FFElem> rel);
  /// The class of the variable in GF(q)[X]/(modulus).
  static FFElem generator(const FieldDesc& f);

  const FieldDesc& field() const { return f_; }
  std::span<const std::uint32_t> flat() const { return {c_.data(), c_.size()}; }
  /// Coordinate i over base() (i < degree()).
  FFElem relative(int i) const;
  bool is_zero() const;
  bool is_one() const;

  FFElem& operator+=(const FFElem& o);
  FFElem& operator-=(const FFElem& o);
  FFElem& operator*=(const FFElem& o);
  friend FFElem operator+(FFElem a, const FFElem& b) { return a += b; }
  friend FFElem operator-(FFElem a, const FFElem& b) { return a -= b; }
  friend FFElem operator*(FFElem a, const FFElem& b) { return a *= b; }
  friend FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inverse(); }
  FFElem operator-() const;

  /// Throws PreconditionViolated on zero.
  FFElem inverse() const;
  FFElem pow(const Integer& e) const;
  /// The unique p-th root (inverse Frobenius).
  FFElem pth_root() const;

  friend bool operator==(const FFElem& a, const FFElem& b) { return a.c_ == b.c_ && a.f_ == b.f_; }
  friend std::strong_ordering operator<=>(const FFElem& a, const FFElem& b);
  friend std::ostream& operator<<(std::ostream& os, const FFElem& x);

 private:
  FieldDesc f_;
  Coords c_;
};

inline FFElem exact_div(const FFElem& a, const FFElem& b) { return a / b; }

template <>
struct CoeffTraits<FFElem> {
  static FFElem zero(const FieldDesc& f) { return FFElem::zero(f); }
  static FFElem one(const FieldDesc& f) { return FFElem::one(f); }
};

/// Maps x from a subfield of `target` (through the tower) into `target`.
FFElem embed(const FFElem& x, const FieldDesc& target);

// ---------------------------------------------------------------------------
// Field construction

bool is_prime(std::uint64_t n);

FieldDesc prime_field(std::uint64_t p);

/// GF(p^e) over GF(p). Without a modulus, picks the first monic irreducible of
/// degree e when coefficient vectors are read as base-p numbers (constant term
/// least significant). Errors: NonPrime, DegreeMismatch, ReducibleModulus.
FieldDesc make_field(std::uint64_t p, int e, const std::optional<FFPoly>& modulus = std::nullopt);

/// GF(q^delta) built as GF(q)[y]/(modulus) over `base`.
FieldDesc make_extension(const FieldDesc& base, const FFPoly& modulus);

/// Like make_field but over an arbitrary base: the first monic irreducible of degree e.
FFPoly first_irreducible(const FieldDesc& base, int e);

// ---------------------------------------------------------------------------
// Polynomials with field coefficients (shared by GF(q)[X] and GF(q)[t])

template <class Var>
using FieldPoly = UPoly<FFElem, Var>;

template <class Var>
std::pair<FieldPoly<Var>, FieldPoly<Var>> divrem(const FieldPoly<Var>& a, const FieldPoly<Var>& b) {
  if (b.is_zero()) throw Error(Errc::PreconditionViolated, "division by zero polynomial");
  const FieldDesc& f = b.field();
  if (a.is_zero() || a.degree() < b.degree()) return {FieldPoly<Var>(f), a};
  const FFElem inv_lead = b.lead().inverse();
  const std::size_t nb = b.size();
  std::vector<FFElem> r = a.coeffs();
  std::vector<FFElem> quot(r.size() - nb + 1, FFElem::zero(f));
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const FFElem& top = r[shift + nb - 1];
    if (top.is_zero()) continue;
    FFElem c = top * inv_lead;
    for (std::size_t j = 0; j < nb; ++j) r[shift + j] -= c * b[j];
    quot[shift] = std::move(c);
  }
  r.resize(nb - 1, FFElem::zero(f));
  return {FieldPoly<Var>(f, std::move(quot)), FieldPoly<Var>(f, std::move(r))};
}

template <class Var>
FieldPoly<Var> rem(const FieldPoly<Var>& a, const FieldPoly<Var>& b) {
  return divrem(a, b).second;
}

template <class Var>
FieldPoly<Var> monic(const FieldPoly<Var>& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inverse());
}

template <class Var>
FieldPoly<Var> derivative(const FieldPoly<Var>& a) {
  if (a.degree() < 1) return FieldPoly<Var>(a.field());
  std::vector<FFElem> d;
  d.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * FFElem(a.field(), static_cast<std::int64_t>(i)));
  return FieldPoly<Var>(a.field(), std::move(d));
}

/// Monic gcd. Errors: BothZero.
template <class Var>
FieldPoly<Var> poly_gcd(FieldPoly<Var> a, FieldPoly<Var> b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0)");
  while (!b.is_zero()) {
    FieldPoly<Var> r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class Var>
struct Bezout {
  FieldPoly<Var> gcd, s, t;  // s*a + t*b = gcd, gcd monic
};

template <class Var>
Bezout<Var> poly_xgcd(const FieldPoly<Var>& a, const FieldPoly<Var>& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "xgcd(0, 0)");
  const FieldDesc& f = a.is_zero() ? b.field() : a.field();
  FieldPoly<Var> r0 = a, r1 = b;
  FieldPoly<Var> s0 = FieldPoly<Var>::one(f), s1(f);
  FieldPoly<Var> t0(f), t1 = FieldPoly<Var>::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const FFElem inv = r0.lead().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class Var>
FieldPoly<Var> powmod(const FieldPoly<Var>& base, const Integer& e, const FieldPoly<Var>& mod) {
  const FieldDesc& f = mod.field();
  FieldPoly<Var> result = rem(FieldPoly<Var>::one(f), mod);
  FieldPoly<Var> b = rem(base, mod);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(result * result, mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, mod);
  }
  return result;
}

template <class Var>
FFElem evaluate(const FieldPoly<Var>& a, const FFElem& x) {
  FFElem acc = FFElem::zero(x.field());
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + embed(a[i], x.field());
  return acc;
}

/// Deterministic total order: degree first, then coefficients from the top down.
template <class Var>
bool poly_less(const FieldPoly<Var>& a, const FieldPoly<Var>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// Operations on GF(q)[X]

/// Rabin's test over the coefficient field.
bool is_irreducible(const FFPoly& f);

/// Pairs (g, k) with g monic squarefree, pairwise coprime, f = lc * prod g^k.
std::vector<std::pair<FFPoly, int>> squarefree_decomposition(const FFPoly& f);

/// Monic polynomial with the roots of f, each once. Errors: ZeroPolynomial.
FFPoly squarefree_part(const FFPoly& f);

/// Monic irreducible factors with multiplicity, sorted by poly_less.
/// Errors: ZeroPolynomial.
std::vector<std::pair<FFPoly, int>> ff_factor(const FFPoly& f);

/// Multiplicative order of X in GF(q)[X]/(h). Errors: ZeroRoot, NotIrreducible.
std::uint64_t order_of_root(const FFPoly& h);

/// Prime factorization (trial division to 10^6, then Pollard rho); sorted.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

/// Lifts each coefficient into `target` (which must contain the coefficient field).
template <class Var>
FieldPoly<Var> lift(const FieldPoly<Var>& f, const FieldDesc& target) {
  std::vector<FFElem> c;
  c.reserve(f.size());
  for (const auto& x : f.coeffs()) c.push_back(embed(x, target));
  return FieldPoly<Var>(target, std::move(c));
}

}  // namespace torus_zeta
