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

// Dense univariate polynomials over an arbitrary coefficient ring. The same
// template carries GF(q)[X], GF(q)[t] and GF(q)[t][X]; the tag keeps the
// variables apart at the type level.

#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "torus_zeta/error.hpp"
#include "torus_zeta/field.hpp"

namespace torus_zeta {

/// Supplies zero()/one() for a coefficient type given the underlying finite field.
template <class C>
struct CoeffTraits;

template <class C, class Var>
class UPoly {
 public:
  using Coeff = C;
  using Variable = Var;

  UPoly() = default;
  explicit UPoly(const FieldDesc& f) : field_(f) {}
  UPoly(const FieldDesc& f, std::vector<C> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const FieldDesc& f, C c) { return UPoly(f, std::vector<C>{std::move(c)}); }
  static UPoly one(const FieldDesc& f) { return constant(f, CoeffTraits<C>::one(f)); }
  static UPoly monomial(const FieldDesc& f, C c, std::size_t deg) {
    std::vector<C> v(deg + 1, CoeffTraits<C>::zero(f));
    v[deg] = std::move(c);
    return UPoly(f, std::move(v));
  }
  static UPoly variable(const FieldDesc& f) { return monomial(f, CoeffTraits<C>::one(f), 1); }

  const FieldDesc& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == CoeffTraits<C>::one(field_); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const C& lead() const { return c_.back(); }
  const C& operator[](std::size_t i) const { return c_[i]; }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : CoeffTraits<C>::zero(field_); }
  const std::vector<C>& coeffs() const { return c_; }

  /// Index of the lowest nonzero coefficient (the X-adic order); size() for zero.
  std::size_t low_order() const {
    std::size_t i = 0;
    while (i < c_.size() && c_[i] == CoeffTraits<C>::zero(field_)) ++i;
    return i;
  }

  UPoly& operator+=(const UPoly& o) {
    adopt(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), CoeffTraits<C>::zero(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    adopt(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), CoeffTraits<C>::zero(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly out(a.field_valid() ? a.field_ : b.field_);
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, CoeffTraits<C>::zero(out.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == CoeffTraits<C>::zero(out.field_)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    out.c_ = std::move(r);
    out.trim();
    return out;
  }

  UPoly scaled(const C& s) const {
    UPoly out = *this;
    for (auto& x : out.c_) x = x * s;
    out.trim();
    return out;
  }

  /// Multiplies by Var^n.
  UPoly shifted_up(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<C> v(n, CoeffTraits<C>::zero(field_));
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(field_, std::move(v));
  }
  /// Divides by Var^n, dropping the low coefficients.
  UPoly shifted_down(std::size_t n) const {
    if (n >= c_.size()) return UPoly(field_);
    return UPoly(field_, std::vector<C>(c_.begin() + static_cast<std::ptrdiff_t>(n), c_.end()));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const UPoly& a) {
    os << '[';
    for (std::size_t i = 0; i < a.c_.size(); ++i) os << (i ? ", " : "") << a.c_[i];
    return os << ']';
  }

 private:
  bool field_valid() const { return field_.valid(); }
  void adopt(const UPoly& o) {
    if (!field_valid()) field_ = o.field_;
  }
  void trim() {
    if (!field_valid()) {
      if (!c_.empty()) throw Error(Errc::FieldMismatch, "polynomial without a field");
      return;
    }
    const C zero = CoeffTraits<C>::zero(field_);
    while (!c_.empty() && c_.back() == zero) c_.pop_back();
  }

  FieldDesc field_;
  std::vector<C> c_;
};

template <class C, class Var>
struct CoeffTraits<UPoly<C, Var>> {
  static UPoly<C, Var> zero(const FieldDesc& f) { return UPoly<C, Var>(f); }
  static UPoly<C, Var> one(const FieldDesc& f) { return UPoly<C, Var>::one(f); }
};

/// Exact quotient a / b in an integral domain; throws if b does not divide a.
template <class C, class Var>
UPoly<C, Var> exact_div(const UPoly<C, Var>& a, const UPoly<C, Var>& b) {
  if (b.is_zero()) throw Error(Errc::PreconditionViolated, "exact division by zero polynomial");
  if (a.is_zero()) return UPoly<C, Var>(b.field());
  if (a.degree() < b.degree()) throw Error(Errc::PreconditionViolated, "inexact polynomial division");
  const FieldDesc& f = b.field();
  UPoly<C, Var> rem = a;
  std::vector<C> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), CoeffTraits<C>::zero(f));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    C c = exact_div(rem.lead(), b.lead());
    rem -= b.scaled(c).shifted_up(shift);
    quot[shift] = std::move(c);
  }
  if (!rem.is_zero()) throw Error(Errc::PreconditionViolated, "inexact polynomial division");
  return UPoly<C, Var>(f, std::move(quot));
}

}  // namespace torus_zeta
