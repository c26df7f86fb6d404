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

// Exact arithmetic in Q(p^(1/s)) and dense polynomials over Q.

#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "torus_zeta/error.hpp"
#include "torus_zeta/rational.hpp"

namespace torus_zeta {

/// Q(p^(1/s)). X^s - p is Eisenstein at p, so this is a field of degree s;
/// s = 1 is plain Q.
class RadicalField {
 public:
  RadicalField() = default;
  RadicalField(std::uint64_t p, std::uint32_t s);

  static RadicalField rationals() { return RadicalField(); }

  std::uint64_t p() const { return p_; }
  std::uint32_t s() const { return s_; }

  friend bool operator==(const RadicalField&, const RadicalField&) = default;

 private:
  std::uint64_t p_ = 2;
  std::uint32_t s_ = 1;
};

/// Element sum_j c_j p^(j/s) of a RadicalField, stored in the power basis.
class RadicalElem {
 public:
  RadicalElem() : c_(1) {}
  explicit RadicalElem(const RadicalField& f) : f_(f), c_(f.s()) {}
  RadicalElem(const RadicalField& f, const Rational& x) : f_(f), c_(f.s()) {
    c_[0] = x;
    c_[0].canonicalize();
  }
  RadicalElem(const RadicalField& f, std::vector<Rational> coords);

  /// p^(k/s) for any integer k.
  static RadicalElem root_power(const RadicalField& f, std::int64_t k);

  const RadicalField& field() const { return f_; }
  const std::vector<Rational>& coords() const { return c_; }
  const Rational& coord(std::size_t j) const { return c_[j]; }
  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  const Rational& rational() const;

  RadicalElem& operator+=(const RadicalElem& o);
  RadicalElem& operator-=(const RadicalElem& o);
  friend RadicalElem operator+(RadicalElem a, const RadicalElem& b) { return a += b; }
  friend RadicalElem operator-(RadicalElem a, const RadicalElem& b) { return a -= b; }
  RadicalElem operator-() const;
  friend RadicalElem operator*(const RadicalElem& a, const RadicalElem& b);
  friend RadicalElem operator/(const RadicalElem& a, const RadicalElem& b);
  RadicalElem inverse() const;

  friend bool operator==(const RadicalElem& a, const RadicalElem& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
  friend std::ostream& operator<<(std::ostream& os, const RadicalElem& x);

 private:
  RadicalField f_;
  std::vector<Rational> c_;
};

/// Matrix of multiplication by x in the power basis (column j is x * p^(j/s)).
std::vector<std::vector<Rational>> multiplication_matrix(const RadicalElem& x);

/// Determinant over Q by fraction-based Gaussian elimination.
Rational rational_det(std::vector<std::vector<Rational>> m);

/// Dense polynomial over Q, constant term first, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c) { return QPoly({c}); }
  static QPoly monomial(const Rational& c, std::size_t deg);
  /// prod (z - r) over the given roots.
  static QPoly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }
  Rational operator()(const Rational& z) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rational& c) const;
  QPoly truncated(std::size_t n) const;
  QPoly derivative() const;
  QPoly monic() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const QPoly& p);

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);

}  // namespace torus_zeta
