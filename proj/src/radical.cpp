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

#include "torus_zeta/radical.hpp"

#include <algorithm>
#include <string>

#include "torus_zeta/error.hpp"

namespace torus_zeta {

RadicalField::RadicalField(std::uint64_t p, std::uint32_t s) : p_(p), s_(s) {
  if (s == 0) throw Error(Errc::PreconditionViolated, "radical index must be positive");
  if (p < 2) throw Error(Errc::NonPrime, "radicand must be a prime");
}

RadicalElem::RadicalElem(const RadicalField& f, std::vector<Rational> coords) : f_(f), c_(std::move(coords)) {
  if (c_.size() != f.s()) throw Error(Errc::DegreeMismatch, "coordinate count must equal the radical index");
  for (auto& x : c_) x.canonicalize();
}

RadicalElem RadicalElem::root_power(const RadicalField& f, std::int64_t k) {
  const auto s = static_cast<std::int64_t>(f.s());
  std::int64_t a = k / s, b = k % s;
  if (b < 0) {
    b += s;
    --a;
  }
  RadicalElem out(f);
  const Integer pa = pow_integer(Integer(static_cast<unsigned long>(f.p())), static_cast<std::uint64_t>(a < 0 ? -a : a));
  out.c_[static_cast<std::size_t>(b)] = a < 0 ? Rational(Integer(1), pa) : Rational(pa);
  return out;
}

bool RadicalElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool RadicalElem::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

const Rational& RadicalElem::rational() const {
  if (!is_rational()) throw Error(Errc::PreconditionViolated, "element is not rational");
  return c_[0];
}

RadicalElem& RadicalElem::operator+=(const RadicalElem& o) {
  if (!(f_ == o.f_)) throw Error(Errc::FieldMismatch, "radical fields differ");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

RadicalElem& RadicalElem::operator-=(const RadicalElem& o) {
  if (!(f_ == o.f_)) throw Error(Errc::FieldMismatch, "radical fields differ");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

RadicalElem RadicalElem::operator-() const {
  RadicalElem out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

RadicalElem operator*(const RadicalElem& a, const RadicalElem& b) {
  if (!(a.f_ == b.f_)) throw Error(Errc::FieldMismatch, "radical fields differ");
  const std::size_t s = a.c_.size();
  const Rational p(static_cast<unsigned long>(a.f_.p()));
  RadicalElem out(a.f_);
  for (std::size_t i = 0; i < s; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < s; ++j) {
      if (b.c_[j] == 0) continue;
      const Rational term = a.c_[i] * b.c_[j];
      if (i + j < s) {
        out.c_[i + j] += term;
      } else {
        out.c_[i + j - s] += term * p;
      }
    }
  }
  return out;
}

std::vector<std::vector<Rational>> multiplication_matrix(const RadicalElem& x) {
  const RadicalField& f = x.field();
  const std::size_t s = f.s();
  std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
  for (std::size_t j = 0; j < s; ++j) {
    const RadicalElem col = x * RadicalElem::root_power(f, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < s; ++i) m[i][j] = col.coord(i);
  }
  return m;
}

RadicalElem RadicalElem::inverse() const {
  if (is_zero()) throw Error(Errc::PreconditionViolated, "inverse of zero");
  const std::size_t s = c_.size();
  if (s == 1) return RadicalElem(f_, Rational(1) / c_[0]);
  // Solve (multiplication by x) y = 1 by Gauss-Jordan on [M | e_0].
  auto m = multiplication_matrix(*this);
  for (std::size_t i = 0; i < s; ++i) m[i].push_back(Rational(i == 0 ? 1 : 0));
  for (std::size_t k = 0; k < s; ++k) {
    std::size_t piv = k;
    while (m[piv][k] == 0) ++piv;  // x != 0 in a field, so M is invertible
    std::swap(m[piv], m[k]);
    const Rational inv = Rational(1) / m[k][k];
    for (auto& v : m[k]) v *= inv;
    for (std::size_t i = 0; i < s; ++i) {
      if (i == k || m[i][k] == 0) continue;
      const Rational c = m[i][k];
      for (std::size_t j = k; j <= s; ++j) m[i][j] -= c * m[k][j];
    }
  }
  std::vector<Rational> y(s);
  for (std::size_t i = 0; i < s; ++i) y[i] = m[i][s];
  return RadicalElem(f_, std::move(y));
}

RadicalElem operator/(const RadicalElem& a, const RadicalElem& b) { return a * b.inverse(); }

std::ostream& operator<<(std::ostream& os, const RadicalElem& x) {
  bool first = true;
  for (std::size_t j = 0; j < x.c_.size(); ++j) {
    if (x.c_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << x.c_[j];
    if (j > 0) os << "*" << x.f_.p() << "^(" << j << "/" << x.f_.s() << ")";
  }
  if (first) os << "0";
  return os;
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational c = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= c * m[k][j];
    }
  }
  return det;
}

// --- QPoly ------------------------------------------------------------------

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPoly QPoly::monomial(const Rational& c, std::size_t deg) {
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::from_roots(const std::vector<Rational>& roots) {
  QPoly out = constant(Rational(1));
  for (const auto& r : roots) out = out * QPoly({-r, Rational(1)});
  return out;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::operator()(const Rational& z) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + b.scaled(Rational(-1)); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(v));
}

QPoly QPoly::scaled(const Rational& c) const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

QPoly QPoly::truncated(std::size_t n) const {
  return QPoly(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(n, c_.size()))));
}

QPoly QPoly::derivative() const {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<unsigned long>(i));
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / lead());
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) {
  os << "[";
  for (std::size_t i = 0; i < p.c_.size(); ++i) os << (i ? ", " : "") << p.c_[i];
  return os << "]";
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = r[k + db] / b.lead();
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {QPoly(std::move(quot)), QPoly(std::move(r))};
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace torus_zeta
