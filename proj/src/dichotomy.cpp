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

#include "torus_zeta/dichotomy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "torus_zeta/error.hpp"

namespace torus_zeta {
namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// Some solution of m x = rhs, free variables set to zero; nullopt when the
// system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(RMatrix m, std::vector<Rational> rhs, std::size_t unknowns) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::swap(rhs[piv], rhs[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < unknowns; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < unknowns; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(unknowns, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = rhs[i];
  return x;
}

void require_rational(const SeriesWindow& w, const char* what) {
  if (!w.is_rational()) throw Error(Errc::PreconditionViolated, std::string(what) + " needs a window over Q");
}

std::vector<std::complex<double>> embedding_values(const RadicalField& f) {
  // Images of p^(1/s) under the s complex embeddings.
  std::vector<std::complex<double>> out;
  const double r = std::pow(static_cast<double>(f.p()), 1.0 / f.s());
  for (std::uint32_t k = 0; k < f.s(); ++k) out.push_back(std::polar(r, 2 * std::numbers::pi * k / f.s()));
  return out;
}

double max_embedding_abs(const RadicalElem& x) {
  if (x.field().s() == 1) return std::abs(x.coord(0).get_d());
  double best = 0.0;
  for (const auto& root : embedding_values(x.field())) {
    std::complex<double> acc = 0.0, pw = 1.0;
    for (const auto& c : x.coords()) {
      acc += c.get_d() * pw;
      pw *= root;
    }
    best = std::max(best, std::abs(acc));
  }
  return best;
}

}  // namespace

SeriesWindow SeriesWindow::from_rationals(const std::vector<Rational>& values, std::size_t offset) {
  SeriesWindow w;
  w.offset = offset;
  for (const auto& v : values) w.coeffs.emplace_back(w.field, v);
  return w;
}

bool SeriesWindow::is_rational() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const RadicalElem& x) { return x.is_rational(); });
}

std::vector<Rational> SeriesWindow::rationals() const {
  std::vector<Rational> out;
  for (const auto& x : coeffs) out.push_back(x.rational());
  return out;
}

RadicalElem hankel_det(const SeriesWindow& w, std::size_t l, std::size_t m) {
  if (w.coeffs.empty() || l < w.offset || l + 2 * m > w.last()) {
    throw Error(Errc::WindowTooShort, "Hankel determinant needs a_" + std::to_string(l) + " .. a_" +
                                          std::to_string(l + 2 * m));
  }
  const std::size_t n = m + 1;
  std::vector<std::vector<RadicalElem>> h(n, std::vector<RadicalElem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = w.at(l + i + j);
  RadicalElem det(w.field, Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && h[piv][k].is_zero()) ++piv;
    if (piv == n) return RadicalElem(w.field);
    if (piv != k) {
      std::swap(h[piv], h[k]);
      det = -det;
    }
    det = det * h[k][k];
    const RadicalElem inv = h[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (h[i][k].is_zero()) continue;
      const RadicalElem c = h[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) h[i][j] -= c * h[k][j];
    }
  }
  return det;
}

std::vector<Rational> series_of(const QPoly& P, const QPoly& Q, std::size_t n) {
  if (Q.coeff(0) == 0) throw Error(Errc::PreconditionViolated, "Q(0) must be nonzero");
  std::vector<Rational> a(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = P.coeff(k);
    for (std::size_t i = 1; i <= k && i <= static_cast<std::size_t>(std::max(Q.degree(), 0)); ++i)
      acc -= Q.coeff(i) * a[k - i];
    a[k] = acc / Q.coeff(0);
  }
  return a;
}

std::optional<RationalFunction> kronecker_detect(const SeriesWindow& w, std::size_t m, std::size_t d) {
  require_rational(w, "kronecker_detect");
  if (w.offset != 0 || w.coeffs.empty() || 2 * (m + d) > w.last()) {
    throw Error(Errc::WindowTooShort, "Kronecker detection needs a_0 .. a_" + std::to_string(2 * (m + d)));
  }
  for (std::size_t i = 0; i <= d; ++i) {
    if (!hankel_det(w, 0, m + i).is_zero()) return std::nullopt;
  }
  const std::vector<Rational> a = w.rationals();
  // Q = 1 + q_1 z + ... + q_m z^m with [z^j](Q f) = 0 for j = m .. top.
  const auto solve_upto = [&](std::size_t top) {
    RMatrix sys;
    std::vector<Rational> rhs;
    for (std::size_t j = m; j <= top; ++j) {
      std::vector<Rational> row(m);
      for (std::size_t i = 1; i <= m; ++i) row[i - 1] = a[j - i];
      sys.push_back(std::move(row));
      rhs.push_back(-a[j]);
    }
    return solve_linear(sys, rhs, m);
  };
  // The short system is underdetermined once m > d + 1; pinning free
  // variables to zero can then pick a Q that only fits the first few terms.
  // Every coefficient in the window is used when they are consistent.
  auto sol = solve_upto(w.last());
  if (!sol) sol = solve_upto(m + d);
  if (!sol) return std::nullopt;
  std::vector<Rational> qc{Rational(1)};
  qc.insert(qc.end(), sol->begin(), sol->end());
  QPoly Q(std::move(qc));
  QPoly P = (Q * QPoly(std::vector<Rational>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(m)))).truncated(m);

  const QPoly g = poly_gcd(P, Q);
  P = divrem(P, g).first;
  Q = divrem(Q, g).first;
  const Rational q0 = Q.coeff(0);
  P = P.scaled(Rational(1) / q0);
  Q = Q.scaled(Rational(1) / q0);

  const std::vector<Rational> check = series_of(P, Q, m + d + 1);
  if (!std::equal(check.begin(), check.end(), a.begin())) return std::nullopt;
  return RationalFunction{P, Q};
}

std::optional<KroneckerHit> kronecker_search(const SeriesWindow& w, std::size_t d) {
  require_rational(w, "kronecker_search");
  if (w.coeffs.empty()) return std::nullopt;
  for (std::size_t m = 1; 2 * (m + d) <= w.last(); ++m) {
    if (auto hit = kronecker_detect(w, m, d)) return KroneckerHit{m, std::move(*hit)};
  }
  return std::nullopt;
}

Rational field_norm(const RadicalElem& x) { return rational_det(multiplication_matrix(x)); }

Integer denominator(const RadicalElem& x) {
  Integer out(1);
  for (const auto& c : x.coords()) out = lcm(out, c.get_den());
  return out;
}

bool ExceptionalSet::contains(std::uint64_t k) const { return std::binary_search(members.begin(), members.end(), k); }

std::uint64_t ExceptionalSet::count_upto(std::uint64_t n) const {
  return static_cast<std::uint64_t>(std::upper_bound(members.begin(), members.end(), n) - members.begin());
}

ExceptionalSet build_exceptional_set(std::uint64_t p, std::uint64_t bound) {
  if (bound < 1) throw Error(Errc::PreconditionViolated, "bound must be at least 1");
  if (p < 2) throw Error(Errc::NonPrime, "p must be prime");
  ExceptionalSet S;
  S.p = p;
  S.bound = bound;
  S.c5 = 1.0 / std::log(static_cast<double>(p));
  unsigned __int128 lo = 1;  // p^{l-1}
  for (std::uint64_t l = 1; lo < bound; ++l) {
    const unsigned __int128 hi = lo * p;
    // j = floor(log l / log p), computed exactly.
    std::uint64_t j = 0;
    for (unsigned __int128 pj = p; pj <= l; pj *= p) ++j;
    unsigned __int128 modulus = 1;
    for (std::uint64_t i = 0; i < l - j; ++i) modulus *= p;
    const unsigned __int128 top = std::min<unsigned __int128>(hi, bound);
    for (unsigned __int128 k = (lo / modulus + 1) * modulus; k <= top; k += modulus) {
      S.members.push_back(static_cast<std::uint64_t>(k));
    }
    lo = hi;
  }
  for (unsigned __int128 n = 1; n < bound; n *= p) {
    S.density.emplace_back(static_cast<std::uint64_t>(n), S.count_upto(static_cast<std::uint64_t>(n)));
  }
  S.density.emplace_back(bound, S.count_upto(bound));
  return S;
}

std::uint64_t exceptional_density_bound(std::uint64_t p, std::uint64_t n) {
  std::uint64_t c = 0;
  for (unsigned __int128 pc = 1; pc < n; pc *= p) ++c;
  return (c + 1) * (c + 1);
}

LcmGrowth lcm_den_growth(const SeriesWindow& w, const ExceptionalSet* S, std::size_t n) {
  if (w.coeffs.empty() || n > w.last() || n < w.offset) {
    throw Error(Errc::WindowTooShort, "denominator growth needs a_" + std::to_string(n));
  }
  LcmGrowth out;
  out.L = 1;
  for (std::size_t k = w.offset; k <= n; ++k) {
    if (!(S && S->contains(k))) out.L = lcm(out.L, denominator(w.at(k)));
    if (k >= 1) {
      out.prefix.push_back(out.L);
      out.growth.push_back(log_abs(out.L) / static_cast<double>(k));
    }
  }
  return out;
}

BinomialBasis binomial_basis(const QPoly& P) {
  BinomialBasis out;
  out.M = 0;
  if (P.is_zero()) return out;
  const std::size_t D = static_cast<std::size_t>(P.degree());
  std::vector<Rational> diff;
  for (std::size_t i = 0; i <= D; ++i) {
    diff.push_back(P(Rational(static_cast<long>(i))));
    out.M = std::max(out.M, Rational(abs(diff.back())));
  }
  // alpha_i is the leading entry of the i-th forward-difference row.
  for (std::size_t i = 0; i <= D; ++i) {
    out.alpha.push_back(diff[0]);
    for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
    diff.pop_back();
  }
  Integer bound_factor(1);  // 2^i i!
  for (std::size_t i = 0; i <= D; ++i) {
    if (i > 0) bound_factor *= 2 * static_cast<unsigned long>(i);
    if (abs(out.alpha[i]) > out.M * bound_factor) out.bound_holds = false;
  }
  return out;
}

QPoly vanishing_poly(const ExceptionalSet& S, std::uint64_t bound) {
  std::vector<Rational> roots;
  for (const auto s : S.members) {
    if (s <= bound) roots.emplace_back(Integer(static_cast<unsigned long>(s)));
  }
  return QPoly::from_roots(roots);
}

RecurrenceFit fit_polyexp(const SeriesWindow& w) {
  require_rational(w, "fit_polyexp");
  if (w.coeffs.empty()) throw Error(Errc::PreconditionViolated, "empty window");
  const std::vector<Rational> u = w.rationals();
  const std::size_t len = u.size();
  RecurrenceFit fit;
  if (std::all_of(u.begin(), u.end(), [](const Rational& x) { return x == 0; })) {
    fit.charpoly = QPoly::constant(Rational(1));
    fit.proper = true;
    return fit;
  }
  for (std::size_t r = 1; r <= len; ++r) {
    // u_{n+r} = sum_i c_i u_{n+r-i} for every n with n + r < len.
    RMatrix sys;
    std::vector<Rational> rhs;
    for (std::size_t n = 0; n + r < len; ++n) {
      std::vector<Rational> row(r);
      for (std::size_t i = 1; i <= r; ++i) row[i - 1] = u[n + r - i];
      sys.push_back(std::move(row));
      rhs.push_back(u[n + r]);
    }
    const auto c = solve_linear(sys, rhs, r);
    if (!c) continue;
    std::vector<Rational> cp(r + 1, Rational(0));
    cp[r] = 1;
    for (std::size_t i = 1; i <= r; ++i) cp[r - i] = -(*c)[i - 1];
    fit.r = r;
    fit.charpoly = QPoly(std::move(cp));
    fit.s_roots = static_cast<std::size_t>(fit.charpoly.degree() -
                                           poly_gcd(fit.charpoly, fit.charpoly.derivative()).degree());
    fit.proper = 2 * r <= len;
    return fit;
  }
  throw Error(Errc::InternalInconsistency, "no recurrence found");  // r = len always fits
}

SeriesWindow multiply_window_by_poly(const SeriesWindow& w, const QPoly& Q, std::size_t start_index) {
  SeriesWindow out;
  out.field = w.field;
  out.offset = w.offset;
  for (std::size_t n = 0; n < w.coeffs.size(); ++n) {
    const Rational factor = Q(Rational(static_cast<long>(start_index + n)));
    out.coeffs.push_back(w.coeffs[n] * RadicalElem(w.field, factor));
  }
  return out;
}

RationalWindow rational_window(const QPoly& P, const QPoly& Q, std::size_t M, std::size_t N) {
  std::vector<std::string> violated;
  if (Q.coeff(0) == 0) violated.emplace_back("Q(0) != 0");
  if (poly_gcd(P, Q).degree() > 0) violated.emplace_back("gcd(P,Q) = 1");
  if (P.degree() > static_cast<int>(M) - 1) violated.emplace_back("deg P <= M-1");
  if (Q.degree() > static_cast<int>(M)) violated.emplace_back("deg Q <= M");
  if (N < M) violated.emplace_back("N >= M");
  if (!violated.empty()) {
    std::string msg = "rational_window preconditions violated:";
    for (const auto& v : violated) msg += " " + v + ";";
    throw Error(Errc::PreconditionViolated, msg);
  }
  const std::vector<Rational> a = series_of(P, Q, N + 1);
  RationalWindow out;
  out.window = SeriesWindow::from_rationals(std::vector<Rational>(a.begin() + static_cast<std::ptrdiff_t>(M), a.end()), M);
  out.expected_rank = static_cast<std::size_t>(Q.degree());
  return out;
}

std::vector<PolyaRow> polya_decay_report(const SeriesWindow& w, std::size_t n_max) {
  if (w.offset != 0 || w.coeffs.empty() || 2 * n_max > w.last()) {
    throw Error(Errc::WindowTooShort, "decay report needs a_0 .. a_" + std::to_string(2 * n_max));
  }
  std::vector<PolyaRow> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const RadicalElem delta = hankel_det(w, 0, n);
    PolyaRow row;
    row.n = n;
    if (!delta.is_zero()) {
      const double log_mag = w.field.s() == 1 ? log_abs(delta.rational()) : std::log(max_embedding_abs(delta));
      row.abs_delta = std::exp(log_mag);
      row.root = std::exp(log_mag / static_cast<double>(n * (n + 1)));
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace torus_zeta
