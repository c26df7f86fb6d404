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

#include "torus_zeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include "torus_zeta/newton.hpp"

namespace torus_zeta {
namespace {

// ---------------------------------------------------------------------------
// Table-driven arithmetic for fields with at most 256 elements. Elements are
// indexed by their flattened prime-field coordinates read as base-p digits.
// Periodic-point counts need det(A^k - I) for k up to ~64, which for d = 3
// means polynomial entries of degree a few hundred; the generic element type
// is too heavy for that inner loop.

constexpr std::uint64_t kTableLimit = 256;

struct SmallField {
  std::uint32_t q = 0;
  std::vector<std::uint8_t> add, mul, neg, inv;
  std::vector<FFElem> elems;

  std::uint8_t index(const FFElem& x) const {
    std::uint32_t idx = 0;
    const auto flat = x.flat();
    const std::uint32_t p = static_cast<std::uint32_t>(x.field().p());
    for (std::size_t i = flat.size(); i-- > 0;) idx = idx * p + flat[i];
    return static_cast<std::uint8_t>(idx);
  }
};

std::shared_ptr<const SmallField> build_small_field(const FieldDesc& f) {
  auto sf = std::make_shared<SmallField>();
  const auto q = static_cast<std::uint32_t>(f.order_u64());
  const auto p = static_cast<std::uint32_t>(f.p());
  const auto n = static_cast<std::size_t>(f.abs_degree());
  sf->q = q;
  for (std::uint32_t idx = 0; idx < q; ++idx) {
    FFElem::Coords c(n, 0);
    for (std::uint32_t v = idx, i = 0; i < n; ++i, v /= p) c[i] = v % p;
    sf->elems.emplace_back(f, c);
  }
  sf->add.resize(q * q);
  sf->mul.resize(q * q);
  sf->neg.resize(q);
  sf->inv.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    sf->neg[a] = sf->index(-sf->elems[a]);
    if (a != 0) sf->inv[a] = sf->index(sf->elems[a].inverse());
    for (std::uint32_t b = 0; b < q; ++b) {
      sf->add[a * q + b] = sf->index(sf->elems[a] + sf->elems[b]);
      sf->mul[a * q + b] = sf->index(sf->elems[a] * sf->elems[b]);
    }
  }
  return sf;
}

std::shared_ptr<const SmallField> small_field(const FieldDesc& f) {
  static std::mutex mu;
  static std::map<const void*, std::shared_ptr<const SmallField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[f.data()];
  if (!slot) slot = build_small_field(f);
  return slot;
}

// Polynomials in t over a SmallField, constant term first, no trailing zeros.
using SPoly = std::vector<std::uint8_t>;

class SmallRing {
 public:
  explicit SmallRing(const SmallField& f) : f_(f), q_(f.q) {}

  static void trim(SPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  SPoly from(const TPoly& x) const {
    SPoly out;
    out.reserve(x.size());
    for (const auto& c : x.coeffs()) out.push_back(f_.index(c));
    return out;
  }

  SPoly add(const SPoly& a, const SPoly& b) const {
    SPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::uint8_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
      out[i] = f_.add[x * q_ + y];
    }
    trim(out);
    return out;
  }

  SPoly sub(const SPoly& a, const SPoly& b) const {
    SPoly nb(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) nb[i] = f_.neg[b[i]];
    return add(a, nb);
  }

  SPoly mul(const SPoly& a, const SPoly& b) const {
    if (a.empty() || b.empty()) return {};
    SPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      const std::uint8_t* row = &f_.mul[a[i] * q_];
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint8_t& slot = out[i + j];
        slot = f_.add[slot * q_ + row[b[j]]];
      }
    }
    trim(out);
    return out;
  }

  // a / b where b divides a.
  SPoly exact_div(SPoly a, const SPoly& b) const {
    if (b.empty()) throw Error(Errc::PreconditionViolated, "division by zero polynomial");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw Error(Errc::PreconditionViolated, "inexact polynomial division");
    const std::uint8_t lead_inv = f_.inv[b.back()];
    SPoly quot(a.size() - b.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
      const std::uint8_t c = f_.mul[a[k + b.size() - 1] * q_ + lead_inv];
      quot[k] = c;
      if (c == 0) continue;
      const std::uint8_t nc = f_.neg[c];
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint8_t& slot = a[k + j];
        slot = f_.add[slot * q_ + f_.mul[nc * q_ + b[j]]];
      }
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      if (a[i] != 0) throw Error(Errc::PreconditionViolated, "inexact polynomial division");
    }
    return quot;
  }

 private:
  const SmallField& f_;
  std::uint32_t q_;
};

using SMatrix = std::vector<SPoly>;  // row-major, d*d

SMatrix smat_mul(const SmallRing& R, const SMatrix& a, const SMatrix& b, std::size_t d) {
  SMatrix out(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SPoly acc;
      for (std::size_t l = 0; l < d; ++l) acc = R.add(acc, R.mul(a[i * d + l], b[l * d + j]));
      out[i * d + j] = std::move(acc);
    }
  }
  return out;
}

SMatrix smat_pow(const SmallRing& R, SMatrix base, std::uint64_t k, std::size_t d) {
  SMatrix result(d * d);
  for (std::size_t i = 0; i < d; ++i) result[i * d + i] = SPoly{1};
  while (k > 0) {
    if (k & 1) result = smat_mul(R, result, base, d);
    k >>= 1;
    if (k > 0) base = smat_mul(R, base, base, d);
  }
  return result;
}

// Degree of det(P - I), or nullopt when it vanishes.
AbsVal smat_abs_det_minus_identity(const SmallRing& R, SMatrix m, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = R.sub(m[i * d + i], SPoly{1});
  std::vector<std::vector<SPoly>> rows(d);
  for (std::size_t i = 0; i < d; ++i) rows[i].assign(m.begin() + static_cast<std::ptrdiff_t>(i * d),
                                                     m.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
  // Fraction-free elimination; only the degree of the result matters, so the
  // sign bookkeeping of row swaps is skipped.
  SPoly prev{1};
  for (std::size_t k = 0; k < d; ++k) {
    if (rows[k][k].empty()) {
      std::size_t i = k + 1;
      while (i < d && rows[i][k].empty()) ++i;
      if (i == d) return AbsVal::of_zero();
      std::swap(rows[i], rows[k]);
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        rows[i][j] = R.exact_div(R.sub(R.mul(rows[i][j], rows[k][k]), R.mul(rows[i][k], rows[k][j])), prev);
      }
    }
    prev = rows[k][k];
  }
  return AbsVal::power(static_cast<std::int64_t>(rows[d - 1][d - 1].size()) - 1);
}

bool use_tables(const FieldDesc& f) { return f.order() <= kTableLimit; }

SMatrix to_smatrix(const SmallRing& R, const PolyMatrix& A) {
  const std::size_t d = A.dim();
  SMatrix m(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i * d + j] = R.from(A(i, j));
  return m;
}

AbsVal generic_nk(const PolyMatrix& power) {
  return abs_value(mat_det(power - PolyMatrix::identity(power.field(), power.dim())));
}

// ---------------------------------------------------------------------------

// a / h in F_q[t][X] when the monic constant polynomial h divides a.
std::optional<BiPoly> divide_by_constant_poly(const BiPoly& a, const FFPoly& h) {
  const FieldDesc& f = a.field();
  const int dh = h.degree();
  if (a.degree() < dh) return std::nullopt;
  std::vector<TPoly> rem = a.coeffs();
  std::vector<TPoly> quot(static_cast<std::size_t>(a.degree() - dh + 1), TPoly(f));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const TPoly c = rem[k + static_cast<std::size_t>(dh)];
    quot[k] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dh; ++j) rem[k + static_cast<std::size_t>(j)] -= c.scaled(h[static_cast<std::size_t>(j)]);
  }
  for (int j = 0; j < dh; ++j) {
    if (!rem[static_cast<std::size_t>(j)].is_zero()) return std::nullopt;
  }
  return BiPoly(f, std::move(quot));
}

std::int64_t constant_factor_multiplicity(BiPoly chi, const FFPoly& h) {
  std::int64_t k = 0;
  while (auto next = divide_by_constant_poly(chi, h)) {
    chi = std::move(*next);
    ++k;
  }
  return k;
}

// gcd over m of sum_j [t^m](c_j) X^j: its roots are exactly the constants
// that are roots of chi.
FFPoly slice_gcd(const BiPoly& chi) {
  const FieldDesc& f = chi.field();
  int top = 0;
  for (const auto& c : chi.coeffs()) top = std::max(top, c.degree());
  FFPoly g(f);
  for (int m = 0; m <= top; ++m) {
    std::vector<FFElem> slice;
    for (const auto& c : chi.coeffs()) slice.push_back(c.coeff(static_cast<std::size_t>(m)));
    FFPoly s(f, std::move(slice));
    if (s.is_zero()) continue;
    g = g.is_zero() ? monic(s) : poly_gcd(g, s);
  }
  return g;
}

FFPoly power(const FFPoly& h, std::int64_t k) {
  FFPoly out = FFPoly::one(h.field());
  for (std::int64_t i = 0; i < k; ++i) out *= h;
  return out;
}

// A root of the irreducible g in GF(q)[X]/(g), or in GF(q) itself when linear.
FFElem root_of(const FFPoly& g) {
  if (g.degree() == 1) return -g[0] / g[1];
  return FFElem::generator(make_extension(g.field(), monic(g)));
}

std::vector<Rational> series_product(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n) {
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> SpectralData::rou_orders() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : rou) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.order);
  return out;
}

AbsVal nk_oracle(const PolyMatrix& A, std::uint64_t k) {
  if (k == 0) throw Error(Errc::PreconditionViolated, "k must be positive");
  if (A.dim() == 0) return AbsVal::of_zero();
  if (!use_tables(A.field())) return generic_nk(mat_pow(A, k));
  const auto sf = small_field(A.field());
  const SmallRing R(*sf);
  return smat_abs_det_minus_identity(R, smat_pow(R, to_smatrix(R, A), k, A.dim()), A.dim());
}

std::vector<AbsVal> nk_sequence(const PolyMatrix& A, std::size_t kmax, unsigned threads) {
  std::vector<AbsVal> out(kmax);
  if (kmax == 0) return out;
  const std::size_t d = A.dim();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(kmax));

  // Each worker handles a contiguous block of k, stepping A^k -> A^{k+1}.
  auto work = [&](std::size_t lo, std::size_t hi) {
    if (d == 0) return;
    if (!use_tables(A.field())) {
      PolyMatrix pw = mat_pow(A, lo);
      for (std::size_t k = lo; k < hi; ++k) {
        out[k - 1] = generic_nk(pw);
        pw = pw * A;
      }
      return;
    }
    const auto sf = small_field(A.field());
    const SmallRing R(*sf);
    const SMatrix a = to_smatrix(R, A);
    SMatrix pw = smat_pow(R, a, lo, d);
    for (std::size_t k = lo; k < hi; ++k) {
      out[k - 1] = smat_abs_det_minus_identity(R, pw, d);
      if (k + 1 < hi) pw = smat_mul(R, pw, a, d);
    }
  };

  if (threads == 1) {
    work(1, kmax + 1);
    return out;
  }
  // Later powers are costlier, so blocks shrink as k grows: boundaries split
  // the k range evenly by k^2.
  std::vector<std::size_t> cuts{1};
  for (unsigned t = 1; t < threads; ++t) {
    const double frac = static_cast<double>(t) / threads;
    cuts.push_back(std::max(cuts.back(), static_cast<std::size_t>(1 + kmax * std::sqrt(frac))));
  }
  cuts.push_back(kmax + 1);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        work(cuts[t], cuts[t + 1]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

SpectralData spectral_data(const PolyMatrix& A) {
  if (A.dim() == 0) throw Error(Errc::PreconditionViolated, "empty matrix");
  return spectral_data_of_charpoly(charpoly(A));
}

SpectralData spectral_data_of_charpoly(const BiPoly& chi) {
  const FieldDesc& f = chi.field();
  SpectralData S;
  S.field = f;
  S.p = f.p();
  S.q = f.order();
  S.d = static_cast<std::size_t>(chi.degree());

  const ValuationSpectrum spectrum = root_valuations(newton_polygon(chi));
  S.zero_eigen_multiplicity = spectrum.zero_roots;
  std::int64_t unit_width = 0;
  Rational r(0);
  for (const auto& [v, mult] : spectrum.entries) {
    if (v < 0) {
      r -= v * mult;
      S.large_eigen_count += mult;
    } else if (v > 0) {
      S.small_eigen_count += mult;
    } else {
      unit_width = mult;
    }
  }
  if (!is_integer(r)) throw Error(Errc::InternalInconsistency, "r(A) exponent is not an integer");
  S.r_exponent = r.get_num().get_si();

  // Constant eigenvalues, which are exactly the roots of unity.
  std::map<std::uint64_t, std::int64_t> rou;
  FFPoly rou_part = FFPoly::one(f);
  std::map<std::vector<FFElem>, std::int64_t> rou_mult;  // keyed by coefficients of h
  const FFPoly x = FFPoly::variable(f);
  for (const auto& [h, e] : ff_factor(slice_gcd(chi))) {
    (void)e;
    if (h == x) continue;
    const std::int64_t k = constant_factor_multiplicity(chi, h);
    if (k == 0) throw Error(Errc::InternalInconsistency, "slice gcd factor does not divide chi");
    rou[order_of_root(h)] += k * h.degree();
    rou_part *= power(h, k);
    rou_mult[h.coeffs()] = k;
  }

  // The remaining unit eigenvalues, grouped by residue.
  const FFPoly residual = monic(residual_polynomial(chi));
  FFPoly rest;
  try {
    rest = exact_div(residual, rou_part);
  } catch (const Error&) {
    throw Error(Errc::InternalInconsistency, "root-of-unity part does not divide the residual polynomial");
  }
  std::map<std::pair<std::uint64_t, Rational>, std::int64_t> units;
  if (rest.degree() > 0) {
    for (const auto& [g, e] : ff_factor(rest)) {
      const auto it = rou_mult.find(g.coeffs());
      const std::int64_t strip = it == rou_mult.end() ? 0 : it->second;
      const std::vector<Rational> vals = unit_residue_valuations(chi, root_of(g), strip);
      if (static_cast<std::int64_t>(vals.size()) != e) {
        throw Error(Errc::InternalInconsistency, "residue multiplicity disagrees with the shifted polygon");
      }
      const std::uint64_t n = order_of_root(g);
      for (const auto& v : vals) units[{n, v}] += g.degree();
    }
  }

  std::int64_t counted = 0;
  for (const auto& [m, mult] : rou) {
    S.rou.push_back({m, mult});
    counted += mult;
  }
  for (const auto& [key, mult] : units) {
    S.unit_nonrou.push_back({key.first, key.second, mult});
    counted += mult;
  }
  if (counted != unit_width) {
    throw Error(Errc::InternalInconsistency, "unit eigenvalue count " + std::to_string(counted) +
                                                 " differs from slope-0 width " + std::to_string(unit_width));
  }
  return S;
}

AbsVal nk_formula(const SpectralData& S, std::uint64_t k) {
  if (k == 0) throw Error(Errc::PreconditionViolated, "k must be positive");
  for (const auto& e : S.rou) {
    if (k % e.order == 0) return AbsVal::of_zero();
  }
  Rational loss(0);
  for (const auto& e : S.unit_nonrou) {
    if (k % e.order == 0) loss += e.eta1_exponent * e.multiplicity;
  }
  const Integer pv = pow_integer(Integer(static_cast<unsigned long>(S.p)), valuation(k, S.p));
  const Rational exponent = Rational(Integer(static_cast<long>(S.r_exponent)) * static_cast<unsigned long>(k)) -
                            Rational(pv) * loss;
  if (!is_integer(exponent) || exponent < 0 || !exponent.get_num().fits_slong_p()) {
    throw Error(Errc::NonIntegerExponent, "N_" + std::to_string(k) + " exponent " + to_fraction_string(exponent));
  }
  return AbsVal::power(exponent.get_num().get_si());
}

ClosedForm closed_form(const SpectralData& S) {
  ClosedForm C;
  C.r_exponent = S.r_exponent;
  C.q = S.q;
  const std::vector<std::uint64_t> m = S.rou_orders();
  if (m.size() > 24) throw Error(Errc::Overflow, "too many root-of-unity eigenvalues for subset expansion");
  std::map<std::uint64_t, Rational> merged{{1, Rational(-1)}};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.size()); ++mask) {
    SubsetFactor sf;
    sf.L = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (mask >> i & 1) {
        sf.indices.push_back(i);
        sf.L = std::lcm(sf.L, m[i]);
      }
    }
    const long sign = sf.indices.size() % 2 == 1 ? 1 : -1;
    sf.exponent = Rational(sign, static_cast<unsigned long>(sf.L));
    sf.exponent.canonicalize();
    merged[sf.L] += sf.exponent;
    C.subset_factors.push_back(std::move(sf));
  }
  for (const auto& [L, e] : merged) {
    if (e != 0) C.combined.push_back({L, e});
  }
  return C;
}

ZetaVerdict classify(const SpectralData& S) {
  for (std::size_t j = 0; j < S.unit_nonrou.size(); ++j) {
    const std::uint64_t n = S.unit_nonrou[j].order;
    const bool covered = std::any_of(S.rou.begin(), S.rou.end(), [&](const RouEntry& e) { return n % e.order == 0; });
    if (!covered) {
      Rational radius(Integer(1), pow_integer(S.q, static_cast<std::uint64_t>(S.r_exponent)));
      return Transcendental{radius, j + 1};
    }
  }
  Algebraic a{closed_form(S), true};
  for (const auto& c : a.closed_form.combined) a.rational = a.rational && is_integer(c.exponent);
  return a;
}

std::vector<Rational> zeta_series(const std::vector<AbsVal>& N, const Integer& q, std::size_t terms) {
  if (terms == 0) return {};
  if (N.size() + 1 < terms) {
    throw Error(Errc::InsufficientTerms, std::to_string(terms) + " terms need N_1..N_" + std::to_string(terms - 1));
  }
  std::vector<Integer> n;
  for (std::size_t k = 0; k + 1 < terms; ++k) n.push_back(N[k].value(q));
  std::vector<Rational> b(terms, Rational(0));
  b[0] = 1;
  for (std::size_t i = 1; i < terms; ++i) {
    Rational acc(0);
    for (std::size_t k = 1; k <= i; ++k) {
      if (n[k - 1] != 0) acc += n[k - 1] * b[i - k];
    }
    b[i] = acc / Integer(static_cast<unsigned long>(i));
  }
  return b;
}

std::vector<Rational> binomial_power_series(const Rational& c, std::uint64_t L, const Rational& alpha,
                                            std::size_t terms) {
  std::vector<Rational> out(terms, Rational(0));
  if (terms == 0) return out;
  if (L == 0) throw Error(Errc::PreconditionViolated, "L must be positive");
  Rational g(1);
  for (std::size_t j = 0; j * L < terms; ++j) {
    out[j * L] = g;
    g *= c * (Rational(static_cast<long>(j)) - alpha) / Rational(static_cast<long>(j + 1));
  }
  return out;
}

std::vector<Rational> closed_form_series(const ClosedForm& C, std::size_t terms) {
  std::vector<Rational> out(terms, Rational(0));
  if (terms == 0) return out;
  out[0] = 1;
  const Integer r = pow_integer(C.q, static_cast<std::uint64_t>(C.r_exponent));
  for (const auto& fac : C.combined) {
    const Rational c(pow_integer(r, fac.L));
    out = series_product(out, binomial_power_series(c, fac.L, fac.exponent, terms), terms);
  }
  return out;
}

SeriesWindow dichotomy_coefficients(const SpectralData& S, std::size_t kmax) {
  SeriesWindow w;
  w.field = RadicalField(S.p, 1);
  w.coeffs.emplace_back(w.field, Rational(0));
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    const AbsVal n = nk_formula(S, k);
    if (n.zero) {
      w.coeffs.emplace_back(w.field, Rational(0));
      continue;
    }
    // c_k = q^{E - Rk}, with E - Rk <= 0.
    const std::int64_t deficit = S.r_exponent * static_cast<std::int64_t>(k) - n.exponent;
    w.coeffs.emplace_back(w.field, Rational(Integer(1), pow_integer(S.q, static_cast<std::uint64_t>(deficit))));
  }
  return w;
}

bool mixed_degeneracy(const std::vector<AbsVal>& N) {
  const auto zeros = std::count_if(N.begin(), N.end(), [](const AbsVal& v) { return v.zero; });
  return zeros > 0 && zeros < static_cast<std::ptrdiff_t>(N.size());
}

}  // namespace torus_zeta
