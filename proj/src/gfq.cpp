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

#include "torus_zeta/gfq.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

namespace torus_zeta {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  int degree = 1;
  int abs_degree = 1;
  FieldDesc base;
  FieldDesc prime;
  FFPoly modulus;
  Integer order;
};

}  // namespace detail

namespace {

using detail::FieldData;
using Coords = FFElem::Coords;

struct Registry {
  std::mutex mu;
  std::map<std::uint64_t, std::unique_ptr<FieldData>> primes;
  std::map<std::pair<const FieldData*, std::vector<std::uint32_t>>, std::unique_ptr<FieldData>> extensions;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Flat-coordinate arithmetic. Spans have length F.abs_degree.
void add_into(const FieldData& F, std::span<std::uint32_t> a, std::span<const std::uint32_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint32_t s = a[i] + b[i];
    a[i] = s >= F.p ? s - F.p : s;
  }
}

void sub_into(const FieldData& F, std::span<std::uint32_t> a, std::span<const std::uint32_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + F.p - b[i];
}

void mul_flat(const FieldData& F, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
              std::span<std::uint32_t> out) {
  if (!F.base.valid()) {
    out[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % F.p);
    return;
  }
  const FieldData& B = *F.base.data();
  const std::size_t D = static_cast<std::size_t>(B.abs_degree);
  const std::size_t n = static_cast<std::size_t>(F.degree);
  std::vector<std::uint32_t> prod((2 * n - 1) * D, 0);
  std::vector<std::uint32_t> tmp(D);
  auto block = [&](std::vector<std::uint32_t>& v, std::size_t i) { return std::span<std::uint32_t>(v.data() + i * D, D); };
  for (std::size_t i = 0; i < n; ++i) {
    auto ai = a.subspan(i * D, D);
    if (std::all_of(ai.begin(), ai.end(), [](std::uint32_t x) { return x == 0; })) continue;
    for (std::size_t j = 0; j < n; ++j) {
      mul_flat(B, ai, b.subspan(j * D, D), tmp);
      add_into(B, block(prod, i + j), tmp);
    }
  }
  const auto& mod = F.modulus.coeffs();
  for (std::size_t k = 2 * n - 1; k-- > n;) {
    std::vector<std::uint32_t> c(prod.begin() + static_cast<std::ptrdiff_t>(k * D),
                                 prod.begin() + static_cast<std::ptrdiff_t>((k + 1) * D));
    for (std::size_t j = 0; j < n; ++j) {
      mul_flat(B, c, mod[j].flat(), tmp);
      sub_into(B, block(prod, k - n + j), tmp);
    }
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n * D), out.begin());
}

Integer field_order(std::uint32_t p, int abs_degree) { return pow_integer(Integer(p), static_cast<std::uint64_t>(abs_degree)); }

FFElem element_from_index(const FieldDesc& f, Integer index) {
  Coords c(static_cast<std::size_t>(f.abs_degree()), 0);
  for (auto& x : c) {
    x = static_cast<std::uint32_t>(mpz_fdiv_ui(index.get_mpz_t(), f.p()));
    mpz_fdiv_q_ui(index.get_mpz_t(), index.get_mpz_t(), f.p());
  }
  return FFElem(f, std::move(c));
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldDesc

std::uint32_t FieldDesc::p() const { return d_->p; }
int FieldDesc::degree() const { return d_->degree; }
int FieldDesc::abs_degree() const { return d_->abs_degree; }
bool FieldDesc::is_prime_field() const { return !d_->base.valid(); }
FieldDesc FieldDesc::base() const { return d_->base; }
const Integer& FieldDesc::order() const { return d_->order; }
const FFPoly& FieldDesc::modulus() const { return d_->modulus; }
FieldDesc FieldDesc::prime_field() const { return d_->prime; }

std::uint64_t FieldDesc::order_u64() const {
  if (mpz_sizeinbase(d_->order.get_mpz_t(), 2) > 62) throw Error(Errc::Overflow, "field order exceeds 2^62");
  return d_->order.get_ui();
}

bool FieldDesc::contains(const FieldDesc& sub) const {
  for (FieldDesc f = *this; f.valid(); f = f.base()) {
    if (f == sub) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// FFElem

FFElem::FFElem(const FieldDesc& f, std::int64_t v) : f_(f), c_(static_cast<std::size_t>(f.abs_degree()), 0) {
  const std::int64_t p = f.p();
  c_[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
}

FFElem::FFElem(const FieldDesc& f, Coords flat) : f_(f), c_(std::move(flat)) {
  if (c_.size() > static_cast<std::size_t>(f.abs_degree())) {
    throw Error(Errc::FieldMismatch, "too many coordinates for field element");
  }
  c_.resize(static_cast<std::size_t>(f.abs_degree()), 0);
  for (auto& x : c_) x %= f.p();
}

FFElem FFElem::from_relative(const FieldDesc& f, std::span<const FFElem> rel) {
  if (f.is_prime_field()) {
    if (rel.size() != 1 || !(rel[0].field() == f)) throw Error(Errc::FieldMismatch, "relative coordinates");
    return rel[0];
  }
  if (rel.size() != static_cast<std::size_t>(f.degree())) throw Error(Errc::DegreeMismatch, "relative coordinate count");
  Coords c;
  for (const auto& x : rel) {
    if (!(x.field() == f.base())) throw Error(Errc::FieldMismatch, "relative coordinate not in base field");
    c.insert(c.end(), x.c_.begin(), x.c_.end());
  }
  return FFElem(f, std::move(c));
}

FFElem FFElem::generator(const FieldDesc& f) {
  if (f.is_prime_field()) return FFElem::zero(f);
  std::vector<FFElem> rel(static_cast<std::size_t>(f.degree()), FFElem::zero(f.base()));
  if (rel.size() > 1) rel[1] = FFElem::one(f.base());
  return from_relative(f, rel);
}

FFElem FFElem::relative(int i) const {
  if (f_.is_prime_field()) return *this;
  const auto D = static_cast<std::size_t>(f_.base().abs_degree());
  Coords c(c_.begin() + static_cast<std::ptrdiff_t>(i * D), c_.begin() + static_cast<std::ptrdiff_t>((i + 1) * D));
  return FFElem(f_.base(), std::move(c));
}

bool FFElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool FFElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

FFElem& FFElem::operator+=(const FFElem& o) {
  if (!(f_ == o.f_)) throw Error(Errc::FieldMismatch, "adding elements of different fields");
  add_into(*f_.data(), std::span(c_.data(), c_.size()), o.flat());
  return *this;
}

FFElem& FFElem::operator-=(const FFElem& o) {
  if (!(f_ == o.f_)) throw Error(Errc::FieldMismatch, "subtracting elements of different fields");
  sub_into(*f_.data(), std::span(c_.data(), c_.size()), o.flat());
  return *this;
}

FFElem& FFElem::operator*=(const FFElem& o) {
  if (!(f_ == o.f_)) throw Error(Errc::FieldMismatch, "multiplying elements of different fields");
  if (f_.is_prime_field()) {
    c_[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[0]) * o.c_[0] % f_.p());
    return *this;
  }
  Coords out(c_.size(), 0);
  mul_flat(*f_.data(), flat(), o.flat(), std::span(out.data(), out.size()));
  c_ = std::move(out);
  return *this;
}

FFElem FFElem::operator-() const {
  FFElem z = zero(f_);
  return z -= *this;
}

FFElem FFElem::inverse() const {
  if (is_zero()) throw Error(Errc::PreconditionViolated, "inverse of zero");
  if (f_.is_prime_field()) {
    FFElem r = *this;
    r.c_[0] = inv_mod(c_[0], f_.p());
    return r;
  }
  return pow(f_.order() - 2);
}

FFElem FFElem::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  FFElem result = one(f_);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

FFElem FFElem::pth_root() const {
  if (f_.abs_degree() == 1) return *this;
  return pow(f_.order() / f_.p());
}

std::strong_ordering operator<=>(const FFElem& a, const FFElem& b) {
  for (std::size_t i = std::max(a.c_.size(), b.c_.size()); i-- > 0;) {
    const std::uint32_t x = i < a.c_.size() ? a.c_[i] : 0;
    const std::uint32_t y = i < b.c_.size() ? b.c_[i] : 0;
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const FFElem& x) {
  if (!x.f_.valid()) return os << "<null>";
  if (x.f_.is_prime_field()) return os << x.c_[0];
  os << '(';
  for (int i = 0; i < x.f_.degree(); ++i) os << (i ? "," : "") << x.relative(i);
  return os << ')';
}

FFElem embed(const FFElem& x, const FieldDesc& target) {
  if (x.field() == target) return x;
  if (!target.contains(x.field())) throw Error(Errc::FieldMismatch, "element is not in a subfield of the target");
  FFElem::Coords c(x.flat().begin(), x.flat().end());
  return FFElem(target, std::move(c));
}

// ---------------------------------------------------------------------------
// Integers

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto g = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = g(x);
      y = g(g(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  if (n == 0) throw Error(Errc::PreconditionViolated, "factor_u64(0)");
  std::map<std::uint64_t, int> f;
  for (std::uint64_t d = 2; d <= 1000000 && d * d <= n; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  factor_rec(n, f);
  return {f.begin(), f.end()};
}

// ---------------------------------------------------------------------------
// Field construction

FieldDesc prime_field(std::uint64_t p) {
  if (p > 0xFFFFFFFFULL || !is_prime(p)) throw Error(Errc::NonPrime, "p = " + std::to_string(p) + " is not a prime");
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto& slot = reg.primes[p];
  if (!slot) {
    auto data = std::make_unique<FieldData>();
    data->p = static_cast<std::uint32_t>(p);
    data->order = Integer(static_cast<unsigned long>(p));
    const FieldDesc self(data.get());
    data->prime = self;
    data->modulus = FFPoly::variable(self);
    slot = std::move(data);
  }
  return FieldDesc(slot.get());
}

namespace {

FieldDesc intern_extension(const FieldDesc& base, const FFPoly& modulus) {
  std::vector<std::uint32_t> key;
  for (const auto& c : modulus.coeffs()) key.insert(key.end(), c.flat().begin(), c.flat().end());
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto& slot = reg.extensions[{base.data(), key}];
  if (!slot) {
    auto data = std::make_unique<FieldData>();
    data->p = base.p();
    data->degree = modulus.degree();
    data->abs_degree = base.abs_degree() * modulus.degree();
    data->base = base;
    data->prime = base.prime_field();
    data->modulus = modulus;
    data->order = field_order(data->p, data->abs_degree);
    slot = std::move(data);
  }
  return FieldDesc(slot.get());
}

}  // namespace

FieldDesc make_extension(const FieldDesc& base, const FFPoly& modulus) {
  if (!(modulus.field() == base)) throw Error(Errc::FieldMismatch, "modulus is not over the base field");
  if (modulus.degree() < 1 || !modulus.lead().is_one()) throw Error(Errc::DegreeMismatch, "modulus must be monic of degree >= 1");
  if (!is_irreducible(modulus)) throw Error(Errc::ReducibleModulus, "extension modulus is reducible");
  return intern_extension(base, modulus);
}

FFPoly first_irreducible(const FieldDesc& base, int e) {
  if (e < 1) throw Error(Errc::DegreeMismatch, "degree must be >= 1");
  const Integer& q = base.order();
  const Integer count = pow_integer(q, static_cast<std::uint64_t>(e));
  for (Integer n = 0; n < count; ++n) {
    std::vector<FFElem> c;
    Integer rest = n;
    for (int i = 0; i < e; ++i) {
      Integer digit;
      mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
      c.push_back(element_from_index(base, digit));
    }
    c.push_back(FFElem::one(base));
    FFPoly f(base, std::move(c));
    if (is_irreducible(f)) return f;
  }
  throw Error(Errc::InternalInconsistency, "no irreducible polynomial found");
}

FieldDesc make_field(std::uint64_t p, int e, const std::optional<FFPoly>& modulus) {
  const FieldDesc gfp = prime_field(p);
  if (e < 1) throw Error(Errc::DegreeMismatch, "extension degree must be >= 1");
  if (modulus) {
    if (!(modulus->field() == gfp)) throw Error(Errc::FieldMismatch, "modulus must have GF(p) coefficients");
    if (modulus->degree() != e || !modulus->lead().is_one()) {
      throw Error(Errc::DegreeMismatch, "modulus must be monic of degree " + std::to_string(e));
    }
    if (!is_irreducible(*modulus)) throw Error(Errc::ReducibleModulus, "field modulus is reducible");
  }
  if (e == 1) return gfp;
  return intern_extension(gfp, modulus ? *modulus : first_irreducible(gfp, e));
}

// ---------------------------------------------------------------------------
// Polynomial algorithms over GF(q)

bool is_irreducible(const FFPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FFPoly g = monic(f);
  const FieldDesc& F = g.field();
  const FFPoly x = FFPoly::variable(F);
  std::vector<FFPoly> frob{rem(x, g)};  // frob[i] = X^{q^i} mod g
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), F.order(), g));
  if (!(frob[static_cast<std::size_t>(n)] == frob[0])) return false;
  for (const auto& [r, k] : factor_u64(static_cast<std::uint64_t>(n))) {
    (void)k;
    const FFPoly h = frob[static_cast<std::size_t>(n) / r] - x;
    if (h.is_zero() || poly_gcd(g, h).degree() > 0) return false;
  }
  return true;
}

namespace {

FFPoly pth_root_poly(const FFPoly& f) {
  const std::uint32_t p = f.field().p();
  std::vector<FFElem> c;
  for (std::size_t i = 0; i < f.size(); i += p) c.push_back(f[i].pth_root());
  return FFPoly(f.field(), std::move(c));
}

void sff(const FFPoly& f, int scale, std::vector<std::pair<FFPoly, int>>& out) {
  if (f.degree() < 1) return;
  const int p = static_cast<int>(f.field().p());
  const FFPoly d = derivative(f);
  if (d.is_zero()) {
    sff(pth_root_poly(f), scale * p, out);
    return;
  }
  FFPoly c = poly_gcd(f, d);
  FFPoly w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    FFPoly y = poly_gcd(w, c);
    FFPoly fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(monic(fac), i * scale);
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) sff(pth_root_poly(c), scale * p, out);
}

std::vector<std::pair<FFPoly, int>> distinct_degree(FFPoly f) {
  std::vector<std::pair<FFPoly, int>> out;
  const FieldDesc& F = f.field();
  const FFPoly x = FFPoly::variable(F);
  FFPoly h = rem(x, f);
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = powmod(h, F.order(), f);
    FFPoly g = poly_gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = exact_div(f, g);
      h = rem(h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(monic(f), f.degree());
  return out;
}

FFPoly random_poly(const FieldDesc& F, int below_degree, std::mt19937_64& rng) {
  std::vector<FFElem> c;
  std::uniform_int_distribution<std::uint32_t> dist(0, F.p() - 1);
  for (int i = 0; i < below_degree; ++i) {
    FFElem::Coords coords(static_cast<std::size_t>(F.abs_degree()));
    for (auto& v : coords) v = dist(rng);
    c.emplace_back(F, std::move(coords));
  }
  return FFPoly(F, std::move(c));
}

void equal_degree(const FFPoly& g, int d, std::mt19937_64& rng, std::vector<FFPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FieldDesc& F = g.field();
  const Integer qd = pow_integer(F.order(), static_cast<std::uint64_t>(d));
  const bool even = F.p() == 2;
  for (;;) {
    const FFPoly a = random_poly(F, g.degree(), rng);
    if (a.degree() < 1) continue;
    FFPoly b;
    if (even) {
      // Absolute trace to GF(2): sum of a^{2^i}, i < log2(q^d).
      const std::size_t m = mpz_sizeinbase(qd.get_mpz_t(), 2) - 1;
      FFPoly term = a;
      b = a;
      for (std::size_t i = 1; i < m; ++i) {
        term = rem(term * term, g);
        b += term;
      }
    } else {
      b = powmod(a, (qd - 1) / 2, g) - FFPoly::one(F);
    }
    if (b.is_zero()) continue;
    FFPoly h = poly_gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(exact_div(g, h), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FFPoly, int>> squarefree_decomposition(const FFPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree decomposition of 0");
  std::vector<std::pair<FFPoly, int>> out;
  sff(monic(f), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : poly_less(a.first, b.first);
  });
  return out;
}

FFPoly squarefree_part(const FFPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree part of 0");
  FFPoly r = FFPoly::one(f.field());
  for (const auto& [g, k] : squarefree_decomposition(f)) {
    (void)k;
    r *= g;
  }
  return r;
}

std::vector<std::pair<FFPoly, int>> ff_factor(const FFPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "factoring 0");
  std::mt19937_64 rng(0x7a657461u);
  std::vector<std::pair<FFPoly, int>> out;
  for (const auto& [sq, mult] : squarefree_decomposition(f)) {
    for (const auto& [g, d] : distinct_degree(sq)) {
      std::vector<FFPoly> parts;
      equal_degree(g, d, rng, parts);
      for (auto& part : parts) out.emplace_back(monic(part), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

std::uint64_t order_of_root(const FFPoly& h) {
  if (h.is_zero()) throw Error(Errc::ZeroPolynomial, "order_of_root(0)");
  if (h[0].is_zero()) throw Error(Errc::ZeroRoot, "h(0) = 0");
  if (!is_irreducible(h)) throw Error(Errc::NotIrreducible, "order_of_root needs an irreducible polynomial");
  const FFPoly g = monic(h);
  const FieldDesc& F = g.field();
  const Integer group = pow_integer(F.order(), static_cast<std::uint64_t>(g.degree())) - 1;
  if (mpz_sizeinbase(group.get_mpz_t(), 2) > 63) throw Error(Errc::Overflow, "q^deg(h) - 1 exceeds 2^63");
  const std::uint64_t n = group.get_ui();
  const FFPoly x = FFPoly::variable(F);
  std::uint64_t ord = n;
  for (const auto& [l, e] : factor_u64(n)) {
    for (int i = 0; i < e; ++i) {
      if (powmod(x, Integer(static_cast<unsigned long>(ord / l)), g).is_one()) {
        ord /= l;
      } else {
        break;
      }
    }
  }
  return ord;
}

}  // namespace torus_zeta
