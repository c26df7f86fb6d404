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

#include "torus_zeta/error.hpp"
#include "torus_zeta/rational.hpp"

#include <cmath>

namespace torus_zeta {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroRoot: return "ZeroRoot";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::BothZero: return "BothZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::StripMismatch: return "StripMismatch";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::NonIntegerExponent: return "NonIntegerExponent";
    case Errc::InsufficientTerms: return "InsufficientTerms";
    case Errc::WindowTooShort: return "WindowTooShort";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw Error(Errc::ParseError, "malformed rational '" + s + "'");
  }
  r.canonicalize();
  return r;
}

Integer pow_integer(const Integer& base, std::uint64_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::int64_t valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw Error(Errc::PreconditionViolated, "valuation of zero");
  Integer m = n;
  std::int64_t v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::int64_t valuation(const Rational& x, std::uint64_t p) {
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

std::uint64_t valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

double log_abs(const Integer& x) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& x) {
  return log_abs(Integer(x.get_num())) - log_abs(Integer(x.get_den()));
}

}  // namespace torus_zeta
