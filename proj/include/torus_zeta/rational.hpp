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

// Exact rational helpers shared by the series and dichotomy code.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace torus_zeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// "num/den" with den > 0; integers still carry "/1".
std::string to_fraction_string(const Rational& x);

/// Parses "a", "a/b" or "-a/b". Throws Error(ParseError) on malformed text.
Rational parse_fraction(std::string_view text);

Integer pow_integer(const Integer& base, std::uint64_t exp);
Integer lcm(const Integer& a, const Integer& b);

/// p-adic valuation of a nonzero integer.
std::int64_t valuation(const Integer& n, std::uint64_t p);
/// p-adic valuation of a nonzero rational.
std::int64_t valuation(const Rational& x, std::uint64_t p);
std::uint64_t valuation(std::uint64_t n, std::uint64_t p);

bool is_integer(const Rational& x);

/// Natural log of |x| for x != 0, safe for magnitudes far outside double range.
double log_abs(const Integer& x);
double log_abs(const Rational& x);

}  // namespace torus_zeta
