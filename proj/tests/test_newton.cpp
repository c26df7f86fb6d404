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

#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "torus_zeta/newton.hpp"

using namespace torus_zeta;
using namespace torus_zeta::testing;

namespace {

BiPoly bipoly(const FieldDesc& f, std::vector<TPoly> c) { return BiPoly(f, std::move(c)); }

// X^2 + tX + t over GF(2), the characteristic polynomial of [[0,t],[1,t]].
BiPoly companion_chi() {
  const FieldDesc f2 = prime_field(2);
  return bipoly(f2, {tpoly(f2, {0, 1}), tpoly(f2, {0, 1}), tpoly(f2, {1})});
}

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("newton_polygon examples") {
  const FieldDesc f2 = prime_field(2);
  const NewtonPolygon poly1 = newton_polygon(companion_chi());
  CHECK(poly1.hull == std::vector<LatticePoint>{{0, -1}, {1, -1}, {2, 0}});
  CHECK(poly1.segments == std::vector<HullSegment>{{q(0), 1}, {q(1), 1}});

  const NewtonPolygon poly2 = newton_polygon(bipoly(f2, {tpoly(f2, {0, 1}), tpoly(f2, {1})}));
  CHECK(poly2.segments == std::vector<HullSegment>{{q(1), 1}});

  const NewtonPolygon poly3 = newton_polygon(bipoly(f2, {tpoly(f2, {0, 1}), TPoly(f2), tpoly(f2, {1})}));
  CHECK(poly3.segments == std::vector<HullSegment>{{q(1, 2), 2}});

  CHECK_THROWS_AS(newton_polygon(BiPoly(f2)), Error);
}

TEST_CASE("root_valuations examples") {
  const FieldDesc f2 = prime_field(2);
  const auto s1 = root_valuations(newton_polygon(companion_chi()));
  CHECK(s1.entries == std::vector<std::pair<Rational, std::int64_t>>{{q(-1), 1}, {q(0), 1}});
  CHECK(s1.zero_roots == 0);

  const auto s2 = root_valuations(newton_polygon(BiPoly::monomial(f2, TPoly::one(f2), 2)));
  CHECK(s2.zero_roots == 2);
  CHECK(s2.entries.empty());

  const auto s3 = root_valuations(newton_polygon(bipoly(f2, {tpoly(f2, {0, 1}), TPoly(f2), tpoly(f2, {1})})));
  CHECK(s3.entries == std::vector<std::pair<Rational, std::int64_t>>{{q(-1, 2), 2}});
}

TEST_CASE("residual_polynomial examples") {
  const FieldDesc f2 = prime_field(2), f7 = prime_field(7);
  CHECK(residual_polynomial(companion_chi()) == poly(f2, {1, 1}));
  const BiPoly diag = bipoly(f7, {tpoly(f7, {5}), tpoly(f7, {6}), tpoly(f7, {1})});
  CHECK(residual_polynomial(diag) == poly(f7, {5, 6, 1}));
  CHECK(residual_polynomial(bipoly(f2, {tpoly(f2, {0, 1}), tpoly(f2, {1})})).is_one());
}

TEST_CASE("unit_residue_valuations examples") {
  const FieldDesc f2 = prime_field(2);
  CHECK(unit_residue_valuations(companion_chi(), FFElem::one(f2), 0) == std::vector<Rational>{q(1)});
  // (X - 1)(X - t) = X^2 + (t + 1)X + t
  const BiPoly chi2 = bipoly(f2, {tpoly(f2, {0, 1}), tpoly(f2, {1, 1}), tpoly(f2, {1})});
  CHECK(unit_residue_valuations(chi2, FFElem::one(f2), 1).empty());
  const FieldDesc f7 = prime_field(7);
  const FFElem z(f7, 4);
  CHECK(unit_residue_valuations(bipoly(f7, {tconst(-z), TPoly::one(f7)}), z, 1).empty());
  try {
    unit_residue_valuations(chi2, FFElem::one(f2), 0);
    FAIL("expected StripMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::StripMismatch);
  }
}

TEST_CASE("unit_residue_valuations lifts into an extension") {
  // Over GF(4) the roots w, w^2 of X^2 + X + 1 are constant eigenvalues.
  const FieldDesc f2 = prime_field(2);
  const FieldDesc f4 = make_field(2, 2);
  const BiPoly chi = bipoly(f2, {tpoly(f2, {1}), tpoly(f2, {1}), tpoly(f2, {1})});
  const FFElem w = FFElem::generator(f4);
  CHECK(unit_residue_valuations(chi, w, 1).empty());
  CHECK(unit_residue_valuations(chi, w * w, 1).empty());
}

TEST_CASE("valuation spectrum properties on random polynomials") {
  std::mt19937_64 rng(53);
  const std::vector<FieldDesc> fields = {prime_field(2), prime_field(3), prime_field(7), make_field(2, 2)};
  for (int trial = 0; trial < 60; ++trial) {
    const FieldDesc& f = fields[trial % fields.size()];
    std::vector<TPoly> c;
    const int d = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < d; ++i) c.push_back(random_field_poly<VarT>(f, static_cast<int>(rng() % 4), rng));
    c.push_back(TPoly::one(f));
    const BiPoly chi(f, std::move(c));
    const NewtonPolygon polygon = newton_polygon(chi);
    const ValuationSpectrum spectrum = root_valuations(polygon);

    std::int64_t total = spectrum.zero_roots;
    Rational weighted = 0, negative_part = 0;
    std::int64_t slope0 = 0;
    for (const auto& [v, m] : spectrum.entries) {
      total += m;
      weighted += v * m;
      if (v < 0) negative_part -= v * m;
      if (v == 0) slope0 = m;
    }
    CHECK(total == chi.degree());
    const std::size_t z = chi.low_order();
    CHECK(weighted == Rational(chi.lead().degree() - chi[z].degree()));
    CHECK(is_integer(negative_part));
    CHECK(residual_polynomial(chi).degree() == slope0);
    for (std::size_t k = 1; k < polygon.segments.size(); ++k) CHECK(polygon.segments[k - 1].slope < polygon.segments[k].slope);
  }
}

TEST_CASE("root_valuations on explicitly split polynomials") {
  std::mt19937_64 rng(59);
  const std::vector<FieldDesc> fields = {prime_field(2), prime_field(3), prime_field(7), make_field(2, 2)};
  for (int trial = 0; trial < 20; ++trial) {
    const FieldDesc& f = fields[trial % fields.size()];
    BiPoly chi = BiPoly::one(f);
    std::map<Rational, std::int64_t> expected;
    std::int64_t zeros = 0;
    const int d = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < d; ++i) {
      const TPoly lambda = random_field_poly<VarT>(f, static_cast<int>(rng() % 4), rng);
      chi *= BiPoly(f, {-lambda, TPoly::one(f)});
      if (lambda.is_zero()) {
        ++zeros;
      } else {
        ++expected[Rational(-lambda.degree())];
      }
    }
    const ValuationSpectrum spectrum = root_valuations(newton_polygon(chi));
    CHECK(spectrum.zero_roots == zeros);
    CHECK(spectrum.entries == std::vector<std::pair<Rational, std::int64_t>>(expected.begin(), expected.end()));
  }
}
