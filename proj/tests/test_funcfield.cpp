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

#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "torus_zeta/funcfield.hpp"

using namespace torus_zeta;
using namespace torus_zeta::testing;

namespace {

// Sum_i c_i(t) M^i; zero for the characteristic polynomial.
PolyMatrix eval_at_matrix(const BiPoly& chi, const PolyMatrix& m) {
  const FieldDesc& f = m.field();
  PolyMatrix acc(f, m.dim());
  PolyMatrix power = PolyMatrix::identity(f, m.dim());
  for (std::size_t i = 0; i < chi.size(); ++i) {
    PolyMatrix term = power;
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c) term(r, c) *= chi[i];
    }
    acc = acc + term;
    power = power * m;
  }
  return acc;
}

BiPoly bipoly(const FieldDesc& f, std::vector<TPoly> c) { return BiPoly(f, std::move(c)); }

}  // namespace

TEST_CASE("abs_value examples") {
  const FieldDesc f2 = prime_field(2), f7 = prime_field(7);
  CHECK(abs_value(tpoly(f2, {1, 0, 0, 1})) == AbsVal::power(3));
  CHECK(abs_value(TPoly(f2)).zero);
  CHECK(abs_value(tpoly(f7, {5})) == AbsVal::power(0));
}

TEST_CASE("absolute value is multiplicative and ultrametric") {
  std::mt19937_64 rng(7);
  for (const auto& f : {prime_field(2), prime_field(7), make_field(2, 2)}) {
    for (int i = 0; i < 200; ++i) {
      const TPoly x = random_field_poly<VarT>(f, static_cast<int>(rng() % 6), rng);
      const TPoly y = random_field_poly<VarT>(f, static_cast<int>(rng() % 6), rng);
      CHECK(abs_value(x * y) == abs_value(x) * abs_value(y));
      const AbsVal s = abs_value(x + y);
      CHECK((s <= abs_value(x) || s <= abs_value(y)));
    }
  }
}

TEST_CASE("mat_det examples") {
  const FieldDesc f2 = prime_field(2), f7 = prime_field(7);
  CHECK(mat_det(matrix(f2, {{{1}, {0, 1}}, {{1}, {1, 1}}})) == tpoly(f2, {1}));
  CHECK(mat_det(PolyMatrix::identity(f7, 3)) == tpoly(f7, {1}));
  CHECK(mat_det(matrix(f2, {{{}, {0, 1}}, {{1}, {0, 1}}})) == tpoly(f2, {0, 1}));
}

TEST_CASE("mat_det agrees with cofactor expansion and is multiplicative") {
  std::mt19937_64 rng(31);
  const std::vector<FieldDesc> fields = {prime_field(2), prime_field(3), prime_field(7), make_field(2, 2)};
  for (int trial = 0; trial < 50; ++trial) {
    const FieldDesc& f = fields[trial % fields.size()];
    const std::size_t d = 1 + rng() % 4;
    const PolyMatrix a = random_matrix(f, d, 2, rng), b = random_matrix(f, d, 2, rng);
    CHECK(mat_det(a) == cofactor_det(a));
    CHECK(mat_det(a * b) == mat_det(a) * mat_det(b));
  }
}

TEST_CASE("mat_pow examples") {
  const FieldDesc f2 = prime_field(2);
  const PolyMatrix a = matrix(f2, {{{}, {0, 1}}, {{1}, {0, 1}}});
  CHECK(mat_pow(a, 2) == matrix(f2, {{{0, 1}, {0, 0, 1}}, {{0, 1}, {0, 1, 1}}}));
  CHECK(mat_pow(PolyMatrix::identity(f2, 3), 17) == PolyMatrix::identity(f2, 3));
  CHECK(mat_pow(a, 1) == a);
  CHECK(mat_pow(a, 7) == a * a * a * a * a * a * a);
}

TEST_CASE("charpoly examples") {
  const FieldDesc f2 = prime_field(2), f7 = prime_field(7);
  const PolyMatrix a = matrix(f2, {{{}, {0, 1}}, {{1}, {0, 1}}});
  CHECK(charpoly(a) == bipoly(f2, {tpoly(f2, {0, 1}), tpoly(f2, {0, 1}), tpoly(f2, {1})}));
  const PolyMatrix diag = matrix(f7, {{{6}, {}}, {{}, {2}}});
  CHECK(charpoly(diag) == bipoly(f7, {tpoly(f7, {5}), tpoly(f7, {6}), tpoly(f7, {1})}));
  CHECK(charpoly(PolyMatrix(f2, 2)) == BiPoly::monomial(f2, TPoly::one(f2), 2));
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  std::mt19937_64 rng(41);
  const std::vector<FieldDesc> fields = {prime_field(2), prime_field(3), prime_field(7), make_field(2, 2)};
  for (int trial = 0; trial < 30; ++trial) {
    const FieldDesc& f = fields[trial % fields.size()];
    const PolyMatrix m = random_matrix(f, 1 + rng() % 3, 2, rng);
    const BiPoly chi = charpoly(m);
    CHECK(chi.degree() == static_cast<int>(m.dim()));
    CHECK(chi.lead().is_one());
    CHECK(eval_at_matrix(chi, m) == PolyMatrix(f, m.dim()));
  }
}

TEST_CASE("smith_normal_form examples") {
  const FieldDesc f2 = prime_field(2);
  auto snf = smith_normal_form(matrix(f2, {{{0, 1}, {}}, {{}, {0, 1, 1}}}));
  CHECK(snf.invariant_factors == std::vector<TPoly>{tpoly(f2, {0, 1}), tpoly(f2, {0, 1, 1})});
  snf = smith_normal_form(matrix(f2, {{{1, 1}, {}}, {{}, {0, 1}}}));
  CHECK(snf.invariant_factors == std::vector<TPoly>{tpoly(f2, {1}), tpoly(f2, {0, 1, 1})});
  snf = smith_normal_form(matrix(f2, {{{1}, {0, 1}}, {{1}, {1, 1}}}));
  CHECK(snf.invariant_factors == std::vector<TPoly>{tpoly(f2, {1}), tpoly(f2, {1})});
  try {
    smith_normal_form(matrix(f2, {{{1}, {1}}, {{1}, {1}}}));
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularMatrix);
  }
}

TEST_CASE("smith_normal_form invariants on random matrices") {
  std::mt19937_64 rng(43);
  const std::vector<FieldDesc> fields = {prime_field(2), prime_field(3), prime_field(7), make_field(2, 2)};
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const FieldDesc& f = fields[trial % fields.size()];
    const PolyMatrix m = random_matrix(f, 1 + rng() % 3, 2, rng);
    const TPoly det = mat_det(m);
    if (det.is_zero()) continue;
    ++tested;
    const SmithForm snf = smith_normal_form(m);
    CHECK(snf.U * m * snf.V == snf.D);
    CHECK(mat_det(snf.U).degree() == 0);
    CHECK(mat_det(snf.V).degree() == 0);
    AbsVal prod = AbsVal::power(0);
    for (std::size_t i = 0; i < snf.invariant_factors.size(); ++i) {
      const TPoly& b = snf.invariant_factors[i];
      CHECK(b.lead().is_one());
      prod = prod * abs_value(b);
      if (i + 1 < snf.invariant_factors.size()) CHECK(rem(snf.invariant_factors[i + 1], b).is_zero());
      for (std::size_t j = 0; j < m.dim(); ++j) {
        if (j != i) CHECK(snf.D(i, j).is_zero());
      }
    }
    CHECK(prod == abs_value(det));
  }
  CHECK(tested > 30);
}

TEST_CASE("fixed_point_count_snf") {
  const FieldDesc f2 = prime_field(2);
  const Integer q = 2;
  CHECK(fixed_point_count_snf(matrix(f2, {{{0, 1}, {}}, {{}, {1, 1}}})).value(q) == 4);
  CHECK(fixed_point_count_snf(PolyMatrix::identity(f2, 2)).value(q) == 0);
  CHECK(fixed_point_count_snf(PolyMatrix(f2, 2)).value(q) == 1);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldDesc f = trial % 2 ? prime_field(3) : make_field(2, 2);
    const PolyMatrix b = random_matrix(f, 1 + rng() % 3, 2, rng);
    const TPoly det = mat_det(b - PolyMatrix::identity(f, b.dim()));
    CHECK(fixed_point_count_snf(b) == abs_value(det));
  }
}

TEST_CASE("bipoly_shift examples") {
  const FieldDesc f2 = prime_field(2);
  const BiPoly chi = bipoly(f2, {tpoly(f2, {0, 1}), tpoly(f2, {0, 1}), tpoly(f2, {1})});
  CHECK(bipoly_shift(chi, FFElem::one(f2)) == bipoly(f2, {tpoly(f2, {1}), tpoly(f2, {0, 1}), tpoly(f2, {1})}));
  CHECK(bipoly_shift(chi, FFElem::zero(f2)) == chi);
  const FieldDesc f7 = prime_field(7);
  const FFElem z(f7, 3);
  CHECK(bipoly_shift(bipoly(f7, {tconst(-z), TPoly::one(f7)}), z) == BiPoly::variable(f7));
  CHECK_THROWS_AS(bipoly_shift(chi, FFElem::one(f7)), Error);
}
