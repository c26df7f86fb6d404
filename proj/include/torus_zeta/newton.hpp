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

// Newton polygons of chi in K[t][X] for the valuation v = -deg_t.
//
// Convention: a hull segment of slope s and width w accounts for exactly w
// roots (with multiplicity, in an algebraic closure) of valuation -s, i.e.
// of absolute value q^{s}.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "torus_zeta/funcfield.hpp"
#include "torus_zeta/rational.hpp"

namespace torus_zeta {

struct LatticePoint {
  std::int64_t i = 0;  // X-degree
  std::int64_t y = 0;  // -deg_t of the coefficient
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct HullSegment {
  Rational slope;
  std::int64_t width = 0;
  friend bool operator==(const HullSegment&, const HullSegment&) = default;
};

struct NewtonPolygon {
  std::vector<LatticePoint> points;
  /// Lower convex hull vertices; slopes strictly increase left to right.
  std::vector<LatticePoint> hull;
  std::vector<HullSegment> segments;
};

struct ValuationSpectrum {
  /// (valuation, multiplicity), ordered by increasing valuation.
  std::vector<std::pair<Rational, std::int64_t>> entries;
  std::int64_t zero_roots = 0;
};

/// Errors: ZeroPolynomial.
NewtonPolygon newton_polygon(const BiPoly& chi);

ValuationSpectrum root_valuations(const NewtonPolygon& polygon);

/// Reduction of the slope-0 segment: its roots are the residues of the unit
/// roots of chi. Constant 1 when there is no slope-0 segment.
FFPoly residual_polynomial(const BiPoly& chi);

/// Valuations v(eta - zeta) > 0 over the roots eta != zeta of chi with residue
/// zeta, one entry per root, sorted. chi is lifted into zeta's field when
/// needed. `zeta_multiplicity` is the number of roots literally equal to zeta.
/// Errors: StripMismatch, PreconditionViolated (zeta = 0 or chi not monic).
std::vector<Rational> unit_residue_valuations(const BiPoly& chi, const FFElem& zeta, std::int64_t zeta_multiplicity);

}  // namespace torus_zeta
