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

#include "torus_zeta/newton.hpp"

namespace torus_zeta {

namespace {

// Cross product sign of (b - a) x (c - a); <= 0 means b is not strictly below ac.
std::int64_t cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b.i - a.i) * (c.y - a.y) - (b.y - a.y) * (c.i - a.i);
}

}  // namespace

NewtonPolygon newton_polygon(const BiPoly& chi) {
  if (chi.is_zero()) throw Error(Errc::ZeroPolynomial, "Newton polygon of 0");
  NewtonPolygon out;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (!chi[i].is_zero()) out.points.push_back({static_cast<std::int64_t>(i), -static_cast<std::int64_t>(chi[i].degree())});
  }
  for (const auto& pt : out.points) {
    while (out.hull.size() >= 2 && cross(out.hull[out.hull.size() - 2], out.hull.back(), pt) <= 0) out.hull.pop_back();
    out.hull.push_back(pt);
  }
  for (std::size_t k = 1; k < out.hull.size(); ++k) {
    const auto& a = out.hull[k - 1];
    const auto& b = out.hull[k];
    Rational slope(b.y - a.y, b.i - a.i);
    slope.canonicalize();
    out.segments.push_back({slope, b.i - a.i});
  }
  return out;
}

ValuationSpectrum root_valuations(const NewtonPolygon& polygon) {
  ValuationSpectrum out;
  out.zero_roots = polygon.hull.empty() ? 0 : polygon.hull.front().i;
  // Slopes increase, so valuations -slope decrease; emit in increasing order.
  for (auto it = polygon.segments.rbegin(); it != polygon.segments.rend(); ++it) {
    out.entries.emplace_back(Rational(-it->slope), it->width);
  }
  return out;
}

FFPoly residual_polynomial(const BiPoly& chi) {
  const FieldDesc& f = chi.field();
  const NewtonPolygon polygon = newton_polygon(chi);
  for (std::size_t k = 1; k < polygon.hull.size(); ++k) {
    const auto& a = polygon.hull[k - 1];
    const auto& b = polygon.hull[k];
    if (a.y != b.y) continue;
    const auto top = static_cast<std::size_t>(-a.y);
    std::vector<FFElem> c;
    for (std::int64_t i = a.i; i <= b.i; ++i) c.push_back(chi[static_cast<std::size_t>(i)].coeff(top));
    return FFPoly(f, std::move(c));
  }
  return FFPoly::one(f);
}

std::vector<Rational> unit_residue_valuations(const BiPoly& chi, const FFElem& zeta, std::int64_t zeta_multiplicity) {
  if (zeta.is_zero()) throw Error(Errc::PreconditionViolated, "residue must be a unit");
  if (chi.is_zero() || !chi.lead().is_one()) throw Error(Errc::PreconditionViolated, "chi must be monic");
  const BiPoly lifted = chi.field() == zeta.field() ? chi : lift(chi, zeta.field());
  const BiPoly shifted = bipoly_shift(lifted, zeta);
  if (static_cast<std::int64_t>(shifted.low_order()) != zeta_multiplicity) {
    throw Error(Errc::StripMismatch, "root " + std::to_string(shifted.low_order()) + " times at zeta, declared " +
                                         std::to_string(zeta_multiplicity));
  }
  const BiPoly stripped = shifted.shifted_down(static_cast<std::size_t>(zeta_multiplicity));
  std::vector<Rational> out;
  for (const auto& [v, mult] : root_valuations(newton_polygon(stripped)).entries) {
    if (v > 0) out.insert(out.end(), static_cast<std::size_t>(mult), v);
  }
  return out;
}

}  // namespace torus_zeta
