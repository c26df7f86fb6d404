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

// Finite field descriptors. See gfq.hpp for element arithmetic.

#pragma once

#include <cstdint>

#include "torus_zeta/rational.hpp"

namespace torus_zeta {

struct VarX {};
struct VarT {};

template <class C, class Var>
class UPoly;
class FFElem;
using FFPoly = UPoly<FFElem, VarX>;

namespace detail {
struct FieldData;
}


class FieldDesc {
 public:
  FieldDesc() = default;
  explicit FieldDesc(const detail::FieldData* d) : d_(d) {}

  bool valid() const { return d_ != nullptr; }
  std::uint32_t p() const;
  /// Degree over base(); 1 for a prime field.
  int degree() const;
  /// Degree over GF(p).
  int abs_degree() const;
  bool is_prime_field() const;
  /// Invalid descriptor for a prime field.
  FieldDesc base() const;
  /// The field size q.
  const Integer& order() const;
  /// q as a machine integer; throws Overflow above 2^62.
  std::uint64_t order_u64() const;
  /// Monic irreducible defining polynomial over base(); X for a prime field.
  const FFPoly& modulus() const;
  /// The prime subfield GF(p).
  FieldDesc prime_field() const;
  /// True when this field is `sub` or is built over it through the tower.
  bool contains(const FieldDesc& sub) const;

  const detail::FieldData* data() const { return d_; }

  friend bool operator==(const FieldDesc& a, const FieldDesc& b) { return a.d_ == b.d_; }

 private:
  const detail::FieldData* d_ = nullptr;
};

}  // namespace torus_zeta
