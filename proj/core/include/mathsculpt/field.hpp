// Copyright 2026 The MathSculpt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <utility>

#include "mathsculpt/geom.hpp"

namespace mathsculpt {

/// How much the numeric value of a field can be trusted beyond its sign.
enum class Continuity {
  kExactDistance,  // |value| is the Euclidean distance to the boundary
  kContinuous,     // continuous, sign-correct, not a distance
  kSignOnly,       // values are exactly -1 or +1
};

enum class FieldSource { kPrimitive, kExpression, kCsgNode, kMeshParity };

/// Point -> real with inside <=> value <= 0. Evaluation must be pure so a
/// field can be sampled from many threads at once.
struct SignedField {
  std::function<double(const Vec3&)> fn;
  Continuity continuity = Continuity::kContinuous;
  FieldSource source = FieldSource::kExpression;

  SignedField() = default;
  SignedField(std::function<double(const Vec3&)> f, Continuity c, FieldSource s)
      : fn(std::move(f)), continuity(c), source(s) {}

  double operator()(const Vec3& p) const { return fn(p); }
  explicit operator bool() const { return static_cast<bool>(fn); }
};

}  // namespace mathsculpt
