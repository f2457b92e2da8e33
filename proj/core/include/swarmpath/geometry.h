// Copyright 2026 The swarmpath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWARMPATH_GEOMETRY_H_
#define SWARMPATH_GEOMETRY_H_

#include <cmath>

namespace swarmpath {

/// Planar vector. Positions are in km, velocities in km/s.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend constexpr Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// z-component of the planar cross product a x b.
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - b.x * a.y; }

inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

constexpr double squared_norm(const Vec2& v) { return v.x * v.x + v.y * v.y; }

inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }

/// Counterclockwise rotation by `angle` radians.
inline Vec2 rotate(const Vec2& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {v.x * c - v.y * s, v.x * s + v.y * c};
}

/// Unsigned angle between two nonzero vectors, in [0, pi].
inline double angle_between(const Vec2& a, const Vec2& b) {
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

}  // namespace swarmpath

#endif  // SWARMPATH_GEOMETRY_H_
