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

#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "swarmpath/geometry.h"
#include "swarmpath/rng.h"

namespace swarmpath {
namespace {

TEST(Geometry, CrossSignGivesTurnDirection) {
  EXPECT_GT(cross({1, 0}, {0, 1}), 0.0);
  EXPECT_LT(cross({1, 0}, {0, -1}), 0.0);
  EXPECT_EQ(cross({1, 0}, {-1, 0}), 0.0);
}

TEST(Geometry, RotatePreservesNorm) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 v{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vec2 r = rotate(v, rng.uniform(-4, 4));
    EXPECT_NEAR(norm(r), norm(v), 1e-12 * (1 + norm(v)));
  }
}

TEST(Geometry, AngleBetween) {
  EXPECT_NEAR(angle_between({1, 0}, {0, 2}), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(angle_between({1, 0}, {-3, 0}), std::numbers::pi, 1e-15);
  EXPECT_EQ(angle_between({1, 1}, {2, 2}), 0.0);
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, UniformInUnitInterval) {
  Rng rng(1);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NEAR(sum / n, 0.5, 0.01);
}

TEST(Rng, BelowCoversRange) {
  Rng rng(3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(Rng, ForkIgnoresParentUsage) {
  Rng a(9), b(9);
  for (int i = 0; i < 10; ++i) b.next_u64();
  EXPECT_EQ(a.fork(5).next_u64(), b.fork(5).next_u64());
  EXPECT_NE(a.fork(5).next_u64(), a.fork(6).next_u64());
}

TEST(Rng, NormalMoments) {
  Rng rng(11);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.02);
}

}  // namespace
}  // namespace swarmpath
