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

#ifndef SWARMPATH_RNG_H_
#define SWARMPATH_RNG_H_

#include <cstdint>
#include <random>

namespace swarmpath {

/// Seeded random stream. Built on std::mt19937_64, whose output sequence is
/// fixed by the standard, with the floating-point mapping done here so that
/// draws are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  /// Standard normal draw (Box-Muller, no caching).
  double normal();

  /// Independent child stream; children with different tags do not overlap
  /// in practice and do not depend on how much the parent has been used.
  Rng fork(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive stream seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace swarmpath

#endif  // SWARMPATH_RNG_H_
