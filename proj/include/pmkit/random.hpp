// Copyright 2026 The pmkit Authors. All rights reserved.
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

#ifndef PMKIT_RANDOM_HPP_
#define PMKIT_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace pmkit {

// Domain tags keep the outcome stream and the action stream of a run
// independent of each other.
enum class Stream : std::uint64_t {
  kEnvironment = 0x656e7669726f6e6dULL,  // "environm"
  kPolicy = 0x706f6c6963792121ULL,       // "policy!!"
};

std::uint64_t splitmix64(std::uint64_t x);

// seed = splitmix64(splitmix64(splitmix64(base) ^ run) ^ tag)
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t run, Stream stream);

// mt19937_64 plus inverse-CDF sampling on 53-bit uniforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform();  // [0, 1)
  // Index i with probability p[i]. p need not be normalised exactly; a draw
  // that falls past the last cumulative sum returns the last index with
  // positive mass.
  std::size_t sample(const std::vector<double>& p);

 private:
  std::mt19937_64 gen_;
};

}  // namespace pmkit

#endif  // PMKIT_RANDOM_HPP_
