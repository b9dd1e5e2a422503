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

#include "pmkit/random.hpp"

#include "pmkit/error.hpp"

namespace pmkit {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t run, Stream stream) {
  return splitmix64(splitmix64(splitmix64(base) ^ run) ^ static_cast<std::uint64_t>(stream));
}

double Sampler::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::size_t Sampler::sample(const std::vector<double>& p) {
  const double u = uniform();
  double acc = 0;
  std::size_t last = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) continue;
    acc += p[i];
    last = i;
    if (u < acc) return i;
  }
  if (last == p.size()) throw PreconditionError("sample: distribution has no positive mass");
  return last;
}

}  // namespace pmkit
