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

#ifndef PMKIT_POLICY_HPP_
#define PMKIT_POLICY_HPP_

#include <string>
#include <vector>

#include "pmkit/game.hpp"

namespace pmkit {

// A learner playing a fixed game. Each round the runner calls distribution()
// (idempotent until the next update), samples an action from it and reports
// the observed symbol through update().
class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string name() const = 0;
  // Over the game's full action set; actions the policy never plays get 0.
  virtual const std::vector<double>& distribution() = 0;
  virtual void update(Action action, Symbol symbol) = 0;
  // 1-based index of the round whose distribution is served next.
  virtual std::size_t round() const = 0;
};

}  // namespace pmkit

#endif  // PMKIT_POLICY_HPP_
