// Copyright 2026 The amecodes Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ame {

/// Thrown when an enumeration would exceed its operation budget. Exhaustive
/// searches refuse up front instead of running open-ended; callers can retry
/// with a larger budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Counts approximate elementary field operations against a hard limit.
/// Costs are charged before a loop runs, so a refusal is deterministic and
/// independent of thread count.
class Budget {
   public:
    static constexpr std::uint64_t kDefaultLimit = 100'000'000;

    Budget() : limit_(kDefaultLimit) {}
    explicit Budget(std::uint64_t limit) : limit_(limit) {}

    void charge(std::uint64_t cost, const char* activity) {
        if (cost > limit_ - used_ || used_ > limit_) {
            throw BudgetExceeded(std::string(activity) + ": would need about " +
                                 std::to_string(used_ + cost) + " field operations, budget is " +
                                 std::to_string(limit_));
        }
        used_ += cost;
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

   private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace ame
