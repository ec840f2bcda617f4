#pragma once

#include <cstdint>
#include <vector>

#include "segcover/geometry.hpp"

namespace segcover {

// Optimal continuous cover via exact set cover over the canonical candidate
// positions. Throws BudgetExceededError when the node budget runs out.
Cover exact_continuous(const std::vector<Segment>& segments,
                       std::uint64_t node_budget = 10'000'000);

// Optimal subset of the given squares. Throws InfeasibleError (naming the
// witness segment) or BudgetExceededError.
Cover exact_discrete(const std::vector<Segment>& segments,
                     const std::vector<UnitSquare>& squares,
                     std::uint64_t node_budget = 10'000'000);

}  // namespace segcover
