#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace segcover {

// Minimum-cardinality set cover instance. Elements are 0..universe_size-1,
// each set lists the elements it contains.
struct SetCoverInstance {
    std::size_t universe_size = 0;
    std::vector<std::vector<std::size_t>> sets;
};

enum class SolveStatus { Optimal, Infeasible, TooLarge };

struct SetCoverResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<std::size_t> chosen;  // set indices, ascending; valid when Optimal
    // Element with no covering set when Infeasible; npos when infeasibility
    // means "no solution within size_cap".
    std::size_t infeasible_element = npos;
    std::uint64_t nodes_used = 0;

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
};

// Branch and bound: branches on the uncovered element with the fewest
// covering sets, prunes with a greedy disjoint-element lower bound, and
// seeds the incumbent with the standard greedy cover. Deterministic.
//
// Solutions larger than size_cap are not searched; when the true optimum
// exceeds the cap the result is Infeasible with infeasible_element == npos.
SetCoverResult exact_setcover(const SetCoverInstance& inst,
                              std::uint64_t node_budget = 10'000'000,
                              std::size_t size_cap = SetCoverResult::npos);

}  // namespace segcover
