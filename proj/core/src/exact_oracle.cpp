#include "segcover/exact_oracle.hpp"

#include "segcover/errors.hpp"
#include "segcover/ptas.hpp"
#include "segcover/set_cover.hpp"

namespace segcover {

namespace {

Cover solve_over(const std::vector<Segment>& segments, const std::vector<UnitSquare>& squares,
                 std::uint64_t node_budget) {
    SetCoverInstance sc;
    sc.universe_size = segments.size();
    sc.sets.reserve(squares.size());
    for (const UnitSquare& t : squares) {
        std::vector<std::size_t> covered;
        for (std::size_t i = 0; i < segments.size(); ++i)
            if (covers(t, segments[i])) covered.push_back(i);
        sc.sets.push_back(std::move(covered));
    }
    const SetCoverResult res = exact_setcover(sc, node_budget);
    if (res.status == SolveStatus::TooLarge)
        throw BudgetExceededError("exact solve exceeded the node budget");
    if (res.status == SolveStatus::Infeasible)
        throw InfeasibleError("segment " + std::to_string(res.infeasible_element) +
                                  " covered by no square",
                              static_cast<long>(res.infeasible_element));

    Cover cover;
    for (std::size_t idx : res.chosen) cover.squares.push_back(squares[idx]);
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t s = 0; s < cover.squares.size(); ++s)
            if (covers(cover.squares[s], segments[i])) {
                cover.witness[i] = s;
                break;
            }
    return cover;
}

}  // namespace

Cover exact_continuous(const std::vector<Segment>& segments, std::uint64_t node_budget) {
    std::vector<Point> endpoints;
    endpoints.reserve(2 * segments.size());
    for (const Segment& s : segments) {
        endpoints.push_back(s.left());
        endpoints.push_back(s.right());
    }
    return solve_over(segments, enumerate_candidates(endpoints), node_budget);
}

Cover exact_discrete(const std::vector<Segment>& segments, const std::vector<UnitSquare>& squares,
                     std::uint64_t node_budget) {
    return solve_over(segments, squares, node_budget);
}

}  // namespace segcover
