#include "doctest.h"
#include "segcover/generate.hpp"
#include "segcover/set_cover.hpp"

#include <algorithm>

using namespace segcover;

namespace {

// Exhaustive oracle: smallest covering subfamily by enumerating all 2^m
// subsets. Only for tiny instances.
std::size_t brute_force_optimum(const SetCoverInstance& inst) {
    const std::size_t m = inst.sets.size();
    std::size_t best = SetCoverResult::npos;
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<bool> covered(inst.universe_size, false);
        for (std::size_t s = 0; s < m; ++s)
            if (mask & (std::size_t(1) << s))
                for (std::size_t e : inst.sets[s]) covered[e] = true;
        if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
            best = std::min<std::size_t>(best, std::size_t(__builtin_popcountll(mask)));
    }
    return best;
}

SetCoverInstance random_instance(std::uint64_t seed) {
    SplitMix64 rng(seed);
    SetCoverInstance inst;
    inst.universe_size = 2 + rng.bounded(7);
    const std::size_t m = 1 + rng.bounded(9);
    for (std::size_t s = 0; s < m; ++s) {
        std::vector<std::size_t> elems;
        for (std::size_t e = 0; e < inst.universe_size; ++e)
            if (rng.bounded(3) == 0) elems.push_back(e);
        inst.sets.push_back(std::move(elems));
    }
    return inst;
}

}  // namespace

TEST_CASE("singleton universe") {
    const SetCoverInstance inst{1, {{0}}};
    const SetCoverResult res = exact_setcover(inst);
    CHECK(res.status == SolveStatus::Optimal);
    CHECK(res.chosen == std::vector<std::size_t>{0});
}

TEST_CASE("disjoint singletons need one set each") {
    const SetCoverInstance inst{3, {{0}, {1}, {2}}};
    const SetCoverResult res = exact_setcover(inst);
    CHECK(res.status == SolveStatus::Optimal);
    CHECK(res.chosen.size() == 3);
}

TEST_CASE("overlapping family, optimum 2 (checked exhaustively)") {
    const SetCoverInstance inst{3, {{0, 1}, {1, 2}, {2}}};
    CHECK(brute_force_optimum(inst) == 2);
    const SetCoverResult res = exact_setcover(inst);
    CHECK(res.status == SolveStatus::Optimal);
    CHECK(res.chosen.size() == 2);
}

TEST_CASE("matches the exhaustive oracle on random instances") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const SetCoverInstance inst = random_instance(seed);
        const std::size_t expected = brute_force_optimum(inst);
        const SetCoverResult res = exact_setcover(inst);
        if (expected == SetCoverResult::npos) {
            CHECK(res.status == SolveStatus::Infeasible);
            CHECK(res.infeasible_element != SetCoverResult::npos);
        } else {
            REQUIRE(res.status == SolveStatus::Optimal);
            CHECK(res.chosen.size() == expected);
            // The certificate really covers the universe.
            std::vector<bool> covered(inst.universe_size, false);
            for (std::size_t s : res.chosen)
                for (std::size_t e : inst.sets[s]) covered[e] = true;
            CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
        }
    }
}

TEST_CASE("infeasibility names a witness element") {
    const SetCoverInstance inst{3, {{0}, {2}}};
    const SetCoverResult res = exact_setcover(inst);
    CHECK(res.status == SolveStatus::Infeasible);
    CHECK(res.infeasible_element == 1);
}

TEST_CASE("node budget exhaustion reports TooLarge") {
    SetCoverInstance inst;
    inst.universe_size = 12;
    for (std::size_t a = 0; a < 12; ++a)
        for (std::size_t b = a + 1; b < 12; ++b)
            inst.sets.push_back({a, b});
    const SetCoverResult res = exact_setcover(inst, /*node_budget=*/3);
    CHECK(res.status == SolveStatus::TooLarge);
}

TEST_CASE("size cap below the optimum reports no solution within cap") {
    const SetCoverInstance inst{3, {{0}, {1}, {2}}};
    const SetCoverResult res = exact_setcover(inst, 10'000'000, /*size_cap=*/2);
    CHECK(res.status == SolveStatus::Infeasible);
    CHECK(res.infeasible_element == SetCoverResult::npos);

    const SetCoverResult ok = exact_setcover(inst, 10'000'000, /*size_cap=*/3);
    CHECK(ok.status == SolveStatus::Optimal);
    CHECK(ok.chosen.size() == 3);
}

TEST_CASE("empty universe needs nothing") {
    const SetCoverInstance inst{0, {{}}};
    const SetCoverResult res = exact_setcover(inst);
    CHECK(res.status == SolveStatus::Optimal);
    CHECK(res.chosen.empty());
}
