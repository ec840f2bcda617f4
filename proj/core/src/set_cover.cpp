#include "segcover/set_cover.hpp"

#include <algorithm>

namespace segcover {

namespace {

// Fixed-width dynamic bitset; just enough for the solver.
class Bits {
  public:
    explicit Bits(std::size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    void or_with(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }
    std::size_t count_and_not(const Bits& o) const {  // |this \ o|
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::size_t(__builtin_popcountll(w_[i] & ~o.w_[i]));
        return c;
    }
    bool covers_all(std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i)
            if (!test(i)) return false;
        return true;
    }
    std::size_t size() const { return n_; }

  private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

struct Search {
    std::size_t universe;
    std::vector<Bits> set_mask;              // per live set: elements covered
    std::vector<std::size_t> live_ids;       // original indices of live sets
    std::vector<std::vector<std::size_t>> covering;  // element -> live set positions
    std::vector<Bits> covering_mask;         // element -> bitset over live set positions
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::size_t best_size;
    std::vector<std::size_t> best;           // live set positions
    std::vector<std::size_t> stack;

    // Greedy lower bound: elements whose covering-set pools are pairwise
    // disjoint each force a distinct set.
    std::size_t lower_bound(const Bits& covered) const {
        Bits used(set_mask.size());
        std::size_t lb = 0;
        for (std::size_t e = 0; e < universe; ++e) {
            if (covered.test(e)) continue;
            if (!used.intersects(covering_mask[e])) {
                ++lb;
                used.or_with(covering_mask[e]);
            }
        }
        return lb;
    }

    void dfs(const Bits& covered, std::size_t chosen) {
        if (out_of_budget) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if (covered.covers_all(universe)) {
            if (chosen < best_size) {
                best_size = chosen;
                best = stack;
            }
            return;
        }
        if (chosen + lower_bound(covered) >= best_size) return;

        // Branch on the uncovered element with the fewest covering sets.
        std::size_t pick = SetCoverResult::npos;
        std::size_t pick_deg = SetCoverResult::npos;
        for (std::size_t e = 0; e < universe; ++e) {
            if (covered.test(e)) continue;
            if (covering[e].size() < pick_deg) {
                pick_deg = covering[e].size();
                pick = e;
            }
        }
        for (std::size_t pos : covering[pick]) {
            Bits next = covered;
            next.or_with(set_mask[pos]);
            stack.push_back(pos);
            dfs(next, chosen + 1);
            stack.pop_back();
            if (out_of_budget) return;
        }
    }
};

}  // namespace

SetCoverResult exact_setcover(const SetCoverInstance& inst, std::uint64_t node_budget,
                              std::size_t size_cap) {
    SetCoverResult result;
    const std::size_t n = inst.universe_size;
    const std::size_t m = inst.sets.size();

    std::vector<Bits> masks;
    masks.reserve(m);
    for (const auto& s : inst.sets) {
        Bits b(n);
        for (std::size_t e : s) b.set(e);
        masks.push_back(std::move(b));
    }

    // Feasibility: every element needs at least one covering set.
    for (std::size_t e = 0; e < n; ++e) {
        bool hit = false;
        for (std::size_t s = 0; s < m && !hit; ++s) hit = masks[s].test(e);
        if (!hit) {
            result.status = SolveStatus::Infeasible;
            result.infeasible_element = e;
            return result;
        }
    }
    if (n == 0) {
        result.status = SolveStatus::Optimal;
        return result;
    }

    // Drop dominated sets (subset of an earlier-or-later set; earliest
    // representative survives ties).
    std::vector<bool> dead(m, false);
    for (std::size_t a = 0; a < m; ++a) {
        if (dead[a]) continue;
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b || dead[b]) continue;
            if (masks[a].is_subset_of(masks[b]) && (!masks[b].is_subset_of(masks[a]) || b < a)) {
                dead[a] = true;
                break;
            }
        }
    }

    Search search;
    search.universe = n;
    for (std::size_t s = 0; s < m; ++s) {
        if (dead[s]) continue;
        search.live_ids.push_back(s);
        search.set_mask.push_back(masks[s]);
    }
    const std::size_t live = search.set_mask.size();
    search.covering.assign(n, {});
    search.covering_mask.assign(n, Bits(live));
    for (std::size_t pos = 0; pos < live; ++pos)
        for (std::size_t e = 0; e < n; ++e)
            if (search.set_mask[pos].test(e)) {
                search.covering[e].push_back(pos);
                search.covering_mask[e].set(pos);
            }

    // Greedy incumbent.
    std::vector<std::size_t> greedy;
    {
        Bits covered(n);
        while (!covered.covers_all(n)) {
            std::size_t best_pos = 0;
            std::size_t best_gain = 0;
            for (std::size_t pos = 0; pos < live; ++pos) {
                const std::size_t gain = search.set_mask[pos].count_and_not(covered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_pos = pos;
                }
            }
            covered.or_with(search.set_mask[best_pos]);
            greedy.push_back(best_pos);
        }
    }

    search.budget = node_budget;
    if (size_cap != SetCoverResult::npos && greedy.size() > size_cap) {
        search.best_size = size_cap + 1;
    } else {
        search.best_size = greedy.size();
        search.best = greedy;
    }
    search.dfs(Bits(n), 0);

    result.nodes_used = search.nodes;
    if (search.out_of_budget) {
        result.status = SolveStatus::TooLarge;
        return result;
    }
    if (search.best.empty()) {
        // Nothing within the cap (only reachable with a cap below the optimum).
        result.status = SolveStatus::Infeasible;
        result.infeasible_element = SetCoverResult::npos;
        return result;
    }
    result.status = SolveStatus::Optimal;
    result.chosen.reserve(search.best.size());
    for (std::size_t pos : search.best) result.chosen.push_back(search.live_ids[pos]);
    std::sort(result.chosen.begin(), result.chosen.end());
    return result;
}

}  // namespace segcover
