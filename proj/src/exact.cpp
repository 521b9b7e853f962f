#include "tww/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace tww {
namespace {

constexpr int kMaxN = 16;

// Dense trigraph on at most 16 slots; rows are adjacency bitmasks. Slots are
// reused: contracting (i, j) with i < j writes the merge into slot i.
struct BitState {
    int n = 0;
    uint32_t alive = 0;
    std::array<uint16_t, kMaxN> black{};
    std::array<uint16_t, kMaxN> red{};

    static BitState from(const Graph& g) {
        BitState s;
        s.n = g.num_vertices();
        s.alive = (1u << s.n) - 1;
        for (auto [u, v] : g.edges()) {
            s.black[u] |= uint16_t(1u << v);
            s.black[v] |= uint16_t(1u << u);
        }
        return s;
    }

    int alive_count() const { return std::popcount(alive); }

    void contract(int i, int j) {
        uint16_t keep = uint16_t(alive & ~(1u << i) & ~(1u << j));
        uint16_t common = uint16_t(black[i] & black[j] & keep);
        uint16_t reds = uint16_t((red[i] | red[j] | (black[i] ^ black[j])) & keep);
        black[i] = common;
        red[i] = reds;
        alive &= ~(1u << j);
        uint16_t bi = uint16_t(1u << i), bj = uint16_t(1u << j);
        for (uint32_t rest = alive & ~(1u << i); rest;) {
            int x = std::countr_zero(rest);
            rest &= rest - 1;
            black[x] &= ~(bi | bj);
            red[x] &= ~(bi | bj);
            if (common & (1u << x)) black[x] |= bi;
            if (reds & (1u << x)) red[x] |= bi;
        }
        black[j] = red[j] = 0;
    }

    int max_red_degree() const {
        int d = 0;
        for (uint32_t rest = alive; rest;) {
            int x = std::countr_zero(rest);
            rest &= rest - 1;
            d = std::max(d, std::popcount(uint32_t(red[x])));
        }
        return d;
    }
};

int exhaustive_go(const BitState& s, int seen) {
    if (s.alive_count() <= 1) return seen;
    int best = INT32_MAX;
    for (uint32_t ri = s.alive; ri;) {
        int i = std::countr_zero(ri);
        ri &= ri - 1;
        for (uint32_t rj = ri; rj;) {
            int j = std::countr_zero(rj);
            rj &= rj - 1;
            BitState t = s;
            t.contract(i, j);
            best = std::min(best, exhaustive_go(t, std::max(seen, t.max_red_degree())));
        }
    }
    return best;
}

struct StateKey {
    uint32_t alive;
    std::array<uint32_t, kMaxN> rows;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    size_t operator()(const StateKey& k) const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ k.alive;
        for (uint32_t r : k.rows) {
            h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

StateKey make_key(const BitState& s) {
    StateKey k{s.alive, {}};
    for (uint32_t rest = s.alive; rest;) {
        int x = std::countr_zero(rest);
        rest &= rest - 1;
        k.rows[x] = (uint32_t(s.black[x]) << 16) | s.red[x];
    }
    return k;
}

struct DecisionSearch {
    int d;
    std::unordered_set<StateKey, StateKeyHash> failed;
    std::vector<std::pair<int, int>> slot_steps;  // in application order

    bool dfs(const BitState& s) {
        if (s.alive_count() <= 1) return true;
        StateKey key = make_key(s);
        if (failed.contains(key)) return false;
        // Candidates ordered by the red degree their contraction creates,
        // ties by slot pair; trying the calmest merge first.
        std::vector<std::pair<int, std::pair<int, int>>> cands;
        for (uint32_t ri = s.alive; ri;) {
            int i = std::countr_zero(ri);
            ri &= ri - 1;
            for (uint32_t rj = ri; rj;) {
                int j = std::countr_zero(rj);
                rj &= rj - 1;
                BitState t = s;
                t.contract(i, j);
                int rd = t.max_red_degree();
                if (rd <= d) cands.push_back({rd, {i, j}});
            }
        }
        std::sort(cands.begin(), cands.end());
        for (const auto& [rd, pr] : cands) {
            BitState t = s;
            t.contract(pr.first, pr.second);
            slot_steps.push_back(pr);
            if (dfs(t)) return true;
            slot_steps.pop_back();
        }
        failed.insert(key);
        return false;
    }
};

ContractionSequence steps_to_sequence(int n, const std::vector<std::pair<int, int>>& slot_steps, int width) {
    ContractionSequence seq;
    seq.n = n;
    seq.claimed_width = width;
    std::vector<int> id_of_slot(n);
    for (int i = 0; i < n; ++i) id_of_slot[i] = i;
    int fresh = n;
    for (auto [i, j] : slot_steps) {
        seq.steps.push_back({id_of_slot[i], id_of_slot[j], fresh});
        id_of_slot[i] = fresh++;
    }
    return seq;
}

}  // namespace

int exhaustive_twinwidth(const Graph& g) {
    if (g.num_vertices() > 7)
        throw std::invalid_argument("exhaustive_twinwidth: limited to 7 vertices, got " +
                                    std::to_string(g.num_vertices()));
    if (g.num_vertices() <= 1) return 0;
    return exhaustive_go(BitState::from(g), 0);
}

bool has_d_sequence(const Graph& g, int d, ContractionSequence* witness) {
    if (g.num_vertices() > kMaxN)
        throw std::invalid_argument("has_d_sequence: limited to 16 vertices");
    if (d < 0) return false;
    if (g.num_vertices() <= 1) {
        if (witness) *witness = ContractionSequence{g.num_vertices(), {}, 0};
        return true;
    }
    DecisionSearch search{d, {}, {}};
    if (!search.dfs(BitState::from(g))) return false;
    if (witness) {
        *witness = steps_to_sequence(g.num_vertices(), search.slot_steps, d);
        // Claim the replayed width, not the decision threshold.
        ReplayResult r = replay(g, *witness);
        assert(r.ok && r.width <= d);
        witness->claimed_width = r.width;
    }
    return true;
}

ExactResult exact_twinwidth(const Graph& g, int cap, std::optional<int> budget) {
    if (g.num_vertices() > cap)
        throw std::invalid_argument("exact_twinwidth: graph has " + std::to_string(g.num_vertices()) +
                                    " vertices, cap is " + std::to_string(cap));
    ExactResult res;
    for (int d = 0; d < std::max(1, g.num_vertices()); ++d) {
        if (budget && d > *budget) {
            res.exceeded_budget = true;
            res.width = d;  // lower bound: width > budget
            return res;
        }
        if (has_d_sequence(g, d, &res.witness)) {
            res.width = res.witness.claimed_width.value_or(d);
            return res;
        }
    }
    res.width = std::max(0, g.num_vertices() - 1);
    return res;
}

}  // namespace tww
