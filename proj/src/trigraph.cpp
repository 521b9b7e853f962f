#include "tww/trigraph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace tww {

Trigraph::Trigraph(int n)
    : black_(n), red_(n), alive_(n, 1), red_deg_(n, 0), origins_(n), origins_sorted_(n, 1),
      alive_count_(n), orig_n_(n) {
    for (int v = 0; v < n; ++v) origins_[v] = {v};
    deg_count_.assign(1, n);
}

const std::vector<int>& Trigraph::origins(int v) const {
    assert(v >= 0 && v < num_ids());
    if (!origins_sorted_[v]) {
        std::sort(origins_[v].begin(), origins_[v].end());
        origins_sorted_[v] = 1;
    }
    return origins_[v];
}

void Trigraph::count_alive_degree(int d, int delta) {
    if (d >= static_cast<int>(deg_count_.size())) deg_count_.resize(d + 1, 0);
    deg_count_[d] += delta;
    if (delta > 0 && d > cur_max_) cur_max_ = d;
}

void Trigraph::bump_red_deg(int v, int delta) {
    if (alive_[v]) count_alive_degree(red_deg_[v], -1);
    red_deg_[v] += delta;
    if (alive_[v]) count_alive_degree(red_deg_[v], +1);
}

Trigraph::Trigraph(const Graph& g) : Trigraph(g.num_vertices()) {
    for (auto [u, v] : g.edges()) add_black_edge(u, v);
}

void Trigraph::require_alive(int v, const char* who) const {
    if (v < 0 || v >= num_ids())
        throw std::invalid_argument(std::string(who) + ": unknown vertex " + std::to_string(v));
    if (!alive_[v])
        throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) + " was already contracted");
}

void Trigraph::add_black_edge(int u, int v) {
    require_alive(u, "add_black_edge");
    require_alive(v, "add_black_edge");
    if (u == v) throw std::invalid_argument("add_black_edge: loop");
    assert(!has_black_edge(u, v) && !has_red_edge(u, v));
    black_[u].push_back(v);
    black_[v].push_back(u);
}

void Trigraph::add_red_edge(int u, int v) {
    require_alive(u, "add_red_edge");
    require_alive(v, "add_red_edge");
    if (u == v) throw std::invalid_argument("add_red_edge: loop");
    assert(!has_black_edge(u, v) && !has_red_edge(u, v));
    red_[u].push_back(v);
    red_[v].push_back(u);
    bump_red_deg(u, +1);
    bump_red_deg(v, +1);
}

bool Trigraph::has_black_edge(int u, int v) const {
    if (!is_alive(u) || !is_alive(v)) return false;
    const auto& a = black_[u].size() <= black_[v].size() ? black_[u] : black_[v];
    int other = black_[u].size() <= black_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

bool Trigraph::has_red_edge(int u, int v) const {
    if (!is_alive(u) || !is_alive(v)) return false;
    const auto& a = red_[u].size() <= red_[v].size() ? red_[u] : red_[v];
    int other = red_[u].size() <= red_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

void Trigraph::collect_alive(const std::vector<int>& list, std::vector<int>& out) const {
    for (int x : list)
        if (alive_[x]) out.push_back(x);
}

void Trigraph::compact(std::vector<int>& list) const {
    list.erase(std::remove_if(list.begin(), list.end(), [&](int x) { return !alive_[x]; }), list.end());
}

std::vector<int> Trigraph::black_neighbors(int v) const {
    require_alive(v, "black_neighbors");
    std::vector<int> out;
    out.reserve(black_[v].size());
    collect_alive(black_[v], out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Trigraph::red_neighbors(int v) const {
    require_alive(v, "red_neighbors");
    std::vector<int> out;
    out.reserve(red_[v].size());
    collect_alive(red_[v], out);
    std::sort(out.begin(), out.end());
    return out;
}

int Trigraph::black_degree(int v) const {
    require_alive(v, "black_degree");
    int d = 0;
    for (int x : black_[v])
        if (alive_[x]) ++d;
    return d;
}

int Trigraph::max_red_degree() const {
    while (cur_max_ > 0 && deg_count_[cur_max_] == 0) --cur_max_;
    return cur_max_;
}

std::vector<int> Trigraph::alive_vertices() const {
    std::vector<int> out;
    out.reserve(alive_count_);
    for (int v = 0; v < num_ids(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

int Trigraph::contract(int u, int v) {
    require_alive(u, "contract");
    require_alive(v, "contract");
    if (u == v) throw std::invalid_argument("contract: u == v");

    // Gather the alive neighborhoods of u and v, compacting their lists on
    // the way out since both vertices retire below.
    compact(black_[u]);
    compact(black_[v]);
    compact(red_[u]);
    compact(red_[v]);

    // Flags per neighbor: 1 = black to u, 2 = red to u, 4 = black to v,
    // 8 = red to v.
    std::unordered_map<int, unsigned> flags;
    flags.reserve(black_[u].size() + black_[v].size() + red_[u].size() + red_[v].size());
    for (int x : black_[u]) flags[x] |= 1;
    for (int x : red_[u]) flags[x] |= 2;
    for (int x : black_[v]) flags[x] |= 4;
    for (int x : red_[v]) flags[x] |= 8;
    flags.erase(u);
    flags.erase(v);

    int w = num_ids();
    black_.emplace_back();
    red_.emplace_back();
    alive_.push_back(1);
    red_deg_.push_back(0);
    count_alive_degree(0, +1);
    {
        // Steal the larger list and append the smaller, so a long contraction
        // chain costs O(1) amortized per step instead of one full copy each.
        int big = origins_[u].size() >= origins_[v].size() ? u : v;
        int small = big == u ? v : u;
        std::vector<int> org = std::move(origins_[big]);
        org.insert(org.end(), origins_[small].begin(), origins_[small].end());
        origins_[big] = {};
        origins_[small] = {};
        origins_.push_back(std::move(org));
        origins_sorted_.push_back(0);
    }

    count_alive_degree(red_deg_[u], -1);
    count_alive_degree(red_deg_[v], -1);
    alive_[u] = alive_[v] = 0;
    alive_count_ -= 1;  // two retired, one born
    // Red edges incident to u/v die with them.
    for (int x : red_[u])
        if (alive_[x]) bump_red_deg(x, -1);
    for (int x : red_[v])
        if (alive_[x]) bump_red_deg(x, -1);
    red_deg_[u] = red_deg_[v] = 0;

    // Sorted neighbor iteration keeps downstream traversals deterministic.
    std::vector<std::pair<int, unsigned>> nbrs(flags.begin(), flags.end());
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [x, f] : nbrs) {
        bool black_both = (f & 1) && (f & 4);
        if (black_both) {
            black_[w].push_back(x);
            black_[x].push_back(w);
        } else {
            red_[w].push_back(x);
            red_[x].push_back(w);
            bump_red_deg(x, +1);
            bump_red_deg(w, +1);
        }
    }
    return w;
}

static ReplayResult replay_impl(const Graph& g, const ContractionSequence& seq, bool require_complete) {
    ReplayResult res;
    if (seq.n != g.num_vertices()) {
        res.error = "sequence is for n = " + std::to_string(seq.n) + " but graph has " +
                    std::to_string(g.num_vertices()) + " vertices";
        return res;
    }
    Trigraph t(g);
    res.width_profile.reserve(seq.steps.size());
    for (int i = 0; i < static_cast<int>(seq.steps.size()); ++i) {
        const auto& s = seq.steps[i];
        auto fail = [&](const std::string& why) {
            res.error_step = i;
            res.error = "step " + std::to_string(i) + ": " + why;
            return res;
        };
        if (s.w != seq.n + i)
            return fail("fresh vertex must be " + std::to_string(seq.n + i) + " but step names " +
                        std::to_string(s.w));
        if (s.u == s.v) return fail("contracts vertex " + std::to_string(s.u) + " with itself");
        for (int x : {s.u, s.v}) {
            if (x < 0 || x >= t.num_ids()) return fail("unknown vertex " + std::to_string(x));
            if (!t.is_alive(x)) return fail("vertex " + std::to_string(x) + " was already contracted");
        }
        t.contract(s.u, s.v);
        int d = t.max_red_degree();
        res.width_profile.push_back(d);
        res.width = std::max(res.width, d);
    }
    res.final_vertices = t.num_alive();
    if (require_complete && res.final_vertices != 1) {
        res.error = "sequence leaves " + std::to_string(res.final_vertices) +
                    " vertices; a full sequence must end at one";
        return res;
    }
    if (require_complete && seq.claimed_width && res.width > *seq.claimed_width) {
        res.error = "replayed width " + std::to_string(res.width) + " exceeds claimed width " +
                    std::to_string(*seq.claimed_width);
        return res;
    }
    res.ok = true;
    return res;
}

ReplayResult replay(const Graph& g, const ContractionSequence& seq) {
    return replay_impl(g, seq, false);
}

ReplayResult verify_sequence(const Graph& g, const ContractionSequence& seq) {
    return replay_impl(g, seq, true);
}

std::vector<NeighborhoodClass> neighborhood_classes(const Trigraph& t,
                                                    const std::vector<int>& xs,
                                                    const std::vector<int>& ys) {
    std::vector<char> in_y(t.num_ids(), 0);
    for (int y : ys) {
        if (!t.is_alive(y)) throw std::invalid_argument("neighborhood_classes: dead vertex in Y");
        in_y[y] = 1;
    }
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> groups;
    for (int x : xs) {
        if (!t.is_alive(x)) throw std::invalid_argument("neighborhood_classes: dead vertex in X");
        std::vector<int> bt, rt;
        for (int y : t.black_neighbors(x))
            if (in_y[y]) bt.push_back(y);
        for (int y : t.red_neighbors(x))
            if (in_y[y]) rt.push_back(y);
        groups[{std::move(bt), std::move(rt)}].push_back(x);
    }
    std::vector<NeighborhoodClass> out;
    out.reserve(groups.size());
    for (auto& [key, members] : groups) {
        NeighborhoodClass c;
        c.black_trace = key.first;
        c.red_trace = key.second;
        std::sort(members.begin(), members.end());
        c.members = std::move(members);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ContractionStep> relabel_steps(const std::vector<ContractionStep>& steps,
                                           int sub_n,
                                           const std::vector<int>& vertex_map,
                                           int& host_fresh) {
    std::vector<int> map(vertex_map);
    map.resize(sub_n + steps.size(), -1);
    std::vector<ContractionStep> out;
    out.reserve(steps.size());
    for (const auto& s : steps) {
        assert(s.w == sub_n + static_cast<int>(out.size()));
        int w = host_fresh++;
        map[s.w] = w;
        assert(map[s.u] >= 0 && map[s.v] >= 0);
        out.push_back({map[s.u], map[s.v], w});
    }
    return out;
}

}  // namespace tww
