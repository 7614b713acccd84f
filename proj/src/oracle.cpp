#include "gridprod/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

namespace gridprod {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask bit(int i) { return Mask{1} << i; }
Mask low_bits(int i) { return bit(i) - 1; }

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Non-identity automorphisms of g (possibly a partial list), found by
// backtracking over degree-compatible vertex maps. Capped by count and
// by search nodes; a partial list still yields sound symmetry pruning.
std::vector<std::vector<int>> enumerate_automorphisms(const Graph& g, size_t max_count,
                                                      long long max_nodes) {
    const int n = g.num_vertices();
    std::vector<std::vector<int>> result;
    if (n == 0 || n > 64) return result;
    std::vector<Mask> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    // Map vertices in an order where each next vertex touches the mapped
    // prefix when possible, so adjacency constraints bind early.
    std::vector<int> ord;
    {
        std::vector<char> placed(n, 0);
        std::vector<int> placed_nbrs(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best == -1 || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] && g.degree(v) > g.degree(best)))
                    best = v;
            }
            placed[best] = 1;
            ord.push_back(best);
            for (Vertex w : g.neighbors(best))
                if (!placed[w]) ++placed_nbrs[w];
        }
    }
    std::vector<int> map(n, -1);
    Mask image_used = 0;
    long long nodes = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (result.size() >= max_count || ++nodes > max_nodes) return;
        if (i == n) {
            bool identity = true;
            for (int v = 0; v < n && identity; ++v) identity = map[v] == v;
            if (!identity) result.push_back(map);
            return;
        }
        int v = ord[i];
        Mask needed = 0;
        Mask s = adj[v];
        while (s) {
            int u = std::countr_zero(s);
            s &= s - 1;
            if (map[u] != -1) needed |= bit(map[u]);
        }
        for (int w = 0; w < n; ++w) {
            if ((image_used >> w & 1) || g.degree(w) != g.degree(v)) continue;
            if ((adj[w] & image_used) != needed) continue;
            map[v] = w;
            image_used |= bit(w);
            self(self, i + 1);
            image_used &= ~bit(w);
            map[v] = -1;
            if (result.size() >= max_count || nodes > max_nodes) return;
        }
    };
    rec(rec, 0);
    return result;
}

// ---- minor containment ----

struct MinorSearch {
    const Graph& host;
    const Graph& pattern;

    int nh, np;
    Mask all;
    std::vector<Mask> hadj;

    std::vector<int> order;                 // pattern vertices, assignment order
    std::vector<std::vector<int>> earlier;  // earlier pattern neighbors per position
    std::vector<int> pending;  // per pattern vertex: neighbors not yet assigned
    std::vector<Mask> padj;    // pattern adjacency (np <= nh <= 64)
    std::vector<char> starter_after;  // a new pattern component starts at position >= i
    Mask assigned_mask = 0;           // pattern vertices already assigned
    int unassigned_edges;             // pattern edges with both ends unassigned
    int pending_total = 0;            // pattern edges with exactly one end assigned

    std::vector<Mask> bset, bnbr;  // per pattern vertex (valid once assigned)
    Mask used = 0;
    int slack;

    // Host symmetry breaking: active[i] indexes the automorphisms that
    // fix every branch set assigned before position i.
    const std::vector<std::vector<int>>* auts;
    std::vector<std::vector<int>> active;

    long long nodes = 0;
    long long max_nodes;
    Clock::time_point t0, deadline;
    bool out_of_budget = false;

    MinorSearch(const Graph& h, const Graph& p, const SearchBudget& b, int extra_cap,
                const std::vector<std::vector<int>>* host_auts)
        : host(h), pattern(p), nh(h.num_vertices()), np(p.num_vertices()), auts(host_auts) {
        all = nh == 64 ? ~Mask{0} : low_bits(nh);
        hadj.assign(nh, 0);
        for (auto [u, v] : h.edges()) {
            hadj[u] |= bit(v);
            hadj[v] |= bit(u);
        }
        slack = std::min(nh - np, extra_cap);
        bset.assign(np, 0);
        bnbr.assign(np, 0);
        pending.assign(np, 0);
        for (int v = 0; v < np; ++v) pending[v] = p.degree(v);
        padj.assign(np, 0);
        for (auto [u, v] : p.edges()) {
            padj[u] |= bit(v);
            padj[v] |= bit(u);
        }
        unassigned_edges = p.num_edges();
        active.assign(np + 1, {});
        if (auts)
            for (size_t a = 0; a < auts->size(); ++a) active[0].push_back(static_cast<int>(a));
        build_order();
        max_nodes = b.max_nodes;
        t0 = Clock::now();
        deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(b.time_limit_s));
    }

    // Assignment order: start each component at its max-degree vertex,
    // then repeatedly take the vertex with the most already-placed
    // neighbors (ties: higher degree, then lower id). Guarantees every
    // non-starter has at least one earlier neighbor.
    void build_order() {
        std::vector<char> placed(np, 0);
        std::vector<int> placed_nbrs(np, 0);
        for (int step = 0; step < np; ++step) {
            int best = -1;
            for (int v = 0; v < np; ++v) {
                if (placed[v]) continue;
                if (best == -1 || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] &&
                     pattern.degree(v) > pattern.degree(best)))
                    best = v;
            }
            placed[best] = 1;
            order.push_back(best);
            for (Vertex w : pattern.neighbors(best))
                if (!placed[w]) ++placed_nbrs[w];
        }
        earlier.assign(np, {});
        std::vector<int> pos(np);
        for (int i = 0; i < np; ++i) pos[order[i]] = i;
        for (int i = 0; i < np; ++i)
            for (Vertex w : pattern.neighbors(order[i]))
                if (pos[w] < i) earlier[i].push_back(w);
        starter_after.assign(np + 1, 0);
        for (int i = np - 1; i >= 0; --i)
            starter_after[i] = starter_after[i + 1] || (i > 0 && earlier[i].empty());
    }

    bool tick() {
        if (++nodes >= max_nodes) {
            out_of_budget = true;
            return false;
        }
        if ((nodes & 0xfff) == 0 && Clock::now() > deadline) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    Mask neighbors_of(Mask s) const {
        Mask out = 0;
        while (s) {
            out |= hadj[std::countr_zero(s)];
            s &= s - 1;
        }
        return out;
    }

    // Every already-assigned pattern vertex with unassigned neighbors
    // must keep enough free support: its pending branch sets are
    // disjoint, and each needs a distinct free neighbor of B_y.
    bool support_ok(int upto) const {
        Mask free = all & ~used;
        for (int j = 0; j < upto; ++j) {
            int y = order[j];
            if (pending[y] > 0 && std::popcount(bnbr[y] & free) < pending[y]) return false;
        }
        return true;
    }

    Mask component_within(Mask seed, Mask region) const {
        Mask comp = seed & region;
        for (;;) {
            Mask grown = comp;
            Mask it = comp;
            while (it) {
                grown |= hadj[std::countr_zero(it)] & region;
                it &= it - 1;
            }
            if (grown == comp) return comp;
            comp = grown;
        }
    }

    // Global feasibility after `next` assignments.
    bool feasible(int next) const {
        Mask free = all & ~used;
        const int remaining = np - next;
        // Every remaining branch set attaches to the assigned region
        // (directly or through other future sets), so only the free
        // vertices reachable from the assigned frontier count --
        // unless a fresh pattern component still has to start.
        Mask frontier = 0;
        for (int j = 0; j < next; ++j) frontier |= bnbr[order[j]];
        frontier &= free;
        if (!starter_after[next]) {
            if (std::popcount(component_within(frontier, free)) < remaining) return false;
            // Future branch sets are disjoint and each set adjacent to
            // an assigned one claims a distinct frontier vertex.
            int distinct_pending = std::popcount([&] {
                Mask z = 0;
                for (int v = 0; v < np; ++v)
                    if (!(assigned_mask >> v & 1) && (padj[v] & assigned_mask)) z |= bit(v);
                return z;
            }());
            if (distinct_pending > std::popcount(frontier)) return false;
        }
        // Each still-uncovered pattern edge consumes its own host edge:
        // assigned-to-future edges live between used and free, while
        // future-to-future edges live inside free.
        int free_free = 0, free_used = 0;
        Mask it = free;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            free_free += std::popcount(hadj[v] & free);
            free_used += std::popcount(hadj[v] & used);
        }
        free_free /= 2;
        if (unassigned_edges > free_free || pending_total > free_used) return false;
        return true;
    }

    // Keep a candidate set only if it is numerically minimal among its
    // images under the still-active host automorphisms; any pruned set
    // has a smaller automorphic image that extends to a solution
    // whenever this one does. Fills active[i + 1] with the survivors
    // that fix the set (they remain usable one level deeper).
    bool symmetry_keep(int i, Mask set) {
        auto& next = active[i + 1];
        next.clear();
        for (int idx : active[i]) {
            const auto& perm = (*auts)[idx];
            Mask img = 0, s = set;
            while (s) {
                img |= bit(perm[std::countr_zero(s)]);
                s &= s - 1;
            }
            if (img < set) return false;
            if (img == set) next.push_back(idx);
        }
        return true;
    }

    bool assign(int i) {
        if (i == np) return true;
        if (!tick()) return false;
        Mask free = all & ~used;
        if (std::popcount(free) < np - i) return false;

        int x = order[i];
        Mask starts, base_forbidden_src;
        if (earlier[i].empty()) {
            starts = free;
            base_forbidden_src = free;
        } else {
            // Grow from the tightest earlier neighbor's frontier.
            int r0 = earlier[i][0];
            for (int r : earlier[i])
                if (std::popcount(bnbr[r] & free) < std::popcount(bnbr[r0] & free)) r0 = r;
            starts = bnbr[r0] & free;
            base_forbidden_src = starts;
        }
        Mask s = starts;
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            // Uniqueness: v is the least element of S within `starts`.
            Mask forbidden = base_forbidden_src & low_bits(v);
            // The grown set stays inside v's free component; it must be
            // able to reach every required frontier.
            if (earlier[i].size() > 1) {
                Mask comp = component_within(bit(v), free & ~forbidden);
                bool reachable = true;
                for (int r : earlier[i])
                    if (!(comp & bnbr[r])) {
                        reachable = false;
                        break;
                    }
                if (!reachable) continue;
            }
            if (grow(i, x, bit(v), hadj[v], forbidden)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }

    bool grow(int i, int x, Mask set, Mask nbrs, Mask forbidden) {
        if (!tick()) return false;
        bool covered = true;
        for (int r : earlier[i])
            if (!(nbrs & bset[r])) {
                covered = false;
                break;
            }
        if (covered && auts && !symmetry_keep(i, set)) covered = false;
        if (covered) {
            bset[x] = set;
            bnbr[x] = nbrs & ~set;
            used |= set;
            slack -= std::popcount(set) - 1;
            assigned_mask |= bit(x);
            for (int r : earlier[i]) {
                --pending[r];
                --pending[x];
            }
            const int ne = static_cast<int>(earlier[i].size());
            unassigned_edges -= pending[x];
            pending_total += pending[x] - ne;
            bool ok = std::popcount(bnbr[x] & all & ~used) >= pending[x] && support_ok(i) &&
                      feasible(i + 1) && assign(i + 1);
            unassigned_edges += pending[x];
            pending_total -= pending[x] - ne;
            for (int r : earlier[i]) {
                ++pending[r];
                ++pending[x];
            }
            assigned_mask &= ~bit(x);
            slack += std::popcount(set) - 1;
            used &= ~set;
            if (ok) return true;
            if (out_of_budget) return false;
        }
        if (std::popcount(set) - 1 >= slack) return false;
        Mask frontier = nbrs & all & ~used & ~set & ~forbidden;
        Mask f = frontier;
        while (f) {
            int c = std::countr_zero(f);
            f &= f - 1;
            if (grow(i, x, set | bit(c), nbrs | hadj[c], forbidden)) return true;
            if (out_of_budget) return false;
            forbidden |= bit(c);
        }
        return false;
    }

    MinorModel extract() const {
        MinorModel m{pattern, host, {}};
        m.branch_sets.resize(np);
        for (int v = 0; v < np; ++v) {
            Mask s = bset[v];
            while (s) {
                m.branch_sets[v].push_back(std::countr_zero(s));
                s &= s - 1;
            }
        }
        return m;
    }
};

std::vector<Mask> mask_components(const std::vector<Mask>& adj, Mask region) {
    std::vector<Mask> comps;
    Mask rest = region;
    while (rest) {
        Mask comp = bit(std::countr_zero(rest));
        for (;;) {
            Mask grown = comp;
            Mask it = comp;
            while (it) {
                grown |= adj[std::countr_zero(it)] & region;
                it &= it - 1;
            }
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        rest &= ~comp;
    }
    return comps;
}

// Candidate small host separators: threshold the vertex set at each
// degree value, keep thresholds whose removal disconnects the rest,
// and greedily shrink them (low-degree members first) while they stay
// separators. Products of a star with a small graph expose their hub
// copy this way.
std::vector<Mask> candidate_cuts(const Graph& g, int max_cut) {
    const int n = g.num_vertices();
    std::vector<Mask> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    const Mask all = n == 64 ? ~Mask{0} : low_bits(n);
    std::vector<Mask> cuts;
    if (mask_components(adj, all).size() > 1) {
        cuts.push_back(0);
        return cuts;
    }
    std::vector<int> degs;
    for (int v = 0; v < n; ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end(), std::greater<>());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (int d : degs) {
        Mask s = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= d) s |= bit(v);
        if (s == all || mask_components(adj, all & ~s).size() < 2) continue;
        std::vector<int> members;
        Mask it = s;
        while (it) {
            members.push_back(std::countr_zero(it));
            it &= it - 1;
        }
        std::sort(members.begin(), members.end(),
                  [&](int a, int b) { return g.degree(a) < g.degree(b); });
        for (int v : members) {
            Mask t = s & ~bit(v);
            if (mask_components(adj, all & ~t).size() >= 2) s = t;
        }
        if (std::popcount(s) <= max_cut &&
            std::find(cuts.begin(), cuts.end(), s) == cuts.end())
            cuts.push_back(s);
    }
    return cuts;
}

double binomial(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

MinorResult solve_minor(const Graph& host, const Graph& pattern, const SearchBudget& budget,
                        bool allow_precheck);

// Necessary condition for pattern <= host given a host separator S:
// at most |S| branch sets touch S; every other branch set lies inside
// one component of host - S, so for some U subset of V(pattern) with
// |U| <= |S| the components of pattern - U must individually embed as
// minors into single components of host - S without exceeding their
// capacities. Returns true only when no such U exists (a certified
// refutation); any doubt (budget, oversized cases) reports false.
bool cut_refutes(const Graph& host, const Graph& pattern, Mask cut, Clock::time_point deadline) {
    const int nh = host.num_vertices(), np = pattern.num_vertices();
    std::vector<Mask> hadj(nh, 0), padj(np, 0);
    for (auto [u, v] : host.edges()) {
        hadj[u] |= bit(v);
        hadj[v] |= bit(u);
    }
    for (auto [u, v] : pattern.edges()) {
        padj[u] |= bit(v);
        padj[v] |= bit(u);
    }
    const Mask all_h = nh == 64 ? ~Mask{0} : low_bits(nh);
    const Mask all_p = np == 64 ? ~Mask{0} : low_bits(np);

    auto comp_vertices = [](Mask m) {
        std::vector<Vertex> vs;
        while (m) {
            vs.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return vs;
    };

    struct Bin {
        int cap;
        Graph graph;
        int klass;
    };
    std::vector<Bin> bins;
    for (Mask cm : mask_components(hadj, all_h & ~cut)) {
        Graph cg = induced_subgraph(host, comp_vertices(cm)).graph;
        int klass = -1;
        for (size_t j = 0; j < bins.size() && klass < 0; ++j)
            if (bins[j].graph == cg) klass = bins[j].klass;
        if (klass < 0) klass = static_cast<int>(bins.size());
        bins.push_back({std::popcount(cm), std::move(cg), klass});
    }
    if (bins.size() < 2 && cut != 0) return false;
    int max_cap = 0, total_cap = 0;
    for (const auto& b : bins) {
        max_cap = std::max(max_cap, b.cap);
        total_cap += b.cap;
    }

    std::map<std::pair<int, Mask>, char> memo;  // (bin, comp mask) -> embeds?
    bool inconclusive = false;
    long long work = 0;
    const long long work_cap = 4'000'000;

    auto fits = [&](int j, Mask pm) -> bool {
        auto [it, fresh] = memo.try_emplace({j, pm}, 1);
        if (!fresh) return it->second;
        SearchBudget sb;
        sb.max_nodes = 200'000;
        sb.time_limit_s = 1.0;
        MinorResult r =
            solve_minor(bins[j].graph, induced_subgraph(pattern, comp_vertices(pm)).graph, sb,
                        false);
        it->second = r.answer != Answer::No;  // undecided counts as embeddable
        return it->second;
    };

    auto packable = [&](Mask u) -> bool {
        std::vector<Mask> pcomps = mask_components(padj, all_p & ~u);
        int total = 0;
        for (Mask pm : pcomps) {
            int sz = std::popcount(pm);
            if (sz > max_cap) return false;
            total += sz;
        }
        if (total > total_cap) return false;
        std::sort(pcomps.begin(), pcomps.end(), [](Mask a, Mask b) {
            return std::popcount(a) > std::popcount(b);
        });
        std::vector<int> rem;
        for (const auto& b : bins) rem.push_back(b.cap);
        auto dfs = [&](auto&& self, size_t i) -> bool {
            if (i == pcomps.size()) return true;
            if (++work > work_cap) {
                inconclusive = true;
                return true;
            }
            const int sz = std::popcount(pcomps[i]);
            // Bins of the same residual capacity and identical graph are
            // interchangeable; try one representative.
            std::vector<std::pair<int, int>> tried;
            for (size_t j = 0; j < bins.size(); ++j) {
                if (rem[j] < sz) continue;
                std::pair<int, int> key{bins[j].klass, rem[j]};
                if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
                tried.push_back(key);
                if (!fits(static_cast<int>(j), pcomps[i])) continue;
                rem[j] -= sz;
                if (self(self, i + 1)) return true;
                rem[j] += sz;
            }
            return false;
        };
        return dfs(dfs, 0);
    };

    const int cmax = std::min(std::popcount(cut), np);
    auto rec = [&](auto&& self, int start, Mask u, int size) -> bool {
        if (++work > work_cap || ((work & 0x3ff) == 0 && Clock::now() > deadline)) {
            inconclusive = true;
            return true;
        }
        if (packable(u)) return true;
        if (size == cmax) return false;
        for (int v = start; v < np; ++v)
            if (self(self, v + 1, u | bit(v), size + 1)) return true;
        return false;
    };
    bool feasible = rec(rec, 0, 0, 0);
    return !feasible && !inconclusive;
}

bool separator_refutes(const Graph& host, const Graph& pattern, Clock::time_point deadline) {
    const int np = pattern.num_vertices();
    if (host.num_vertices() > 64 || np < 4) return false;
    for (Mask cut : candidate_cuts(host, 6)) {
        int c = std::min(std::popcount(cut), np);
        if (binomial(np, c) > 300'000) continue;
        if (cut_refutes(host, pattern, cut, deadline)) return true;
        if (Clock::now() > deadline) break;
    }
    return false;
}

int num_components(const Graph& g) {
    int n = g.num_vertices(), comps = 0;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

MinorResult solve_minor(const Graph& host, const Graph& pattern, const SearchBudget& budget,
                        bool allow_precheck) {
    MinorResult res;
    if (host.num_vertices() > budget.max_host_vertices || host.num_vertices() > 64) {
        res.answer = Answer::BudgetExhausted;
        return res;
    }
    auto t0 = Clock::now();
    if (pattern.num_vertices() == 0) {
        res.answer = Answer::Yes;
        res.model = MinorModel{pattern, host, {}};
        res.elapsed_s = seconds_since(t0);
        return res;
    }
    // Minor-monotone invariants: edge count and cycle rank never grow.
    int rank_p = pattern.num_edges() - pattern.num_vertices() + num_components(pattern);
    int rank_h = host.num_edges() - host.num_vertices() + num_components(host);
    if (pattern.num_edges() > host.num_edges() || rank_p > rank_h) {
        res.answer = Answer::No;
        res.elapsed_s = seconds_since(t0);
        return res;
    }
    if (allow_precheck) {
        double slice = std::min(3.0, budget.time_limit_s / 4);
        auto cutoff = t0 + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(slice));
        if (separator_refutes(host, pattern, cutoff)) {
            res.answer = Answer::No;
            res.elapsed_s = seconds_since(t0);
            return res;
        }
    }
    // Iterative deepening on the number of extra host vertices spent on
    // branch sets: cheap shallow passes find models quickly; only the
    // final full-slack pass can certify "no".
    const int full = host.num_vertices() - pattern.num_vertices();
    std::vector<std::vector<int>> auts = enumerate_automorphisms(host, 5000, 2'000'000);
    std::vector<int> caps;
    for (int c = 0; c < full; c = c == 0 ? 1 : 2 * c) caps.push_back(c);
    caps.push_back(full);
    for (int cap : caps) {
        SearchBudget sub = budget;
        sub.max_nodes = budget.max_nodes - res.nodes;
        sub.time_limit_s = budget.time_limit_s - seconds_since(t0);
        if (sub.max_nodes <= 0 || sub.time_limit_s <= 0) {
            res.answer = Answer::BudgetExhausted;
            break;
        }
        MinorSearch search(host, pattern, sub, cap, &auts);
        bool found = search.assign(0);
        res.nodes += search.nodes;
        if (found) {
            res.answer = Answer::Yes;
            res.model = search.extract();
            break;
        }
        if (search.out_of_budget) {
            res.answer = Answer::BudgetExhausted;
            break;
        }
        if (cap == full) res.answer = Answer::No;
    }
    res.elapsed_s = seconds_since(t0);
    return res;
}

}  // namespace

MinorResult has_minor(const Graph& host, const Graph& pattern, const SearchBudget& budget) {
    if (pattern.num_vertices() > host.num_vertices())
        throw std::invalid_argument("has_minor: pattern larger than host");
    return solve_minor(host, pattern, budget, true);
}

GmResult gm_exact(const Graph& host, const SearchBudget& budget) {
    GmResult res;
    auto t0 = Clock::now();
    int n = host.num_vertices();
    if (n == 0) {
        res.exact = true;
        return res;
    }
    int kmax = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
    res.upper = kmax;
    for (int k = 1; k <= kmax; ++k) {
        SearchBudget sub = budget;
        sub.max_nodes = budget.max_nodes - res.nodes;
        sub.time_limit_s = budget.time_limit_s - seconds_since(t0);
        if (sub.max_nodes <= 0 || sub.time_limit_s <= 0) break;
        MinorResult r = has_minor(host, make_grid(k), sub);
        res.nodes += r.nodes;
        if (r.answer == Answer::Yes) {
            res.lower = k;
            res.witness = std::move(r.model);
        } else if (r.answer == Answer::No) {
            res.upper = k - 1;
            break;
        } else {
            break;
        }
    }
    res.exact = res.lower == res.upper;
    res.elapsed_s = seconds_since(t0);
    return res;
}

// ---- treewidth ----

namespace {

// Vertices outside S u {v} reachable from v through S.
int q_value(const std::vector<Mask>& adj, Mask s, int v) {
    Mask comp = bit(v), within = s | bit(v);
    for (;;) {
        Mask grown = comp;
        Mask it = comp;
        while (it) {
            grown |= adj[std::countr_zero(it)] & within;
            it &= it - 1;
        }
        if (grown == comp) break;
        comp = grown;
    }
    Mask reach = 0;
    while (comp) {
        reach |= adj[std::countr_zero(comp)];
        comp &= comp - 1;
    }
    return std::popcount(reach & ~s & ~bit(v));
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, const SearchBudget& budget) {
    TreewidthResult res;
    int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("treewidth_exact: empty graph");
    if (n > 18 || n > budget.max_host_vertices) return res;  // BudgetExhausted

    std::vector<Mask> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    const Mask full = low_bits(n);
    std::vector<std::int8_t> f(std::size_t{1} << n, 0);
    std::vector<std::int8_t> choice(std::size_t{1} << n, -1);
    f[0] = -1;
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(budget.time_limit_s));
    for (Mask s = 1; s <= full; ++s) {
        if ((s & 0xffff) == 0 && Clock::now() > deadline) return res;
        int best = 127, best_v = -1;
        Mask it = s;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            Mask rest = s & ~bit(v);
            int w = std::max<int>(f[rest], q_value(adj, rest, v));
            if (w < best) {
                best = w;
                best_v = v;
            }
        }
        f[s] = static_cast<std::int8_t>(best);
        choice[s] = static_cast<std::int8_t>(best_v);
    }
    res.answer = Answer::Yes;
    res.width = f[full];
    res.elimination_order.assign(n, -1);
    Mask s = full;
    for (int i = n - 1; i >= 0; --i) {
        int v = choice[s];
        res.elimination_order[i] = v;
        s &= ~bit(v);
    }
    res.decomposition = decomposition_from_elimination(g, res.elimination_order);
    return res;
}

TreeDecomposition decomposition_from_elimination(const Graph& g,
                                                 const std::vector<Vertex>& order) {
    const int n = g.num_vertices();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("decomposition_from_elimination: bad order length");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<std::vector<char>> fill(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) fill[u][v] = fill[v][u] = 1;

    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<Edge> tree_edges;
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> later;
        for (Vertex w = 0; w < n; ++w)
            if (fill[v][w] && pos[w] > i) later.push_back(w);
        td.bags[i] = later;
        td.bags[i].push_back(v);
        std::sort(td.bags[i].begin(), td.bags[i].end());
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                fill[later[a]][later[b]] = fill[later[b]][later[a]] = 1;
        int parent = -1;
        for (Vertex w : later)
            if (parent == -1 || pos[w] < parent) parent = pos[w];
        if (parent == -1 && i + 1 < n) parent = i + 1;
        if (parent != -1) tree_edges.push_back({std::min(i, parent), std::max(i, parent)});
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    tree_edges.erase(std::unique(tree_edges.begin(), tree_edges.end()), tree_edges.end());
    td.tree = Graph(n, std::move(tree_edges));
    return td;
}

int decomposition_width(const TreeDecomposition& td) {
    int w = -1;
    for (const auto& b : td.bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    using K = ValidationReport::Kind;
    const int n = g.num_vertices();
    if (td.tree.num_vertices() != static_cast<int>(td.bags.size()))
        return {K::Malformed, "bag count differs from tree order"};
    if (!is_tree(td.tree) && td.tree.num_vertices() > 0)
        return {K::Malformed, "decomposition graph is not a tree"};
    for (const auto& b : td.bags)
        for (Vertex v : b)
            if (v < 0 || v >= n) return {K::Malformed, "bag vertex out of range"};

    // Clause (a): every vertex and every edge inside some bag.
    std::vector<std::vector<int>> holding(n);
    for (size_t i = 0; i < td.bags.size(); ++i)
        for (Vertex v : td.bags[i]) holding[v].push_back(static_cast<int>(i));
    for (Vertex v = 0; v < n; ++v)
        if (holding[v].empty())
            return {K::EdgeUncovered, "vertex " + std::to_string(v) + " in no bag"};
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (int i : holding[u]) {
            const auto& b = td.bags[i];
            if (std::binary_search(b.begin(), b.end(), v)) {
                found = true;
                break;
            }
        }
        if (!found)
            return {K::EdgeUncovered,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") in no bag"};
    }
    // Clause (b): bags containing v induce a subtree.
    for (Vertex v = 0; v < n; ++v) {
        const auto& h = holding[v];
        std::vector<char> in_h(td.bags.size(), 0);
        for (int i : h) in_h[i] = 1;
        std::vector<int> stack{h[0]};
        std::vector<char> seen(td.bags.size(), 0);
        seen[h[0]] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            ++reached;
            for (int j : td.tree.neighbors(i))
                if (in_h[j] && !seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        if (reached != static_cast<int>(h.size()))
            return {K::NotConnected,
                    "bags containing vertex " + std::to_string(v) + " are disconnected"};
    }
    return ValidationReport::good();
}

// ---- feedback vertex set ----

namespace {

bool is_forest_without(const Graph& g, Mask removed) {
    int n = g.num_vertices();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : g.edges()) {
        if ((removed >> u & 1) || (removed >> v & 1)) continue;
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

bool pick_fvs(const Graph& g, int from, int left, Mask removed, long long& nodes,
              long long max_nodes, std::vector<Vertex>& out) {
    if (++nodes > max_nodes) return false;
    if (left == 0) {
        if (!is_forest_without(g, removed)) return false;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (removed >> v & 1) out.push_back(v);
        return true;
    }
    for (int v = from; v <= g.num_vertices() - left; ++v)
        if (pick_fvs(g, v + 1, left - 1, removed | bit(v), nodes, max_nodes, out)) return true;
    return false;
}

}  // namespace

FvsResult min_fvs(const Graph& g, const SearchBudget& budget) {
    FvsResult res;
    if (g.num_vertices() > 64 || g.num_vertices() > budget.max_host_vertices) return res;
    long long nodes = 0;
    for (int size = 0; size <= g.num_vertices(); ++size) {
        std::vector<Vertex> witness;
        if (pick_fvs(g, 0, size, 0, nodes, budget.max_nodes, witness)) {
            res.answer = Answer::Yes;
            res.size = size;
            res.witness = std::move(witness);
            return res;
        }
        if (nodes > budget.max_nodes) return res;
    }
    return res;
}

// ---- bramble order ----

namespace {

struct HittingSearch {
    const std::vector<Mask>& sets;
    long long nodes = 0, max_nodes;
    bool found = false;
    std::vector<int> best;

    void run(Mask chosen, std::vector<int>& cur) {
        if (++nodes > max_nodes) return;
        if (found && cur.size() >= best.size()) return;
        // Branch on the smallest unhit set.
        bool any = false;
        Mask pivot = 0;
        for (Mask s : sets)
            if (!(s & chosen) && (!any || std::popcount(s) < std::popcount(pivot))) {
                any = true;
                pivot = s;
            }
        if (!any) {
            found = true;
            best = cur;
            return;
        }
        Mask it = pivot;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            cur.push_back(v);
            run(chosen | bit(v), cur);
            cur.pop_back();
        }
    }
};

}  // namespace

BrambleOrderResult bramble_order(const Bramble& b, const SearchBudget& budget) {
    if (!validate_bramble(b).ok())
        throw std::invalid_argument("bramble_order: bramble does not validate");
    BrambleOrderResult res;
    int n = b.host.num_vertices();
    if (n > 64 || n > budget.max_host_vertices) return res;
    std::vector<Mask> sets;
    for (const auto& s : b.sets) {
        Mask m = 0;
        for (Vertex v : s) m |= bit(v);
        sets.push_back(m);
    }
    HittingSearch search{sets, 0, budget.max_nodes, false, {}};
    std::vector<int> cur;
    search.run(0, cur);
    if (search.nodes > budget.max_nodes || !search.found) return res;
    res.answer = Answer::Yes;
    res.order = static_cast<int>(search.best.size());
    res.hitting_set = search.best;
    std::sort(res.hitting_set.begin(), res.hitting_set.end());
    return res;
}

}  // namespace gridprod
