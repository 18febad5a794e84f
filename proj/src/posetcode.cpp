#include "indep/posetcode.hpp"

#include <algorithm>
#include <set>

namespace indep::poset {

std::string format_label(const MultisetLabel& l) {
    std::string out = "a^(" + std::to_string(l.exp) + ")";
    for (int i = 0; i < 24; ++i)
        if (l.base >> i & 1) out += static_cast<char>('b' + i);
    return out;
}

IntendedOrder::IntendedOrder(int n, const std::vector<std::pair<int, int>>& below_edges)
    : n_(n), below_(n, 0) {
    if (n < 1 || n > 64) throw resource_error("order size must be in 1..64");
    for (auto [u, v] : below_edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw precondition_error("edge endpoint out of range");
        if (u == v) throw precondition_error("strict order must be irreflexive");
        below_[v] |= std::uint64_t(1) << u;
    }
    // transitive closure
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            std::uint64_t acc = below_[v];
            for (int u = 0; u < n; ++u)
                if (below_[v] >> u & 1) acc |= below_[u];
            if (acc != below_[v]) {
                below_[v] = acc;
                changed = true;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (below_[v] >> v & 1) throw precondition_error("order contains a cycle");
}

IntendedOrder antichain_order(int k) { return IntendedOrder(k, {}); }

IntendedOrder chain_order(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return IntendedOrder(k, e);
}

IntendedOrder induced_order(const std::vector<MultisetLabel>& labels) {
    int n = static_cast<int>(labels.size());
    std::set<MultisetLabel> distinct(labels.begin(), labels.end());
    if (static_cast<int>(distinct.size()) != n)
        throw precondition_error("two nodes carry the same label");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && label_leq(labels[u], labels[v])) edges.emplace_back(u, v);
    return IntendedOrder(n, edges);
}

std::vector<MultisetLabel> encode_antichain(int n) {
    if (n < 1 || n > 20) throw resource_error("antichain encoding supports n in 1..20");
    std::vector<MultisetLabel> out;
    out.reserve(std::size_t(1) << n);
    unsigned top = (1u << n) - 1;
    for (Mask b = 0; b <= Mask(top); ++b) out.push_back({top - b, b});
    return out;
}

IntendedOrder Pyramid::intended() const {
    return IntendedOrder(static_cast<int>(labels.size()), cover);
}

Pyramid build_pyramid(int n) {
    if (n < 2 || n > 5) throw resource_error("pyramid supports n in 2..5");
    Pyramid p;
    p.n = n;
    p.labels = encode_antichain(n);
    p.level_start.push_back(0);
    for (int level = 1; level <= n - 1; ++level) {
        p.level_start.push_back(static_cast<int>(p.labels.size()));
        int width = 1 << (n - level);
        for (int i = 0; i < width; ++i) {
            int c0 = p.node_id(level - 1, 2 * i);
            int c1 = p.node_id(level - 1, 2 * i + 1);
            int id = static_cast<int>(p.labels.size());
            p.labels.push_back(label_union(p.labels[c0], p.labels[c1]));
            p.cover.emplace_back(c0, id);
            p.cover.emplace_back(c1, id);
        }
    }
    return p;
}

namespace {

/// below-set of a candidate label among existing labels
std::uint64_t induced_below(const std::vector<MultisetLabel>& labels, const MultisetLabel& cand) {
    std::uint64_t out = 0;
    for (size_t v = 0; v < labels.size(); ++v)
        if (labels[v] != cand && label_leq(labels[v], cand)) out |= std::uint64_t(1) << v;
    return out;
}

bool any_above(const std::vector<MultisetLabel>& labels, const MultisetLabel& cand) {
    for (const auto& l : labels)
        if (l != cand && label_leq(cand, l)) return true;
    return false;
}

std::uint64_t descendants_of(const IntendedOrder& order, std::initializer_list<int> tops) {
    std::uint64_t out = 0;
    for (int t : tops) {
        out |= std::uint64_t(1) << t;
        for (int u = 0; u < order.size(); ++u)
            if (order.less(u, t)) out |= std::uint64_t(1) << u;
    }
    return out;
}

}  // namespace

ExtensionReport check_extension_failure(int n) {
    if (n < 3) throw precondition_error("the extension failure needs n >= 3");
    Pyramid p = build_pyramid(n);
    IntendedOrder intended = p.intended();
    ExtensionReport rep;

    int lvl = n - 2;
    int a0 = p.node_id(lvl, 0), a2 = p.node_id(lvl, 2);
    int a1 = p.node_id(lvl, 1), a3 = p.node_id(lvl, 3);

    // first cross node, over X_{n-2,0} and X_{n-2,2}
    rep.first_label = label_union(p.labels[a0], p.labels[a2]);
    std::uint64_t want_first = descendants_of(intended, {a0, a2});
    rep.first_consistent = induced_below(p.labels, rep.first_label) == want_first &&
                           !any_above(p.labels, rep.first_label);

    // second cross node, over X_{n-2,1} and X_{n-2,3}; checked against the
    // pyramid plus the first node
    std::vector<MultisetLabel> with_first = p.labels;
    with_first.push_back(rep.first_label);
    std::uint64_t want_second = descendants_of(intended, {a1, a3});

    rep.second_label = label_union(p.labels[a1], p.labels[a3]);
    std::uint64_t got = induced_below(with_first, rep.second_label);
    std::uint64_t spurious = got & ~want_second;
    for (int v = 0; v < static_cast<int>(with_first.size()); ++v)
        if (spurious >> v & 1) {
            rep.spurious_below.push_back(v);
            rep.spurious_names.push_back(format_label(with_first[v]));
        }

    // exhaustive: any exponent in [0, 2^n) with any base covering both
    // children's bases
    Mask need = p.labels[a1].base | p.labels[a3].base;
    Mask all = (Mask(1) << n) - 1;
    Mask residual = all & ~need;
    rep.second_possible = false;
    for (unsigned e = 0; e < (1u << n) && !rep.second_possible; ++e) {
        for (Mask extra = residual;; extra = (extra - 1) & residual) {
            MultisetLabel cand{e, need | (residual & ~extra)};
            bool duplicate =
                std::find(with_first.begin(), with_first.end(), cand) != with_first.end();
            if (!duplicate && induced_below(with_first, cand) == want_second &&
                !any_above(with_first, cand)) {
                rep.second_possible = true;
                break;
            }
            if (extra == 0) break;
        }
    }
    return rep;
}

IntendedOrder subset_code_order(const std::vector<Mask>& family) {
    int n = static_cast<int>(family.size());
    std::set<Mask> distinct(family.begin(), family.end());
    if (static_cast<int>(distinct.size()) != n)
        throw precondition_error("duplicate subset in family");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (family[u] & ~family[v]) == 0) edges.emplace_back(u, v);
    return IntendedOrder(n, edges);
}

int longest_chain(const IntendedOrder& order) {
    int n = order.size();
    std::vector<int> depth(n, -1);
    // longest path in the DAG of the strict order
    auto rec = [&](auto&& self, int v) -> int {
        if (depth[v] >= 0) return depth[v];
        int best = 1;
        for (int u = 0; u < n; ++u)
            if (order.less(u, v)) best = std::max(best, self(self, u) + 1);
        return depth[v] = best;
    };
    int best = 0;
    for (int v = 0; v < n; ++v) best = std::max(best, rec(rec, v));
    return best;
}

std::vector<std::vector<int>> maximal_antichains(const IntendedOrder& order) {
    int n = order.size();
    if (n > 20) throw resource_error("antichain enumeration supports at most 20 nodes");
    std::vector<std::uint32_t> antichains;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = 0; v < n && ok; ++v)
                if ((s >> u & 1) && (s >> v & 1) && order.less(u, v)) ok = false;
        if (ok) antichains.push_back(s);
    }
    std::vector<std::vector<int>> out;
    for (std::uint32_t s : antichains) {
        bool maximal = true;
        for (std::uint32_t t : antichains)
            if (t != s && (s & ~t) == 0) { maximal = false; break; }
        if (!maximal) continue;
        std::vector<int> nodes;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) nodes.push_back(v);
        out.push_back(std::move(nodes));
    }
    return out;
}

namespace {

struct LabelSearch {
    const IntendedOrder& order;
    std::vector<MultisetLabel> candidates;  // deterministic order
    std::vector<MultisetLabel> chosen;

    bool consistent(int v, const MultisetLabel& cand) const {
        for (int u = 0; u < v; ++u) {
            if (chosen[u] == cand) return false;
            bool uv = label_leq(chosen[u], cand);
            bool vu = label_leq(cand, chosen[u]);
            if (uv != order.less(u, v)) return false;
            if (vu != order.less(v, u)) return false;
        }
        return true;
    }

    template <class OnSolution>
    bool backtrack(int v, OnSolution&& emit, bool stop_at_first) {
        if (v == order.size()) {
            emit(chosen);
            return stop_at_first;
        }
        for (const MultisetLabel& cand : candidates) {
            if (!consistent(v, cand)) continue;
            chosen[v] = cand;
            if (backtrack(v + 1, emit, stop_at_first)) return true;
        }
        return false;
    }
};

std::vector<MultisetLabel> label_space(LabelMode mode, int atoms, int nodes) {
    std::vector<MultisetLabel> out;
    if (mode == LabelMode::sets) {
        for (Mask b = 0; b < (Mask(1) << atoms); ++b) out.push_back({0, b});
    } else {
        int base_atoms = atoms - 1;
        for (unsigned e = 0; e <= static_cast<unsigned>(nodes); ++e)
            for (Mask b = 0; b < (Mask(1) << base_atoms); ++b) out.push_back({e, b});
    }
    return out;
}

}  // namespace

bool labeling_exists(const IntendedOrder& order, LabelMode mode, int atoms) {
    if (atoms < (mode == LabelMode::multisets ? 1 : 0))
        throw precondition_error("bad atom count");
    if (order.size() > 24) throw resource_error("label search supports at most 24 nodes");
    LabelSearch s{order, label_space(mode, atoms, order.size()),
                  std::vector<MultisetLabel>(order.size())};
    bool found = false;
    s.backtrack(0, [&](const std::vector<MultisetLabel>&) { found = true; }, true);
    return found;
}

std::optional<int> min_label_bruteforce(const IntendedOrder& order, LabelMode mode,
                                        int max_atoms) {
    int lo = mode == LabelMode::multisets ? 1 : 0;
    for (int m = lo; m <= max_atoms; ++m)
        if (labeling_exists(order, mode, m)) return m;
    return std::nullopt;
}

long long count_labelings_up_to_iso(const IntendedOrder& order, LabelMode mode, int atoms) {
    if (order.size() > 12) throw resource_error("labeling count supports at most 12 nodes");
    int base_atoms = mode == LabelMode::multisets ? atoms - 1 : atoms;
    std::vector<int> perm(base_atoms);
    LabelSearch s{order, label_space(mode, atoms, order.size()),
                  std::vector<MultisetLabel>(order.size())};
    std::set<std::vector<MultisetLabel>> canonical;
    s.backtrack(
        0,
        [&](const std::vector<MultisetLabel>& sol) {
            // canonical form: lexicographically least under base-atom permutation
            for (int i = 0; i < base_atoms; ++i) perm[i] = i;
            std::vector<MultisetLabel> best;
            do {
                std::vector<MultisetLabel> img = sol;
                for (auto& l : img) {
                    Mask b = 0;
                    for (int i = 0; i < base_atoms; ++i)
                        if (l.base >> i & 1) b |= Mask(1) << perm[i];
                    l.base = b;
                }
                if (best.empty() || img < best) best = std::move(img);
            } while (std::next_permutation(perm.begin(), perm.end()));
            canonical.insert(best);
        },
        false);
    return static_cast<long long>(canonical.size());
}

}  // namespace indep::poset
