#include "indep/prooftree.hpp"

#include <algorithm>
#include <map>

namespace indep::prooftree {

std::pair<GenericAssignment, GenericAssignment> universal_pair(const AttributeSet& attrs,
                                                               Mask y) {
    if ((y & attrs.full_mask()) != y) throw precondition_error("Y outside the attribute set");
    GenericAssignment sigma, tau;
    sigma.syms.assign(attrs.size(), kSigma);
    tau.syms.assign(attrs.size(), kTau);
    for (int i = 0; i < attrs.size(); ++i)
        if (y >> i & 1) tau.syms[i] = kSigma;
    return {sigma, tau};
}

TreeBuilder::TreeBuilder(AttributeSet attrs) : attrs_(std::move(attrs)) {
    if (attrs_.size() > 16) throw resource_error("proof trees support at most 16 attributes");
    Node sigma, tau;
    sigma.val.assign(attrs_.size(), kSigma);
    tau.val.assign(attrs_.size(), kTau);
    nodes_.push_back(std::move(sigma));
    nodes_.push_back(std::move(tau));
}

int TreeBuilder::combine(int l, int r, const Triple& t) {
    if (l < 0 || l >= size() || r < 0 || r >= size())
        throw precondition_error("combine: unknown node");
    if ((t.covered() & attrs_.full_mask()) != t.covered())
        throw precondition_error("combine: triple outside the attribute set");

    std::uint64_t key =
        (std::uint64_t(l) << 48) | (std::uint64_t(r) << 32) | triple_code(t, attrs_.size());
    if (auto it = intern_.find(key); it != intern_.end()) return it->second;

    const Node& ln = nodes_[l];
    const Node& rn = nodes_[r];
    Mask bridged = 0;
    for (int i = 0; i < attrs_.size(); ++i) {
        if (!(t.y >> i & 1)) continue;
        std::uint32_t a = ln.val[i], b = rn.val[i];
        if (a == b) continue;
        if (a <= kTau && b <= kTau) {
            bridged |= Mask(1) << i;
            continue;
        }
        throw precondition_error("combine: sides cannot agree on " + attrs_.name(i));
    }

    Node n;
    n.left = l;
    n.right = r;
    n.used = t;
    n.introduced = bridged & ~(ln.assumed | rn.assumed);
    n.assumed = ln.assumed | rn.assumed | bridged;
    int id = size();
    n.val.assign(attrs_.size(), std::uint32_t(id));
    for (int i = 0; i < attrs_.size(); ++i) {
        if (t.x >> i & 1)
            n.val[i] = ln.val[i];
        else if (t.y >> i & 1)
            n.val[i] = (bridged >> i & 1) ? kSigma : ln.val[i];
        else if (t.z >> i & 1)
            n.val[i] = rn.val[i];
    }
    nodes_.push_back(std::move(n));
    intern_.emplace(key, id);
    return id;
}

namespace {

struct Regions {
    Mask s = 0, t = 0;
};

Regions regions_of(const std::vector<std::uint32_t>& val) {
    Regions reg;
    for (size_t i = 0; i < val.size(); ++i) {
        if (val[i] == kSigma) reg.s |= Mask(1) << i;
        if (val[i] == kTau) reg.t |= Mask(1) << i;
    }
    return reg;
}

bool admits_pattern(const Regions& reg, Mask assumed, const Triple& c) {
    if (c.trivial()) return false;
    if (c.x & ~reg.s) return false;
    if (c.z & ~reg.t) return false;
    if (c.y & ~(reg.s | reg.t)) return false;
    return (assumed & ~c.y) == 0;
}

template <class Emit>
void enumerate_conclusions(const Regions& reg, Mask assumed, Emit&& emit) {
    Mask leaves = reg.s | reg.t;
    if (assumed & ~leaves) return;
    // every leaf-symbol attribute goes to X' (sigma side), Z' (tau side),
    // the middle, or stays out; assumed attributes are pinned to the middle
    std::vector<int> attrs;
    for (int i = 0; i < 32; ++i)
        if (leaves >> i & 1) attrs.push_back(i);
    size_t k = attrs.size();
    std::vector<int> digit(k, 0);
    for (;;) {
        Mask x = 0, y = 0, z = 0;
        bool valid = true;
        for (size_t j = 0; j < k && valid; ++j) {
            Mask bit = Mask(1) << attrs[j];
            bool pinned = assumed & bit;
            switch (digit[j]) {
                case 0: if (pinned) valid = false; break;
                case 1: y |= bit; break;
                case 2:
                    if (pinned || !(reg.s & bit)) valid = false;
                    x |= bit;
                    break;
                case 3:
                    if (pinned || !(reg.t & bit)) valid = false;
                    z |= bit;
                    break;
            }
        }
        if (valid && x && z) emit(Triple(x, y, z));
        size_t j = 0;
        for (; j < k; ++j) {
            if (++digit[j] <= 3) break;
            digit[j] = 0;
        }
        if (j == k) return;
    }
}

}  // namespace

bool TreeBuilder::admits(int id, const Triple& conclusion) const {
    const Node& n = nodes_[id];
    return admits_pattern(regions_of(n.val), n.assumed, conclusion);
}

std::vector<Triple> TreeBuilder::interpretations(int id) const {
    const Node& n = nodes_[id];
    std::vector<Triple> out;
    enumerate_conclusions(regions_of(n.val), n.assumed, [&](const Triple& t) { out.push_back(t); });
    std::sort(out.begin(), out.end());
    return out;
}

std::string TreeBuilder::render(int id, Mask seed_y) const {
    const Node& n = nodes_[id];
    std::string out;
    for (int i = 0; i < attrs_.size(); ++i) {
        std::uint32_t s = n.val[i];
        if (s == kSigma)
            out += '0';
        else if (s == kTau)
            out += (seed_y >> i & 1) ? '0' : '1';
        else
            out += s <= 9 ? static_cast<char>('0' + s) : '?';
    }
    return out;
}

DerivationCheck check_derivation(const AttributeSet& attrs, const std::vector<Triple>& premises,
                                 const Triple& conclusion,
                                 const std::vector<DerivationStep>& tree) {
    if (tree.empty()) return {false, "empty derivation"};

    // a step may use any single-triple consequence of a premise
    std::vector<TripleSet> usable;
    usable.reserve(premises.size());
    for (const Triple& p : premises)
        usable.push_back(rules::single_triple_consequences(p, attrs.size()));

    TreeBuilder b(attrs);
    std::vector<int> built;
    for (size_t s = 0; s < tree.size(); ++s) {
        const DerivationStep& step = tree[s];
        bool known = false;
        for (const TripleSet& u : usable) known = known || u.contains(step.used);
        if (!known)
            return {false, "step " + std::to_string(s + 1) + " uses <" +
                               format_triple(attrs, step.used) + ">, not derivable from a premise"};
        auto ref = [&](int r) -> int {
            if (r == kSigmaLeaf) return b.sigma_leaf();
            if (r == kTauLeaf) return b.tau_leaf();
            if (r < 0 || r >= static_cast<int>(s)) throw precondition_error("bad step reference");
            return built[r];
        };
        try {
            built.push_back(b.combine(ref(step.left), ref(step.right), step.used));
        } catch (const precondition_error& e) {
            return {false, "step " + std::to_string(s + 1) + ": " + e.what()};
        }
    }
    if (conclusion.trivial()) return {false, "conclusion has an empty outside"};
    if (!b.admits(built.back(), conclusion))
        return {false, "root does not admit <" + format_triple(attrs, conclusion) + ">"};
    return {true, ""};
}

namespace {

struct SearchState {
    std::vector<std::uint32_t> val;  // defaults renamed 2,3,... by first occurrence
    Mask assumed = 0;
    int cost = 0;
};

std::vector<std::uint32_t> canonicalize(std::vector<std::uint32_t> val) {
    std::map<std::uint32_t, std::uint32_t> ren;
    for (auto& s : val) {
        if (s <= kTau) continue;
        auto it = ren.find(s);
        if (it == ren.end()) it = ren.emplace(s, std::uint32_t(2 + ren.size())).first;
        s = it->second;
    }
    return val;
}

std::string state_key(const std::vector<std::uint32_t>& val, Mask assumed) {
    std::string k;
    k.reserve(val.size() + 4);
    for (auto s : val) k += static_cast<char>(s);
    for (int b = 0; b < 4; ++b) k += static_cast<char>(assumed >> (8 * b) & 0xff);
    return k;
}

}  // namespace

std::vector<Triple> search_derivations(const AttributeSet& attrs,
                                       const std::vector<Triple>& premises, int max_nodes,
                                       std::size_t state_budget) {
    int n = attrs.size();
    TripleSet usable_set(n);
    for (const Triple& p : premises) {
        TripleSet cons = rules::single_triple_consequences(p, n);
        for (const Triple& c : cons.members()) usable_set.insert(c);
    }
    std::vector<Triple> usable;
    for (const Triple& c : usable_set.members()) {
        usable.push_back(c);
        usable.push_back(c.mirrored());
    }

    std::vector<SearchState> states;
    std::unordered_map<std::string, int> seen;
    auto add_state = [&](std::vector<std::uint32_t> val, Mask assumed, int cost) {
        val = canonicalize(std::move(val));
        std::string key = state_key(val, assumed);
        if (seen.count(key)) return;
        if (states.size() >= state_budget)
            throw resource_error("derivation search exceeded the state budget");
        seen.emplace(std::move(key), static_cast<int>(states.size()));
        states.push_back({std::move(val), assumed, cost});
    };
    add_state(std::vector<std::uint32_t>(n, kSigma), 0, 0);
    add_state(std::vector<std::uint32_t>(n, kTau), 0, 0);

    // combine(l, r, t): defaults of distinct states never provably agree;
    // combining a state with itself stands for reusing one function twice
    auto try_combine = [&](const SearchState& l, const SearchState& r, bool same,
                           const Triple& t, std::vector<std::uint32_t>& val,
                           Mask& assumed) -> bool {
        Mask bridged = 0;
        if (!same) {
            for (int i = 0; i < n; ++i) {
                if (!(t.y >> i & 1)) continue;
                std::uint32_t a = l.val[i], b = r.val[i];
                if (a <= kTau && b <= kTau) {
                    if (a != b) bridged |= Mask(1) << i;
                } else
                    return false;
            }
        }
        std::uint32_t fresh = 100;  // placeholder id, canonicalized away
        val.assign(n, fresh);
        for (int i = 0; i < n; ++i) {
            if (t.x >> i & 1)
                val[i] = l.val[i];
            else if (t.y >> i & 1)
                val[i] = (bridged >> i & 1) ? kSigma : l.val[i];
            else if (t.z >> i & 1)
                val[i] = r.val[i];
        }
        assumed = l.assumed | r.assumed | bridged;
        return true;
    };

    std::vector<std::uint32_t> val;
    for (int cost = 1; cost <= max_nodes; ++cost) {
        size_t count = states.size();  // states discovered so far
        for (size_t li = 0; li < count; ++li)
            for (size_t ri = 0; ri < count; ++ri) {
                if (states[li].cost + states[ri].cost + 1 != cost) continue;
                for (const Triple& t : usable) {
                    Mask assumed;
                    if (!try_combine(states[li], states[ri], li == ri, t, val, assumed)) continue;
                    add_state(val, assumed, cost);
                }
            }
    }

    TripleSet found(n);
    std::vector<Triple> out;
    for (const SearchState& s : states) {
        enumerate_conclusions(regions_of(s.val), s.assumed, [&](const Triple& t) {
            if (!found.contains(t)) {
                found.insert(t);
                out.push_back(t.canonical());
            }
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace indep::prooftree
