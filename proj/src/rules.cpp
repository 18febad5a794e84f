#include "indep/rules.hpp"

#include <algorithm>
#include <unordered_map>

namespace indep::rules {

namespace {

Pattern pat(Mask x, Mask y, Mask z) { return Pattern{x, y, z}; }

constexpr Mask V(int i) { return Mask(1) << i; }

}  // namespace

RuleSchema rule_symmetry() {
    return {"symmetry", {"X", "Y", "Z"}, {pat(V(0), V(1), V(2))}, pat(V(2), V(1), V(0))};
}

RuleSchema rule_decomposition() {
    return {"decomposition",
            {"X", "Y", "Z", "W"},
            {pat(V(0), V(1), V(2) | V(3))},
            pat(V(0), V(1), V(2))};
}

RuleSchema rule_weak_union() {
    return {"weak-union",
            {"X", "Y", "Z", "W"},
            {pat(V(0), V(1), V(2) | V(3))},
            pat(V(0), V(1) | V(3), V(2))};
}

RuleSchema rule_contraction() {
    return {"contraction",
            {"X", "Y", "Z", "W"},
            {pat(V(0), V(1), V(2)), pat(V(0), V(1) | V(2), V(3))},
            pat(V(0), V(1), V(2) | V(3))};
}

RuleSchema rule_intersection() {
    return {"intersection",
            {"X", "Y", "Z", "W"},
            {pat(V(0), V(1) | V(3), V(2)), pat(V(0), V(1) | V(2), V(3))},
            pat(V(0), V(1), V(2) | V(3))};
}

RuleSchema rule_empty_outside() {
    return {"empty-outside", {"Y", "Z"}, {}, pat(0, V(0), V(1))};
}

RuleSchema rule_bin1() {
    return {"bin1",
            {"X", "Y", "Y'", "Z"},
            {pat(V(0), V(1), V(3)), pat(V(0), V(2), V(3)), pat(V(1), V(0) | V(3), V(2))},
            pat(V(0), V(1) | V(2), V(3))};
}

RuleSchema rule_bin2() {
    return {"bin2",
            {"X", "Y", "Y'", "Z"},
            {pat(V(0), V(1), V(3)), pat(V(0), V(3), V(2)), pat(V(1), V(0) | V(3), V(2))},
            pat(V(0), V(1) | V(2), V(3))};
}

RuleSchema rule_loop1(int n) {
    if (n < 1) throw precondition_error("loop1 needs n >= 1");
    RuleSchema r;
    r.name = "loop1_" + std::to_string(n);
    r.vars.push_back("A");
    for (int k = 1; k <= n; ++k) r.vars.push_back("B" + std::to_string(k));
    for (int k = 1; k < n; ++k) r.premises.push_back(pat(V(0), V(k), V(k + 1)));
    r.premises.push_back(pat(V(0), V(n), V(1)));
    r.conclusion = pat(V(0), V(1), V(n));
    return r;
}

RuleSchema rule_loop2() {
    // A..H = 0..7; premises ABC, ACD, DAE, DEF, FDG, FGH, HFB; conclusion HBF
    auto v = [](char c) { return V(c - 'A'); };
    RuleSchema r;
    r.name = "loop2";
    r.vars = {"A", "B", "C", "D", "E", "F", "G", "H"};
    r.premises = {pat(v('A'), v('B'), v('C')), pat(v('A'), v('C'), v('D')),
                  pat(v('D'), v('A'), v('E')), pat(v('D'), v('E'), v('F')),
                  pat(v('F'), v('D'), v('G')), pat(v('F'), v('G'), v('H')),
                  pat(v('H'), v('F'), v('B'))};
    r.conclusion = pat(v('H'), v('B'), v('F'));
    return r;
}

std::vector<RuleSchema> graphoid_rules() {
    return {rule_symmetry(), rule_decomposition(), rule_weak_union(), rule_contraction(),
            rule_empty_outside()};
}

RuleSchema rule_by_name(const std::string& name) {
    if (name == "symmetry") return rule_symmetry();
    if (name == "decomposition") return rule_decomposition();
    if (name == "weak-union") return rule_weak_union();
    if (name == "contraction") return rule_contraction();
    if (name == "intersection") return rule_intersection();
    if (name == "empty-outside") return rule_empty_outside();
    if (name == "bin1") return rule_bin1();
    if (name == "bin2") return rule_bin2();
    if (name == "loop2") return rule_loop2();
    if (name.rfind("loop1_", 0) == 0) return rule_loop1(std::stoi(name.substr(6)));
    if (name.rfind("loop1(", 0) == 0 && name.back() == ')')
        return rule_loop1(std::stoi(name.substr(6, name.size() - 7)));
    throw precondition_error("unknown rule: " + name);
}

std::string format_violation(const AttributeSet& attrs, const Violation& v) {
    std::string out = v.rule + ": ";
    for (size_t i = 0; i < v.premises.size(); ++i) {
        if (i) out += ", ";
        out += "<" + format_triple(attrs, v.premises[i]) + ">";
    }
    out += v.premises.empty() ? "|- " : " |- ";
    out += "<" + format_triple(attrs, v.conclusion) + "> fails";
    return out;
}

namespace {

/// Walks every assignment of disjoint subsets to `nvars` variables over
/// `nattrs` attributes (each attribute joins one variable or none) and
/// reports premise/conclusion instances against a triple predicate.
class Instantiator {
  public:
    Instantiator(const RuleSchema& rule, int nattrs) : rule_(rule), nattrs_(nattrs) {}

    template <class Pred, class OnViolation>
    void run(Pred&& holds, OnViolation&& emit, std::size_t limit) const {
        int nvars = static_cast<int>(rule_.vars.size());
        std::vector<int> digit(nattrs_, 0);
        std::vector<Mask> var_mask(nvars, 0);
        std::size_t found = 0;
        for (;;) {
            if (check_one(var_mask, holds, emit)) {
                if (++found >= limit) return;
            }
            int i = 0;
            for (; i < nattrs_; ++i) {
                Mask bit = Mask(1) << i;
                if (digit[i] > 0) var_mask[digit[i] - 1] &= ~bit;
                if (++digit[i] <= nvars) {
                    var_mask[digit[i] - 1] |= bit;
                    break;
                }
                digit[i] = 0;
            }
            if (i == nattrs_) return;
        }
    }

  private:
    static std::optional<Triple> instantiate(const Pattern& p, const std::vector<Mask>& vm) {
        Mask x = expand(p.x, vm), y = expand(p.y, vm), z = expand(p.z, vm);
        if ((x & y) || (x & z) || (y & z)) return std::nullopt;
        return Triple(x, y, z);
    }
    static Mask expand(Mask vars, const std::vector<Mask>& vm) {
        Mask out = 0;
        for (int v = 0; vars; ++v, vars >>= 1)
            if (vars & 1) out |= vm[v];
        return out;
    }

    template <class Pred, class OnViolation>
    bool check_one(const std::vector<Mask>& vm, Pred& holds, OnViolation& emit) const {
        auto conc = instantiate(rule_.conclusion, vm);
        if (!conc || conc->trivial()) return false;  // empty outside: trivially satisfied
        for (const Pattern& p : rule_.premises) {
            auto t = instantiate(p, vm);
            if (!t) return false;  // overlapping components: invalid instance
            if (!holds(*t)) return false;
        }
        if (holds(*conc)) return false;
        std::vector<Triple> prem;
        prem.reserve(rule_.premises.size());
        for (const Pattern& p : rule_.premises) prem.push_back(*instantiate(p, vm));
        emit(std::move(prem), *conc);
        return true;
    }

    const RuleSchema& rule_;
    int nattrs_;
};

/// Verdict cache over the canonical placement-code space.
template <class Eval>
class MemoPredicate {
  public:
    MemoPredicate(int nattrs, Eval eval) : nattrs_(nattrs), eval_(std::move(eval)) {}
    bool operator()(const Triple& t) {
        if (t.trivial()) return true;
        Word code = triple_code(t.canonical(), nattrs_);
        auto it = memo_.find(code);
        if (it != memo_.end()) return it->second;
        bool v = eval_(t);
        memo_.emplace(code, v);
        return v;
    }

  private:
    int nattrs_;
    Eval eval_;
    std::unordered_map<Word, bool> memo_;
};

void require_scan_bound(int nattrs, int max_attrs) {
    if (nattrs > max_attrs)
        throw resource_error("triple scan over " + std::to_string(nattrs) +
                             " attributes exceeds the bound " + std::to_string(max_attrs));
}

}  // namespace

TripleSet scan_triples(const FunctionSet& sigma, int max_attrs) {
    int n = sigma.attrs().size();
    require_scan_bound(n, max_attrs);
    TripleSet out(n);
    for (Word code = 0; code < triple_space_size(n); ++code) {
        Triple t = triple_from_code(code, n);
        if (t.trivial() || t.x > t.z) continue;
        if (set_indep(sigma, t)) out.insert(t);
    }
    return out;
}

std::vector<Triple> scan_triples_list(const FunctionSet& sigma, bool include_trivial,
                                      int max_attrs) {
    TripleSet t = scan_triples(sigma, max_attrs);
    return include_trivial ? t.all_members_with_trivial() : t.members();
}

TripleSet scan_triples_prob(const RationalMeasure& p, int max_attrs) {
    int n = p.attrs().size();
    require_scan_bound(n, max_attrs);
    TripleSet out(n);
    for (Word code = 0; code < triple_space_size(n); ++code) {
        Triple t = triple_from_code(code, n);
        if (t.trivial() || t.x > t.z) continue;
        if (prob_indep(p, t)) out.insert(t);
    }
    return out;
}

std::vector<Violation> check_closure(const TripleSet& t, const std::vector<RuleSchema>& rules,
                                     std::size_t limit) {
    std::vector<Violation> out;
    for (const RuleSchema& r : rules) {
        if (out.size() >= limit) break;
        Instantiator inst(r, t.nattrs());
        inst.run([&](const Triple& q) { return t.contains(q); },
                 [&](std::vector<Triple> prem, const Triple& conc) {
                     out.push_back({Violation::Kind::closure, r.name, std::move(prem), conc});
                 },
                 limit - out.size());
    }
    return out;
}

std::vector<Violation> check_rule_semantic(const RuleSchema& rule, const FunctionSet& sigma,
                                           std::size_t limit) {
    int n = sigma.attrs().size();
    require_scan_bound(n, 12);
    MemoPredicate holds(n, [&](const Triple& q) { return set_indep(sigma, q); });
    std::vector<Violation> out;
    Instantiator inst(rule, n);
    inst.run(holds,
             [&](std::vector<Triple> prem, const Triple& conc) {
                 out.push_back({Violation::Kind::semantic, rule.name, std::move(prem), conc});
             },
             limit);
    return out;
}

std::vector<Violation> check_rule_prob(const RuleSchema& rule, const RationalMeasure& p,
                                       std::size_t limit) {
    int n = p.attrs().size();
    require_scan_bound(n, 12);
    MemoPredicate holds(n, [&](const Triple& q) { return prob_indep(p, q); });
    std::vector<Violation> out;
    Instantiator inst(rule, n);
    inst.run(holds,
             [&](std::vector<Triple> prem, const Triple& conc) {
                 out.push_back({Violation::Kind::probabilistic, rule.name, std::move(prem), conc});
             },
             limit);
    return out;
}

TripleSet close_under(const TripleSet& t, const std::vector<RuleSchema>& rules) {
    TripleSet cur = t;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const RuleSchema& r : rules) {
            Instantiator inst(r, cur.nattrs());
            std::vector<Triple> add;
            inst.run([&](const Triple& q) { return cur.contains(q); },
                     [&](std::vector<Triple>, const Triple& conc) { add.push_back(conc); },
                     SIZE_MAX);
            for (const Triple& c : add) cur.insert(c);
            if (!add.empty()) changed = true;
        }
    }
    return cur;
}

CounterexampleSearch search_counterexample(const RuleSchema& rule, int max_attrs,
                                           int max_members, Word budget, Word start) {
    CounterexampleSearch res;
    Word index = 0;
    for (int k = 1; k <= max_members; ++k) {
        for (int m = 2; m <= max_attrs; ++m) {
            Word space = Word(1) << m;
            if (static_cast<Word>(k) > space) continue;
            AttributeSet attrs = numbered_attrs(m);
            // lexicographically ordered k-subsets of the binary rows
            std::vector<Word> pick(k);
            for (int i = 0; i < k; ++i) pick[i] = i;
            for (;;) {
                if (index++ >= start) {
                    if (res.examined >= budget) {
                        res.cursor = index - 1;
                        return res;
                    }
                    ++res.examined;
                    FunctionSet sigma(attrs, 2, std::vector<Word>(pick.begin(), pick.end()));
                    if (!check_rule_semantic(rule, sigma, 1).empty()) {
                        res.witness = std::move(sigma);
                        res.cursor = index;
                        return res;
                    }
                }
                int i = k - 1;
                while (i >= 0 && pick[i] == space - Word(k - i)) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    }
    res.cursor = index;
    res.exhausted = true;
    return res;
}

std::vector<Triple> sigma_mu(const TripleSet& t) {
    int n = t.nattrs();
    std::vector<Triple> out;
    for (Word code = 0; code < triple_space_size(n); ++code) {
        Triple c = triple_from_code(code, n);
        if (c.trivial() || c.x > c.z || t.contains(c)) continue;
        bool minimal = true;
        for (Mask xs = (c.x - 1) & c.x; minimal; xs = (xs - 1) & c.x) {
            if (!t.contains(Triple(xs, c.y, c.z))) minimal = false;
            if (xs == 0) break;
        }
        for (Mask zs = (c.z - 1) & c.z; minimal; zs = (zs - 1) & c.z) {
            if (!t.contains(Triple(c.x, c.y, zs))) minimal = false;
            if (zs == 0) break;
        }
        if (minimal) out.push_back(c);
    }
    return out;
}

TripleSet single_triple_consequences(const Triple& t, int nattrs) {
    TripleSet out(nattrs);
    // keep / to-middle / drop split of each outside component
    for (Mask xkeep = t.x;; xkeep = (xkeep - 1) & t.x) {
        Mask xrest = t.x & ~xkeep;
        for (Mask xmid = xrest;; xmid = (xmid - 1) & xrest) {
            for (Mask zkeep = t.z;; zkeep = (zkeep - 1) & t.z) {
                Mask zrest = t.z & ~zkeep;
                for (Mask zmid = zrest;; zmid = (zmid - 1) & zrest) {
                    if (xkeep && zkeep) out.insert(Triple(xkeep, xmid | t.y | zmid, zkeep));
                    if (zmid == 0) break;
                }
                if (zkeep == 0) break;
            }
            if (xmid == 0) break;
        }
        if (xkeep == 0) break;
    }
    return out;
}

std::vector<Violation> func_complic_check(const TripleSet& t, std::size_t limit) {
    auto closure = check_closure(
        t, {rule_symmetry(), rule_decomposition(), rule_weak_union(), rule_contraction()}, 1);
    if (!closure.empty())
        throw precondition_error("set not closed under (a)-(d): first violation on rule " +
                                 closure.front().rule);

    std::vector<Violation> out;
    auto splits3 = [](Mask whole, auto&& fn) {
        for (Mask a = whole;; a = (a - 1) & whole) {
            Mask rest = whole & ~a;
            for (Mask b = rest;; b = (b - 1) & rest) {
                fn(a, b, rest & ~b);
                if (b == 0) break;
            }
            if (a == 0) break;
        }
    };
    for (const Triple& m : sigma_mu(t)) {
        for (const Triple& o : {m, m.mirrored()}) {
            if (out.size() >= limit) return out;
            splits3(o.x, [&](Mask x, Mask x1, Mask x2) {
                splits3(o.y, [&](Mask y, Mask y1, Mask y2) {
                    splits3(o.z, [&](Mask z, Mask z1, Mask z2) {
                        if (out.size() >= limit) return;
                        Triple derived(x | y1 | z1, x1 | y | z2, x2 | y2 | z);
                        if (derived.trivial()) return;
                        if (t.contains(derived))
                            out.push_back({Violation::Kind::derived, "func-complic", {o}, derived});
                    });
                });
            });
        }
    }
    return out;
}

}  // namespace indep::rules
