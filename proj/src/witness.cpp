#include "indep/witness.hpp"

#include <algorithm>
#include <thread>

namespace indep::witness {

namespace {

void check_spec(const LoopSpec& s) {
    if (s.n < 3) throw precondition_error("loop length must be at least 3");
    if (s.i < 1 || s.i > s.n) throw precondition_error("broken index must be in 1..n");
}

Mask bit(int attr) { return Mask(1) << attr; }

// attribute index of b_k is k; a is 0
Triple edge(int k, int n) { return Triple(bit(0), bit(k), bit(k % n + 1)); }

}  // namespace

AttributeSet loop_attrs(const LoopSpec& spec) {
    check_spec(spec);
    std::vector<std::string> names{"a"};
    for (int k = 1; k <= spec.n; ++k) names.push_back("b" + std::to_string(k));
    return AttributeSet(std::move(names));
}

std::vector<int> loop_order(const LoopSpec& spec) {
    check_spec(spec);
    std::vector<int> chain;
    chain.reserve(spec.n);
    for (int off = 1; off <= spec.n; ++off) chain.push_back((spec.i + off - 1) % spec.n + 1);
    return chain;
}

TripleSet loop_family(int n) {
    if (n < 3) throw precondition_error("loop family needs n >= 3");
    TripleSet out(n + 1);
    for (int k = 1; k <= n; ++k) out.insert(edge(k, n));
    return out;
}

TripleSet preserved_family(const LoopSpec& spec) {
    check_spec(spec);
    TripleSet out = loop_family(spec.n);
    out.erase(edge(spec.i, spec.n));
    return out;
}

int dmin(const Triple& t, const TripleSet& preserved) {
    if (preserved.size() == 0) throw precondition_error("dmin needs a nonempty preserved family");
    int best = -1;
    for (const Triple& p : preserved.members()) {
        int d = popcount(t.covered() ^ p.covered()) / 2;
        if (best < 0 || d < best) best = d;
    }
    return best;
}

DestructionPlan build_witness(const LoopSpec& spec) {
    check_spec(spec);
    AttributeSet attrs = loop_attrs(spec);
    int n = spec.n;
    Mask full = attrs.full_mask();
    DestructionPlan plan{spec, attrs, preserved_family(spec), {}};

    // (i) one parity layer per 4-element subset; kills every triple whose
    // union exceeds three attributes while touching X on both outsides
    for (Mask x = 0; x <= full; ++x) {
        if (popcount(x) != 4) continue;
        plan.layers.push_back({parity_set(attrs, x), DestroyClass::big_union, x, {}});
    }

    // (ii) the constant layer: kills every <X||Z> with nonempty outsides
    plan.layers.push_back({constant_set(attrs), DestroyClass::empty_middle, 0, {}});

    // (iii) a=0, rest 1: kills every <x|a|y>
    plan.layers.push_back(
        {pair_set(attrs, Word(full & ~bit(0))), DestroyClass::a_in_middle, bit(0), {}});

    // (iv) a=y'=0, rest 1 for every middle attribute y': kills the
    // three-attribute triples that do not mention a
    for (int k = 1; k <= n; ++k) {
        plan.layers.push_back({pair_set(attrs, Word(full & ~bit(0) & ~bit(k))),
                               DestroyClass::no_a, bit(k), {}});
    }

    // destroyed <a|b_y|b_z> split by dmin
    std::vector<std::pair<int, int>> dmin0;
    std::vector<Mask> dminpos;  // unordered pairs {y,z}
    for (int y = 1; y <= n; ++y)
        for (int z = 1; z <= n; ++z) {
            if (y == z) continue;
            Triple t(bit(0), bit(y), bit(z));
            if (plan.preserved.contains(t)) continue;
            if (dmin(t, plan.preserved) == 0)
                dmin0.emplace_back(y, z);
            else if (Mask pair = bit(y) | bit(z);
                     std::find(dminpos.begin(), dminpos.end(), pair) == dminpos.end())
                dminpos.push_back(pair);
        }

    // (v) all binary functions except a=y=z=0, one layer per pair
    for (Mask pair : dminpos) {
        Layer l{all_but(attrs, Fragment{bit(0) | pair, 0}), DestroyClass::dmin_positive, pair, {}};
        int y = std::countr_zero(pair), z = 31 - std::countl_zero(pair);
        l.named_targets = {Triple(bit(0), bit(y), bit(z)), Triple(bit(0), bit(z), bit(y))};
        plan.layers.push_back(std::move(l));
    }

    // (vi) dmin=0 targets <a|y|z>: z is the immediate chain predecessor of
    // y; set a=1, everything up to z = 1, y onwards = 0
    std::vector<int> chain = loop_order(spec);
    auto chain_pos = [&](int b) {
        return static_cast<int>(std::find(chain.begin(), chain.end(), b) - chain.begin());
    };
    for (auto [y, z] : dmin0) {
        if (chain_pos(z) + 1 != chain_pos(y))
            throw error("dmin=0 target is not chain-adjacent");  // construction invariant
        Word row = bit(0);
        for (int pos = 0; pos <= chain_pos(z); ++pos) row |= bit(chain[pos]);
        Layer l{pair_set(attrs, row), DestroyClass::dmin_zero, bit(y) | bit(z), {}};
        l.named_targets = {Triple(bit(0), bit(y), bit(z))};
        plan.layers.push_back(std::move(l));
    }
    return plan;
}

bool layer_covers(const Layer& layer, const Triple& t) {
    if (t.trivial()) return false;
    Mask a = bit(0);
    switch (layer.cls) {
        case DestroyClass::big_union:
            return (t.x & layer.param) && (t.z & layer.param) &&
                   (layer.param & ~t.covered()) == 0;
        case DestroyClass::empty_middle:
            return t.y == 0;
        case DestroyClass::a_in_middle:
            return t.y == a && popcount(t.x) == 1 && popcount(t.z) == 1;
        case DestroyClass::no_a:
            return t.y == layer.param && popcount(t.x) == 1 && popcount(t.z) == 1 &&
                   !(t.covered() & a);
        case DestroyClass::dmin_positive:
        case DestroyClass::dmin_zero:
            for (const Triple& target : layer.named_targets)
                if (t.canonical() == target.canonical()) return true;
            return false;
    }
    return false;
}

std::string describe_layer(const DestructionPlan& plan, const Layer& layer) {
    const AttributeSet& attrs = plan.attrs;
    switch (layer.cls) {
        case DestroyClass::big_union:
            return "parity on {" + attrs.format_mask(layer.param) + "}";
        case DestroyClass::empty_middle:
            return "constant functions";
        case DestroyClass::a_in_middle:
            return "pair a=0 rest 1";
        case DestroyClass::no_a:
            return "pair a=" + attrs.format_mask(layer.param) + "=0 rest 1";
        case DestroyClass::dmin_positive:
            return "all-but a=" + attrs.format_mask(layer.param, "=") + "=0";
        case DestroyClass::dmin_zero:
            return "pair for <" + format_triple(attrs, layer.named_targets.front()) + ">";
    }
    return "?";
}

WitnessReport verify_witness(const DestructionPlan& plan, int workers) {
    int n = plan.attrs.size();
    Word space = triple_space_size(n);
    std::vector<char> held_map(space, 0);

    auto classify = [&](Word lo, Word hi) {
        for (Word code = lo; code < hi; ++code) {
            Triple t = triple_from_code(code, n);
            if (t.trivial() || t.x > t.z) continue;
            bool held = true;
            for (const Layer& l : plan.layers)
                if (!set_indep(l.fs, t)) { held = false; break; }
            held_map[code] = held;
        }
    };
    if (workers <= 1) {
        classify(0, space);
    } else {
        std::vector<std::thread> pool;
        Word chunk = (space + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(classify, std::min(space, w * chunk),
                              std::min(space, (w + 1) * chunk));
        for (auto& th : pool) th.join();
    }

    WitnessReport rep;
    for (Word code = 0; code < space; ++code) {
        if (!held_map[code]) continue;
        Triple t = triple_from_code(code, n);
        rep.held.push_back(t);
        if (!plan.preserved.contains(t)) rep.spurious.push_back(t);
    }
    for (const Triple& p : plan.preserved.members())
        if (!held_map[triple_code(p, n)]) rep.missing.push_back(p);
    return rep;
}

}  // namespace indep::witness
