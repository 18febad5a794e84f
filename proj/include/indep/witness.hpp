#pragma once

#include <string>
#include <vector>

#include "indep/indep.hpp"
#include "indep/triple.hpp"

namespace indep::witness {

/// Broken loop over attributes {a, b_1..b_n}: the preserved family is the
/// length-n loop of triples <a|b_k|b_{k+1}> with the edge at k = i removed.
struct LoopSpec {
    int n = 3;  // loop length, >= 3
    int i = 1;  // broken index, 1..n
};

/// {"a", "b1", ..., "bn"}; attribute 0 is a, attribute k is b_k.
AttributeSet loop_attrs(const LoopSpec& spec);

/// The chain b_{i+1} > b_{i+2} > ... > b_n > b_1 > ... > b_i read off the
/// preserved loop; returned as b-indices (1-based), first element b_{i+1}.
std::vector<int> loop_order(const LoopSpec& spec);

/// The full loop family L over {a, b_1..b_n}: all n edges <a|b_k|b_{k+1}>
/// plus (implicitly) every empty-outside triple, closed under symmetry.
TripleSet loop_family(int n);

/// The preserved triples P of the witness: loop_family minus the broken
/// edge <a|b_i|b_{i+1}>.
TripleSet preserved_family(const LoopSpec& spec);

/// Counting Hamming distance between t and the nearest preserved triple,
/// both read as attribute sets: half the symmetric difference.
int dmin(const Triple& t, const TripleSet& preserved);

enum class DestroyClass {
    big_union,     // |X u Y u Z| > 3, one parity layer per 4-subset
    empty_middle,  // <X||Z>, the constant layer
    a_in_middle,   // <x|a|y> singletons
    no_a,          // <x|y'|z> singletons not mentioning a
    dmin_positive, // <a|y|z> with dmin > 0, an all-but layer per pair {y,z}
    dmin_zero,     // <a|y|z> with dmin = 0, one two-function layer each
};

struct Layer {
    FunctionSet fs;
    DestroyClass cls;
    Mask param = 0;                     // class parameter (parity X, y', or {y,z})
    std::vector<Triple> named_targets;  // concrete targets for the finite classes
};

struct DestructionPlan {
    LoopSpec spec;
    AttributeSet attrs;
    TripleSet preserved;
    std::vector<Layer> layers;
};

/// Does triple t fall into the destruction class this layer is
/// responsible for? Attribute 0 is a by construction.
bool layer_covers(const Layer& layer, const Triple& t);

std::string describe_layer(const DestructionPlan& plan, const Layer& layer);

/// Assemble the layered witness for the spec: parity layers for every
/// 4-subset, the constant layer, the a-in-middle pair, one pair layer per
/// middle attribute, an all-but layer per dmin>0 pair and a two-function
/// layer per dmin=0 target.
DestructionPlan build_witness(const LoopSpec& spec);

struct WitnessReport {
    std::vector<Triple> held;      // nontrivial triples holding in every layer
    std::vector<Triple> spurious;  // held but not expected
    std::vector<Triple> missing;   // expected but destroyed
    bool clean() const { return spurious.empty() && missing.empty(); }
};

/// Exhaustive classification of the 4^(n+1) triple space by per-layer
/// evaluation; expected held = preserved family plus the trivial triples.
WitnessReport verify_witness(const DestructionPlan& plan, int workers = 1);

}  // namespace indep::witness
