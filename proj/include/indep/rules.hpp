#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "indep/indep.hpp"
#include "indep/measure.hpp"
#include "indep/triple.hpp"

namespace indep::rules {

/// Pattern component = union of rule variables (bit i = variable i).
struct Pattern {
    Mask x = 0, y = 0, z = 0;
};

/// Inference rule over set variables: premises -> conclusion, instantiated
/// by assigning pairwise-disjoint (possibly empty) attribute subsets to the
/// variables. Conclusions with an empty outside are trivially satisfied.
struct RuleSchema {
    std::string name;
    std::vector<std::string> vars;
    std::vector<Pattern> premises;
    Pattern conclusion;
};

RuleSchema rule_symmetry();       // (a)
RuleSchema rule_decomposition();  // (b)
RuleSchema rule_weak_union();     // (c)
RuleSchema rule_contraction();    // (d)
RuleSchema rule_intersection();   // (e)
RuleSchema rule_empty_outside();  // (0): <X|Y|Z> whenever X or Z is empty
RuleSchema rule_bin1();
RuleSchema rule_bin2();
RuleSchema rule_loop1(int n);  // cyclic rule of length n >= 1
RuleSchema rule_loop2();       // the fixed 7-premise instance

/// (a)-(d) plus the empty-outside convention.
std::vector<RuleSchema> graphoid_rules();

/// Lookup by name: symmetry, decomposition, weak-union, contraction,
/// intersection, empty-outside, bin1, bin2, loop1_<n>, loop2.
RuleSchema rule_by_name(const std::string& name);

struct Violation {
    enum class Kind { closure, semantic, probabilistic, derived };
    Kind kind;
    std::string rule;
    std::vector<Triple> premises;
    Triple conclusion;
};

std::string format_violation(const AttributeSet& attrs, const Violation& v);

/// All triples holding in sigma, by exhaustive scan of the 4^|I| placement
/// space. Bound guards the exponential enumeration.
TripleSet scan_triples(const FunctionSet& sigma, int max_attrs = 12);
/// Listing form; include_trivial also emits the implicit empty-outside
/// triples (both orientations).
std::vector<Triple> scan_triples_list(const FunctionSet& sigma, bool include_trivial,
                                      int max_attrs = 12);

/// Like scan_triples but over prob_indep(P_Sigma, t).
TripleSet scan_triples_prob(const RationalMeasure& p, int max_attrs = 12);

/// Instantiations whose premises are all in T but whose conclusion is not.
std::vector<Violation> check_closure(const TripleSet& t, const std::vector<RuleSchema>& rules,
                                     std::size_t limit = SIZE_MAX);

/// Instantiations where every premise holds in sigma (set_indep) but the
/// conclusion fails.
std::vector<Violation> check_rule_semantic(const RuleSchema& rule, const FunctionSet& sigma,
                                           std::size_t limit = SIZE_MAX);

/// The same over prob_indep. Intersection is only claimed for strictly
/// positive measures; the checker reports whatever fails.
std::vector<Violation> check_rule_prob(const RuleSchema& rule, const RationalMeasure& p,
                                       std::size_t limit = SIZE_MAX);

/// Least superset of T closed under the rules.
TripleSet close_under(const TripleSet& t, const std::vector<RuleSchema>& rules);

struct CounterexampleSearch {
    std::optional<FunctionSet> witness;
    Word examined = 0;   // candidates evaluated in this call
    Word cursor = 0;     // resume index (candidates skipped + examined)
    bool exhausted = false;
};

/// Deterministic search for a function set violating the rule: member count
/// ascending, then attribute count, then lexicographic member sets.
/// Restartable via `start` (global candidate index).
CounterexampleSearch search_counterexample(const RuleSchema& rule, int max_attrs,
                                           int max_members, Word budget, Word start = 0);

/// Minimal failing triples: t not in T whose every proper X- or Z-shrink is
/// in T. Canonical orientation, sorted by placement code.
std::vector<Triple> sigma_mu(const TripleSet& t);

/// Consequences of a single triple by decomposition, weak union and
/// symmetry: <Xk | Xm u Y u Zm | Zk> over 3-way splits keep/middle/drop of
/// X and Z, nonempty outsides.
TripleSet single_triple_consequences(const Triple& t, int nattrs);

/// Rearrangement theorem check for (a)-(d)-closed T: no minimal failing
/// triple may reappear in T after moving outside parts inward and middle
/// parts outward. Precondition failure names the closure violation.
std::vector<Violation> func_complic_check(const TripleSet& t, std::size_t limit = SIZE_MAX);

}  // namespace indep::rules
