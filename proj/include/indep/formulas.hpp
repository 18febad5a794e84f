#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indep/util.hpp"

namespace indep::formulas {

/// Conjunction of literals over propositional variables p_0, p_1, ...
/// (bit i of positives / negatives). Consistent iff the two sets are
/// disjoint.
struct LiteralConjunction {
    std::uint64_t positives = 0;
    std::uint64_t negatives = 0;

    bool consistent() const { return (positives & negatives) == 0; }
    int length() const {
        return std::popcount(positives) + std::popcount(negatives);
    }
    bool operator==(const LiteralConjunction&) const = default;
};

std::string format_conjunction(const LiteralConjunction& c);

struct DNF {
    std::vector<LiteralConjunction> disjuncts;
};

/// phi_i = (and_{j<i} not p_j) and p_i, for i = 0..k-1. Pairwise disjoint
/// model sets.
std::vector<LiteralConjunction> phi_family(int k);

/// Do the two consistent conjunctions have disjoint model sets, i.e. does
/// some variable occur positively in one and negatively in the other?
bool conj_disjoint(const LiteralConjunction& c1, const LiteralConjunction& c2);

/// Model-enumeration oracle over the first `nvars` variables; both
/// conjunctions must only mention those.
bool conj_disjoint_oracle(const LiteralConjunction& c1, const LiteralConjunction& c2, int nvars);

/// First consistent disjunct, if any.
std::optional<LiteralConjunction> consistent_disjunct(const DNF& d);

/// Bound from the finiteness induction: B_1 = 2, B_i = 1 + i * B_{i-1};
/// any pairwise-disjoint family of consistent length-i conjunctions has at
/// most this many members.
long long disjoint_family_bound(int i);

/// Size of a maximum pairwise-disjoint family of consistent length-i
/// conjunctions over m variables, by branch-and-bound.
int max_disjoint_family(int m, int i);

}  // namespace indep::formulas
