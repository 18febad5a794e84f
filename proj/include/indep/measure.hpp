#pragma once

#include <unordered_map>
#include <vector>

#include "indep/funcset.hpp"
#include "indep/rational.hpp"
#include "indep/triple.hpp"

namespace indep {

/// Exact probability measure on the assignment space over a binary-or-larger
/// alphabet, given by its value on singletons. Nonnegative weights summing
/// to exactly 1; zero-weight assignments need not be stored.
class RationalMeasure {
  public:
    RationalMeasure(AttributeSet attrs, Value alphabet,
                    std::vector<std::pair<Word, Rational>> weights);

    const AttributeSet& attrs() const { return attrs_; }
    const Encoding& enc() const { return enc_; }
    Value alphabet() const { return alphabet_; }

    Rational weight(Word row) const;
    /// Support rows with positive weight, sorted.
    const std::vector<std::pair<Word, Rational>>& support() const { return support_; }

    /// True when every assignment of the full space has positive weight.
    bool strictly_positive() const;

  private:
    AttributeSet attrs_;
    Value alphabet_;
    Encoding enc_;
    std::vector<std::pair<Word, Rational>> support_;
};

/// P_A: weight 1/|A| on each member of A.
RationalMeasure uniform_measure(const FunctionSet& a);

/// Sum of weights of assignments extending the fragment; empty fragment -> 1.
Rational marginal(const RationalMeasure& p, const Fragment& frag);

/// P(x|y) = P(x,y)/P(y); explicit zero-denominator error.
Rational conditional(const RationalMeasure& p, const Fragment& of, const Fragment& given);

/// Probabilistic independence <X|Y|Z>_P in the multiplicative form
/// P(x,y,z)*P(y) = P(x,y)*P(y,z) (product form when Y is empty); exact
/// rational equality, no division.
bool prob_indep(const RationalMeasure& p, const Triple& t);

/// Integer-counting form of prob_indep(P_A, t):
/// |A_xyz|*|A_y| = |A_xy|*|A_yz| per fragment combination. Must agree with
/// the rational form exactly.
bool prob_indep_uniform_counts(const FunctionSet& a, const Triple& t);

}  // namespace indep
