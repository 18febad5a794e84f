#pragma once

#include <optional>
#include <vector>

#include "indep/rational.hpp"

namespace indep {

/// Finite preferential structure: points 0..n-1 with an irreflexive
/// preference relation (u pref v: u is preferred / smaller). Transitivity is
/// not required. Subsets of the universe are bitmasks.
class PreferenceStructure {
  public:
    PreferenceStructure(int n, std::vector<std::pair<int, int>> edges);
    /// adjacency given as bitmask rows: pref_rows[v] = { u : u pref v }.
    PreferenceStructure(int n, std::vector<Mask> preferred_to);

    int size() const { return n_; }
    bool pref(int u, int v) const { return preferred_to_[v] >> u & 1; }
    Mask universe() const { return n_ >= 32 ? ~Mask(0) : (Mask(1) << n_) - 1; }

    /// mu(A): elements of A with no preferred element inside A.
    Mask mu(Mask a) const;

    /// True when mu(A) is nonempty for every nonempty A (precondition of
    /// the BASIC machinery).
    bool mu_nonempty_everywhere() const;

  private:
    int n_;
    std::vector<Mask> preferred_to_;
};

/// f_A(B) = |mu(A) cap B| / |mu(A)|; requires B <= A and mu(A) nonempty.
Rational f_measure(const PreferenceStructure& s, Mask a, Mask b);

struct BasicViolation {
    Mask a, b, d;
    Rational f_a_d, f_a_b, f_b_d;
};

/// (BASIC): f_A(D) = f_A(B) * f_B(D) for all chains D <= B <= A with B
/// nonempty. Returns the first violating chain in enumeration order, or
/// nothing when the law holds.
std::optional<BasicViolation> check_basic(const PreferenceStructure& s);

/// Rankedness: no a,b incomparable with c related to exactly one of them
/// (in either direction).
bool is_ranked(const PreferenceStructure& s);

}  // namespace indep
