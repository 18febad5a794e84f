#pragma once

#include <string>
#include <vector>

#include "indep/attrset.hpp"

namespace indep {

/// One independence statement <X|Y|Z>: pairwise disjoint attribute subsets.
/// Nothing is said about attributes outside X|Y|Z.
struct Triple {
    Mask x = 0, y = 0, z = 0;

    Triple() = default;
    Triple(Mask x_, Mask y_, Mask z_);

    bool trivial() const { return x == 0 || z == 0; }
    Mask covered() const { return x | y | z; }
    Triple mirrored() const { return Triple(z, y, x); }
    /// Symmetry representative: X <= Z numerically.
    Triple canonical() const { return x <= z ? *this : mirrored(); }

    bool operator==(const Triple&) const = default;
    bool operator<(const Triple& o) const;
};

/// Placement code: every attribute picks one of {outside, X, Y, Z}; the
/// code is the base-4 number with digit i describing attribute i. This is
/// the enumeration order of all triple scans.
Word triple_code(const Triple& t, int nattrs);
Triple triple_from_code(Word code, int nattrs);
Word triple_space_size(int nattrs);  // 4^nattrs

std::string format_triple(const AttributeSet& attrs, const Triple& t);

/// Set of triples over a fixed attribute count, closed under symmetry;
/// trivial triples (empty X or Z) are members implicitly and never stored.
/// Backed by a bitmap over the placement-code space plus a sorted member
/// list in canonical form.
class TripleSet {
  public:
    explicit TripleSet(int nattrs);

    int nattrs() const { return nattrs_; }

    /// Membership applies symmetry transparently; trivial triples are in.
    bool contains(const Triple& t) const;
    /// Inserts t (and its mirror image); trivial triples are ignored.
    void insert(const Triple& t);
    void erase(const Triple& t);

    /// Canonical nontrivial members, sorted by placement code.
    const std::vector<Triple>& members() const { return ordered(); }
    int size() const { return static_cast<int>(ordered().size()); }

    /// All member triples including the trivial ones, both orientations,
    /// sorted by placement code. Exponential in nattrs; for rendering.
    std::vector<Triple> all_members_with_trivial() const;

    bool operator==(const TripleSet& o) const;

  private:
    const std::vector<Triple>& ordered() const;
    int nattrs_;
    std::vector<bool> bits_;  // indexed by placement code, canonical only
    mutable std::vector<Triple> cache_;
    mutable bool dirty_ = false;
};

}  // namespace indep
