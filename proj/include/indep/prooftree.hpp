#pragma once

#include <string>
#include <vector>

#include "indep/rules.hpp"
#include "indep/triple.hpp"

namespace indep::prooftree {

/// Per-attribute symbols of generic functions. 0 = copies sigma, 1 = copies
/// tau, k >= 2 = the fresh default of node k. Two values are provably equal
/// exactly when the symbols match, or one is sigma's and the other tau's at
/// an attribute where sigma=tau is assumed.
constexpr std::uint32_t kSigma = 0;
constexpr std::uint32_t kTau = 1;

struct GenericAssignment {
    std::vector<std::uint32_t> syms;
};

/// Maximally different starting pair agreeing exactly on y: sigma carries
/// its own symbol everywhere, tau shares it on y.
std::pair<GenericAssignment, GenericAssignment> universal_pair(const AttributeSet& attrs, Mask y);

struct Node {
    int left = -1, right = -1;  // -1 for leaves
    Triple used;
    std::vector<std::uint32_t> val;
    Mask assumed = 0;     // sigma=tau assumptions used anywhere below
    Mask introduced = 0;  // assumptions first bridged at this node
};

/// Construction context over one attribute set. Nodes are interned by
/// recipe (left, right, triple), so re-deriving the same combination yields
/// the same node and the same default symbol; equality of defaults across
/// subtrees is exactly construction equality.
class TreeBuilder {
  public:
    explicit TreeBuilder(AttributeSet attrs);

    const AttributeSet& attrs() const { return attrs_; }
    int sigma_leaf() const { return 0; }
    int tau_leaf() const { return 1; }

    /// New (or interned) node copying `l` on t.X, the shared part on t.Y and
    /// `r` on t.Z, with a fresh default elsewhere. A sigma/tau mismatch on
    /// t.Y is recorded as an assumption; a default mismatch throws.
    int combine(int l, int r, const Triple& t);

    const Node& node(int id) const { return nodes_[id]; }
    int size() const { return static_cast<int>(nodes_.size()); }

    /// Can the node be read as a derivation of `conclusion`? Requires
    /// nonempty outsides drawn from the sigma/tau regions, a middle of leaf
    /// symbols covering every assumption used below the node.
    bool admits(int id, const Triple& conclusion) const;

    /// All conclusions the node admits, oriented (X' from sigma, Z' from
    /// tau), in deterministic order.
    std::vector<Triple> interpretations(int id) const;

    /// Paper-style digit rendering: sigma values print 0, tau values 1
    /// (0 inside seed_y), defaults print their node id.
    std::string render(int id, Mask seed_y) const;

  private:
    AttributeSet attrs_;
    std::vector<Node> nodes_;
    std::unordered_map<std::uint64_t, int> intern_;
};

/// One construction step; children refer to earlier steps by index,
/// kSigmaLeaf/kTauLeaf name the two leaves.
constexpr int kSigmaLeaf = -1;
constexpr int kTauLeaf = -2;
struct DerivationStep {
    int left, right;
    Triple used;
};

struct DerivationCheck {
    bool ok = false;
    std::string reason;
};

/// Does the step script derive `conclusion` from `premises`? Every step may
/// use a premise, a single-triple consequence of one, or a mirror image;
/// the root must admit the conclusion with all assumptions inside
/// conclusion.Y.
DerivationCheck check_derivation(const AttributeSet& attrs, const std::vector<Triple>& premises,
                                 const Triple& conclusion,
                                 const std::vector<DerivationStep>& tree);

/// All conclusions derivable by universal trees with at most max_nodes
/// combination nodes (tree size, repetitions counted). Exploration works on
/// canonicalized node patterns: default symbols are renamed per node, so
/// derivations that need default equality across separately built subtrees
/// are not found here (check_derivation verifies those exactly).
std::vector<Triple> search_derivations(const AttributeSet& attrs,
                                       const std::vector<Triple>& premises, int max_nodes,
                                       std::size_t state_budget = 200000);

}  // namespace indep::prooftree
