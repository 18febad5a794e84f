#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indep/util.hpp"

namespace indep::poset {

/// Multiset label a^exp B': exp copies of the distinguished atom plus a
/// plain set of base atoms. Order is multiset inclusion.
struct MultisetLabel {
    unsigned exp = 0;
    Mask base = 0;
    bool operator==(const MultisetLabel&) const = default;
    bool operator<(const MultisetLabel& o) const {
        return exp != o.exp ? exp < o.exp : base < o.base;
    }
};

inline bool label_leq(const MultisetLabel& a, const MultisetLabel& b) {
    return a.exp <= b.exp && (a.base & ~b.base) == 0;
}

inline MultisetLabel label_union(const MultisetLabel& a, const MultisetLabel& b) {
    return {a.exp > b.exp ? a.exp : b.exp, a.base | b.base};
}

/// "a^(7)bc" style; base atoms print as b, c, d, ...
std::string format_label(const MultisetLabel& l);

/// Strict partial order on nodes 0..n-1, stored transitively closed.
class IntendedOrder {
  public:
    IntendedOrder(int n, const std::vector<std::pair<int, int>>& below_edges);

    int size() const { return n_; }
    bool less(int u, int v) const { return below_[v] >> u & 1; }

    bool operator==(const IntendedOrder& o) const {
        return n_ == o.n_ && below_ == o.below_;
    }

  private:
    int n_;
    std::vector<std::uint64_t> below_;  // bit u of below_[v]: u strictly below v
};

IntendedOrder antichain_order(int k);
IntendedOrder chain_order(int k);

/// Strict order induced by the labels (u below v iff label(u) < label(v)
/// in multiset inclusion). Duplicate labels are an error.
IntendedOrder induced_order(const std::vector<MultisetLabel>& labels);

/// The 2^n pairwise incomparable labels a^(B')B': exponent 2^n - 1 - c(B')
/// with c the binary subset code, so larger bases get strictly smaller
/// exponents.
std::vector<MultisetLabel> encode_antichain(int n);

/// Bottom antichain of 2^n nodes plus levels of pairwise unions: level k
/// node i sits above level k-1 nodes 2i and 2i+1, up to level n-1.
struct Pyramid {
    int n = 0;
    std::vector<MultisetLabel> labels;       // level-major, bottom level first
    std::vector<int> level_start;            // node id of each level's first node
    std::vector<std::pair<int, int>> cover;  // (child, parent) edges
    int node_id(int level, int index) const { return level_start[level] + index; }
    int level_size(int level) const { return 1 << (n - level); }
    IntendedOrder intended() const;
};

Pyramid build_pyramid(int n);

/// Attempt to extend the pyramid with two cross nodes above level n-2:
/// the first (over X_{n-2,0} and X_{n-2,2}) fits, the second (over
/// X_{n-2,1} and X_{n-2,3}) forces unintended comparabilities, and no
/// exponent/base choice fixes it.
struct ExtensionReport {
    MultisetLabel first_label;
    bool first_consistent = false;
    MultisetLabel second_label;
    std::vector<int> spurious_below;     // nodes unintendedly below the second label
    bool second_possible = false;        // some label for the second node works
    std::vector<std::string> spurious_names;
};

ExtensionReport check_extension_failure(int n);

/// Inclusion order of a family of attribute subsets; duplicates are an error.
IntendedOrder subset_code_order(const std::vector<Mask>& family);

int longest_chain(const IntendedOrder& order);
/// Inclusion-maximal antichains (node sets, each sorted), for small orders.
std::vector<std::vector<int>> maximal_antichains(const IntendedOrder& order);

enum class LabelMode { sets, multisets };

/// Is there an injective labeling with `atoms` atoms whose induced order is
/// exactly `order`? In sets mode all atoms are plain; in multisets mode one
/// atom is the repeatable a (exponent bounded by the node count).
bool labeling_exists(const IntendedOrder& order, LabelMode mode, int atoms);

/// Smallest alphabet size admitting an exact labeling, or nothing within
/// max_atoms.
std::optional<int> min_label_bruteforce(const IntendedOrder& order, LabelMode mode,
                                        int max_atoms);

/// Number of exact labelings with the given alphabet size, counted up to
/// permutation of the base atoms.
long long count_labelings_up_to_iso(const IntendedOrder& order, LabelMode mode, int atoms);

}  // namespace indep::poset
