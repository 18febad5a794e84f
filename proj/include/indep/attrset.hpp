#pragma once

#include <string>
#include <vector>

#include "indep/util.hpp"

namespace indep {

/// Ordered list of distinct attribute names; the index set all masks,
/// assignments and triples refer to. Immutable after construction.
class AttributeSet {
  public:
    explicit AttributeSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a named attribute, -1 if absent.
    int index_of(const std::string& name) const;

    Mask full_mask() const { return size() >= 32 ? ~Mask(0) : (Mask(1) << size()) - 1; }
    Mask mask_of(const std::vector<std::string>& subset) const;

    /// "x,y,z"-style rendering of a subset mask ("-" for the empty set).
    std::string format_mask(Mask m, const char* sep = ",") const;

    bool operator==(const AttributeSet& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
};

/// I = {prefix0, prefix1, ...}
AttributeSet numbered_attrs(int n, const std::string& prefix = "x");

}  // namespace indep
