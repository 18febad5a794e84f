#include "indep/attrset.hpp"

#include <unordered_set>

namespace indep {

AttributeSet::AttributeSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw precondition_error("attribute set must be nonempty");
    if (names_.size() > 31) throw resource_error("more than 31 attributes are not supported");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw precondition_error("empty attribute name");
        if (!seen.insert(n).second) throw precondition_error("duplicate attribute name: " + n);
    }
}

int AttributeSet::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

Mask AttributeSet::mask_of(const std::vector<std::string>& subset) const {
    Mask m = 0;
    for (const auto& n : subset) {
        int i = index_of(n);
        if (i < 0) throw precondition_error("unknown attribute: " + n);
        m |= Mask(1) << i;
    }
    return m;
}

std::string AttributeSet::format_mask(Mask m, const char* sep) const {
    if (m == 0) return "-";
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (!(m >> i & 1)) continue;
        if (!out.empty()) out += sep;
        out += names_[i];
    }
    return out;
}

AttributeSet numbered_attrs(int n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return AttributeSet(std::move(names));
}

}  // namespace indep
