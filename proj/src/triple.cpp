#include "indep/triple.hpp"

#include <algorithm>

namespace indep {

Triple::Triple(Mask x_, Mask y_, Mask z_) : x(x_), y(y_), z(z_) {
    if ((x & y) || (x & z) || (y & z))
        throw precondition_error("triple components must be pairwise disjoint");
}

bool Triple::operator<(const Triple& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
}

Word triple_code(const Triple& t, int nattrs) {
    Word code = 0;
    for (int i = nattrs - 1; i >= 0; --i) {
        int digit = (t.x >> i & 1) ? 1 : (t.y >> i & 1) ? 2 : (t.z >> i & 1) ? 3 : 0;
        code = code * 4 + digit;
    }
    return code;
}

Triple triple_from_code(Word code, int nattrs) {
    Triple t;
    for (int i = 0; i < nattrs; ++i) {
        switch (code & 3) {
            case 1: t.x |= Mask(1) << i; break;
            case 2: t.y |= Mask(1) << i; break;
            case 3: t.z |= Mask(1) << i; break;
        }
        code >>= 2;
    }
    return t;
}

Word triple_space_size(int nattrs) { return Word(1) << (2 * nattrs); }

std::string format_triple(const AttributeSet& attrs, const Triple& t) {
    return attrs.format_mask(t.x, " ") + " | " + attrs.format_mask(t.y, " ") + " | " +
           attrs.format_mask(t.z, " ");
}

TripleSet::TripleSet(int nattrs) : nattrs_(nattrs) {
    if (nattrs < 1 || nattrs > 13)
        throw resource_error("triple set supports 1..13 attributes");
    bits_.assign(triple_space_size(nattrs), false);
}

bool TripleSet::contains(const Triple& t) const {
    if (t.trivial()) return true;
    return bits_[triple_code(t.canonical(), nattrs_)];
}

void TripleSet::insert(const Triple& t) {
    if (t.trivial()) return;
    auto b = bits_[triple_code(t.canonical(), nattrs_)];
    if (!b) { b = true; dirty_ = true; }
}

void TripleSet::erase(const Triple& t) {
    if (t.trivial()) return;
    auto b = bits_[triple_code(t.canonical(), nattrs_)];
    if (b) { b = false; dirty_ = true; }
}

const std::vector<Triple>& TripleSet::ordered() const {
    if (dirty_) {
        cache_.clear();
        for (Word c = 0; c < bits_.size(); ++c)
            if (bits_[c]) cache_.push_back(triple_from_code(c, nattrs_));
        dirty_ = false;
    }
    return cache_;
}

std::vector<Triple> TripleSet::all_members_with_trivial() const {
    std::vector<Triple> out;
    for (Word c = 0; c < bits_.size(); ++c) {
        Triple t = triple_from_code(c, nattrs_);
        if (contains(t)) out.push_back(t);
    }
    return out;
}

bool TripleSet::operator==(const TripleSet& o) const {
    return nattrs_ == o.nattrs_ && bits_ == o.bits_;
}

}  // namespace indep
