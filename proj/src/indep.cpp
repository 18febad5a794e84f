#include "indep/indep.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace indep {

namespace {

void check_domain(const FunctionSet& sigma, const Triple& t) {
    if ((t.covered() & sigma.attrs().full_mask()) != t.covered())
        throw precondition_error("triple mentions attributes outside the function set");
}

}  // namespace

bool set_indep(const FunctionSet& sigma, const Triple& t) {
    check_domain(sigma, t);
    if (t.trivial()) return true;

    const Encoding& enc = sigma.enc();
    Word ym = enc.expand(t.y);
    Word xm = enc.expand(t.x);
    Word zm = enc.expand(t.z);

    struct Group {
        std::unordered_set<Word> xs, zs, xzs;
    };
    std::unordered_map<Word, Group> groups;
    for (Word r : sigma.rows()) {
        Group& g = groups[r & ym];
        g.xs.insert(r & xm);
        g.zs.insert(r & zm);
        g.xzs.insert(r & (xm | zm));
    }
    for (const auto& [key, g] : groups) {
        (void)key;
        if (g.xzs.size() != g.xs.size() * g.zs.size()) return false;
    }
    return true;
}

bool set_indep_definition(const FunctionSet& sigma, const Triple& t) {
    check_domain(sigma, t);
    if (t.trivial()) return true;

    const Encoding& enc = sigma.enc();
    Word ym = enc.expand(t.y);
    Word xm = enc.expand(t.x);
    Word zm = enc.expand(t.z);

    std::unordered_set<Word> keys;
    keys.reserve(sigma.rows().size() * 2);
    for (Word r : sigma.rows()) keys.insert(r & (xm | ym | zm));

    for (Word f : sigma.rows())
        for (Word g : sigma.rows()) {
            if ((f & ym) != (g & ym)) continue;
            Word h = (f & (xm | ym)) | (g & zm);
            if (!keys.count(h)) return false;
        }
    return true;
}

}  // namespace indep
