#include "indep/formulas.hpp"

#include <algorithm>

namespace indep::formulas {

std::string format_conjunction(const LiteralConjunction& c) {
    std::string out;
    for (int i = 0; i < 64; ++i) {
        bool pos = c.positives >> i & 1, neg = c.negatives >> i & 1;
        if (!pos && !neg) continue;
        if (!out.empty()) out += " & ";
        if (neg) out += "!";
        out += "p" + std::to_string(i);
    }
    return out.empty() ? "true" : out;
}

std::vector<LiteralConjunction> phi_family(int k) {
    if (k < 1 || k > 63) throw precondition_error("phi family supports k in 1..63");
    std::vector<LiteralConjunction> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        LiteralConjunction c;
        c.positives = std::uint64_t(1) << i;
        c.negatives = (std::uint64_t(1) << i) - 1;
        out.push_back(c);
    }
    return out;
}

bool conj_disjoint(const LiteralConjunction& c1, const LiteralConjunction& c2) {
    if (!c1.consistent() || !c2.consistent())
        throw precondition_error("disjointness is defined for consistent conjunctions");
    return (c1.positives & c2.negatives) || (c2.positives & c1.negatives);
}

bool conj_disjoint_oracle(const LiteralConjunction& c1, const LiteralConjunction& c2,
                          int nvars) {
    if (nvars < 1 || nvars > 20) throw resource_error("oracle supports 1..20 variables");
    std::uint64_t space = std::uint64_t(1) << nvars;
    std::uint64_t used = c1.positives | c1.negatives | c2.positives | c2.negatives;
    if (used >= space) throw precondition_error("conjunction mentions variables beyond nvars");
    auto sat = [](const LiteralConjunction& c, std::uint64_t m) {
        return (c.positives & ~m) == 0 && (c.negatives & m) == 0;
    };
    for (std::uint64_t m = 0; m < space; ++m)
        if (sat(c1, m) && sat(c2, m)) return false;
    return true;
}

std::optional<LiteralConjunction> consistent_disjunct(const DNF& d) {
    for (const LiteralConjunction& c : d.disjuncts)
        if (c.consistent()) return c;
    return std::nullopt;
}

long long disjoint_family_bound(int i) {
    if (i < 1) throw precondition_error("length must be positive");
    long long b = 2;
    for (int k = 2; k <= i; ++k) b = 1 + k * b;
    return b;
}

namespace {

struct FamilySearch {
    const std::vector<LiteralConjunction>& all;
    std::vector<std::vector<char>> compatible;  // pairwise disjointness
    std::vector<int> picked;
    int best = 0;

    void rec(int from) {
        best = std::max(best, static_cast<int>(picked.size()));
        int n = static_cast<int>(all.size());
        if (static_cast<int>(picked.size()) + (n - from) <= best) return;
        for (int c = from; c < n; ++c) {
            bool ok = true;
            for (int p : picked)
                if (!compatible[p][c]) { ok = false; break; }
            if (!ok) continue;
            picked.push_back(c);
            rec(c + 1);
            picked.pop_back();
        }
    }
};

}  // namespace

int max_disjoint_family(int m, int i) {
    if (m < 1 || m > 6 || i < 1 || i > m)
        throw resource_error("family search supports 1 <= i <= m <= 6");
    // all consistent length-i conjunctions over m variables
    std::vector<LiteralConjunction> all;
    for (Mask vars = 0; vars < (Mask(1) << m); ++vars) {
        if (popcount(vars) != i) continue;
        for (Mask signs = vars;; signs = (signs - 1) & vars) {
            LiteralConjunction c;
            c.positives = vars & ~signs;
            c.negatives = signs;
            all.push_back(c);
            if (signs == 0) break;
        }
    }
    FamilySearch s{all, {}, {}, 0};
    s.compatible.assign(all.size(), std::vector<char>(all.size(), 0));
    for (size_t a = 0; a < all.size(); ++a)
        for (size_t b = 0; b < all.size(); ++b)
            s.compatible[a][b] = a != b && conj_disjoint(all[a], all[b]);
    s.rec(0);
    return s.best;
}

}  // namespace indep::formulas
