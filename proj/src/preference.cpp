#include "indep/preference.hpp"

namespace indep {

PreferenceStructure::PreferenceStructure(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), preferred_to_(n, 0) {
    if (n < 1 || n > 31) throw precondition_error("universe size must be in 1..31");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw precondition_error("edge endpoint outside the universe");
        if (u == v) throw precondition_error("preference relation must be irreflexive");
        preferred_to_[v] |= Mask(1) << u;
    }
}

PreferenceStructure::PreferenceStructure(int n, std::vector<Mask> preferred_to)
    : n_(n), preferred_to_(std::move(preferred_to)) {
    if (n < 1 || n > 31) throw precondition_error("universe size must be in 1..31");
    if (static_cast<int>(preferred_to_.size()) != n)
        throw precondition_error("adjacency size mismatch");
    for (int v = 0; v < n; ++v)
        if (preferred_to_[v] >> v & 1)
            throw precondition_error("preference relation must be irreflexive");
}

Mask PreferenceStructure::mu(Mask a) const {
    if ((a & universe()) != a) throw precondition_error("subset outside the universe");
    Mask out = 0;
    for (int v = 0; v < n_; ++v)
        if ((a >> v & 1) && !(preferred_to_[v] & a)) out |= Mask(1) << v;
    return out;
}

bool PreferenceStructure::mu_nonempty_everywhere() const {
    for (Mask a = 1; a <= universe(); ++a)
        if (mu(a) == 0) return false;
    return true;
}

Rational f_measure(const PreferenceStructure& s, Mask a, Mask b) {
    if ((b & a) != b) throw precondition_error("f_A(B) needs B inside A");
    Mask m = s.mu(a);
    if (m == 0) throw precondition_error("mu(A) is empty");
    return Rational(popcount(m & b), popcount(m));
}

std::optional<BasicViolation> check_basic(const PreferenceStructure& s) {
    if (!s.mu_nonempty_everywhere())
        throw precondition_error("structure has a nonempty A with empty mu(A)");
    Mask u = s.universe();
    for (Mask a = 1; a <= u; ++a) {
        for (Mask b = a; b; b = (b - 1) & a) {
            for (Mask d = b;; d = (d - 1) & b) {
                Rational fad = f_measure(s, a, d);
                Rational fab = f_measure(s, a, b);
                Rational fbd = f_measure(s, b, d);
                if (!(fad == fab * fbd)) return BasicViolation{a, b, d, fad, fab, fbd};
                if (d == 0) break;
            }
        }
    }
    return std::nullopt;
}

bool is_ranked(const PreferenceStructure& s) {
    int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (s.pref(a, b) || s.pref(b, a)) continue;  // comparable
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (s.pref(b, c) != s.pref(a, c)) return false;
                if (s.pref(c, b) != s.pref(c, a)) return false;
            }
        }
    return true;
}

}  // namespace indep
