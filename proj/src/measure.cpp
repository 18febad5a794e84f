#include "indep/measure.hpp"

#include <algorithm>

namespace indep {

RationalMeasure::RationalMeasure(AttributeSet attrs, Value alphabet,
                                 std::vector<std::pair<Word, Rational>> weights)
    : attrs_(std::move(attrs)), alphabet_(alphabet) {
    enc_.nattrs = attrs_.size();
    enc_.bpv = bits_for_alphabet(alphabet_);
    if (!enc_.fits()) throw resource_error("measure does not fit the packed encoding");
    std::sort(weights.begin(), weights.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational sum;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (i && weights[i].first == weights[i - 1].first)
            throw precondition_error("duplicate assignment in measure");
        if (weights[i].second < Rational(0))
            throw precondition_error("negative weight in measure");
        for (int a = 0; a < enc_.nattrs; ++a)
            if (enc_.get(weights[i].first, a) >= alphabet_)
                throw precondition_error("measure assignment outside the alphabet");
        sum += weights[i].second;
        if (weights[i].second.positive()) support_.push_back(weights[i]);
    }
    if (!(sum == Rational(1))) throw precondition_error("weights must sum to exactly 1");
}

Rational RationalMeasure::weight(Word row) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), row,
                               [](const auto& a, Word b) { return a.first < b; });
    if (it != support_.end() && it->first == row) return it->second;
    return Rational(0);
}

bool RationalMeasure::strictly_positive() const {
    Word space = 1;
    for (int i = 0; i < enc_.nattrs; ++i) space *= alphabet_;
    return support_.size() == space;
}

RationalMeasure uniform_measure(const FunctionSet& a) {
    if (a.empty()) throw precondition_error("uniform measure needs a nonempty set");
    std::vector<std::pair<Word, Rational>> w;
    w.reserve(a.size());
    for (Word r : a.rows()) w.emplace_back(r, Rational(1, a.size()));
    return RationalMeasure(a.attrs(), a.alphabet(), std::move(w));
}

Rational marginal(const RationalMeasure& p, const Fragment& frag) {
    Word sm = p.enc().expand(frag.support);
    Rational sum;
    for (const auto& [row, wt] : p.support())
        if ((row & sm) == frag.bits) sum += wt;
    return sum;
}

Rational conditional(const RationalMeasure& p, const Fragment& of, const Fragment& given) {
    if (of.support & given.support)
        throw precondition_error("conditional fragments must have disjoint supports");
    Rational pg = marginal(p, given);
    if (pg.is_zero()) throw precondition_error("conditioning on a zero-probability fragment");
    Fragment joint{of.support | given.support, of.bits | given.bits};
    return marginal(p, joint) / pg;
}

namespace {

template <class Mass>
bool indep_by_groups(const std::vector<std::pair<Word, Mass>>& rows, Word xm, Word ym, Word zm,
                     Mass zero) {
    // per Y-class masses of X-, Z- and XZ-fragments; the independence
    // identity is checked for every x/z combination seen in the class
    std::unordered_map<Word, std::unordered_map<Word, Mass>> xmass, zmass, xzmass;
    std::unordered_map<Word, Mass> ymass;
    for (const auto& [row, wt] : rows) {
        Word yk = row & ym;
        auto add = [&](std::unordered_map<Word, Mass>& m, Word k) {
            auto [it, fresh] = m.emplace(k, wt);
            if (!fresh) it->second += wt;
        };
        add(xmass[yk], row & xm);
        add(zmass[yk], row & zm);
        add(xzmass[yk], row & (xm | zm));
        add(ymass, yk);
    }
    for (const auto& [yk, xs] : xmass) {
        const auto& zs = zmass[yk];
        const auto& xzs = xzmass[yk];
        Mass py = ymass[yk];
        for (const auto& [xk, px] : xs)
            for (const auto& [zk, pz] : zs) {
                auto it = xzs.find(xk | zk);
                Mass pxz = (it == xzs.end()) ? zero : it->second;
                if (!(pxz * py == px * pz)) return false;
            }
    }
    return true;
}

}  // namespace

bool prob_indep(const RationalMeasure& p, const Triple& t) {
    if ((t.covered() & p.attrs().full_mask()) != t.covered())
        throw precondition_error("triple mentions attributes outside the measure");
    if (t.trivial()) return true;
    const Encoding& e = p.enc();
    return indep_by_groups<Rational>(p.support(), e.expand(t.x), e.expand(t.y), e.expand(t.z),
                                     Rational(0));
}

bool prob_indep_uniform_counts(const FunctionSet& a, const Triple& t) {
    if ((t.covered() & a.attrs().full_mask()) != t.covered())
        throw precondition_error("triple mentions attributes outside the function set");
    if (a.empty()) throw precondition_error("empty function set");
    if (t.trivial()) return true;
    std::vector<std::pair<Word, long long>> rows;
    rows.reserve(a.rows().size());
    for (Word r : a.rows()) rows.emplace_back(r, 1LL);
    const Encoding& e = a.enc();
    return indep_by_groups<long long>(rows, e.expand(t.x), e.expand(t.y), e.expand(t.z), 0LL);
}

}  // namespace indep
