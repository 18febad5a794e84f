#include "indep/funcset.hpp"

#include <algorithm>

namespace indep {

FunctionSet::FunctionSet(AttributeSet attrs, Value alphabet, std::vector<Word> rows)
    : attrs_(std::move(attrs)), alphabet_(alphabet) {
    if (alphabet_ < 1) throw precondition_error("alphabet must have at least one value");
    enc_.nattrs = attrs_.size();
    enc_.bpv = bits_for_alphabet(alphabet_);
    if (!enc_.fits())
        throw resource_error("function set does not fit the 64-bit packed encoding");
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (Word r : rows)
        for (int i = 0; i < enc_.nattrs; ++i)
            if (enc_.get(r, i) >= alphabet_)
                throw precondition_error("row value outside the declared alphabet");
    rows_ = std::move(rows);
}

FunctionSet FunctionSet::from_rows(const AttributeSet& attrs, Value alphabet,
                                   const std::vector<std::vector<Value>>& rows) {
    Encoding enc{attrs.size(), bits_for_alphabet(alphabet)};
    if (!enc.fits()) throw resource_error("function set does not fit the packed encoding");
    std::vector<Word> packed;
    packed.reserve(rows.size());
    for (const auto& vals : rows) {
        if (static_cast<int>(vals.size()) != attrs.size())
            throw precondition_error("row arity does not match the attribute set");
        Word r = 0;
        for (int i = 0; i < attrs.size(); ++i) r = enc.set(r, i, vals[i]);
        packed.push_back(r);
    }
    return FunctionSet(attrs, alphabet, std::move(packed));
}

FunctionSet FunctionSet::from_bits(const AttributeSet& attrs, const std::vector<Mask>& members) {
    std::vector<Word> rows(members.begin(), members.end());
    return FunctionSet(attrs, 2, std::move(rows));
}

std::vector<Value> FunctionSet::values_of(Word row) const {
    std::vector<Value> out(enc_.nattrs);
    for (int i = 0; i < enc_.nattrs; ++i) out[i] = enc_.get(row, i);
    return out;
}

std::string FunctionSet::format_row(Word row) const {
    std::string out;
    bool compact = alphabet_ <= 10;
    for (int i = 0; i < enc_.nattrs; ++i) {
        Value v = enc_.get(row, i);
        if (compact)
            out += static_cast<char>('0' + v);
        else {
            if (i) out += ',';
            out += std::to_string(v);
        }
    }
    return out;
}

bool FunctionSet::contains_row(Word row) const {
    return std::binary_search(rows_.begin(), rows_.end(), row);
}

Fragment restrict_row(const Encoding& enc, Word row, Mask s) {
    if (s >= (Mask(1) << enc.nattrs))
        throw precondition_error("restriction outside the attribute set");
    return Fragment{s, row & enc.expand(s)};
}

std::vector<Fragment> project(const FunctionSet& sigma, Mask s) {
    Word em = sigma.enc().expand(s);
    if (s >= (Mask(1) << sigma.enc().nattrs))
        throw precondition_error("projection outside the attribute set");
    std::vector<Word> bits;
    bits.reserve(sigma.size());
    for (Word r : sigma.rows()) bits.push_back(r & em);
    std::sort(bits.begin(), bits.end());
    bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
    std::vector<Fragment> out;
    out.reserve(bits.size());
    for (Word b : bits) out.push_back(Fragment{s, b});
    return out;
}

LayeredFunctionSet::LayeredFunctionSet(std::vector<FunctionSet> layers)
    : layers_(std::move(layers)) {
    if (layers_.empty()) throw precondition_error("layered set needs at least one layer");
    for (const auto& l : layers_) {
        if (!(l.attrs() == layers_.front().attrs()))
            throw precondition_error("layers must share one attribute set");
        if (l.empty()) throw precondition_error("empty layer in layered set");
    }
}

FunctionSet compose_layers(const LayeredFunctionSet& l) {
    const auto& layers = l.layers();
    const AttributeSet& attrs = l.attrs();
    int n = attrs.size();

    // flat alphabet: mixed-radix code over the per-layer values
    Word alphabet = 1;
    Word members = 1;
    for (const auto& s : layers) {
        alphabet *= s.alphabet();
        members *= static_cast<Word>(s.size());
        if (alphabet > (Word(1) << 31) || members > (Word(1) << 24))
            throw resource_error("composed product too large to materialize");
    }
    Encoding enc{n, bits_for_alphabet(static_cast<Value>(alphabet))};
    if (!enc.fits()) throw resource_error("composed product does not fit the packed encoding");

    std::vector<Word> rows;
    rows.reserve(members);
    std::vector<int> pick(layers.size(), 0);
    for (;;) {
        Word row = 0;
        for (int i = 0; i < n; ++i) {
            Value code = 0;
            for (size_t j = 0; j < layers.size(); ++j) {
                code = code * layers[j].alphabet() +
                       layers[j].enc().get(layers[j].rows()[pick[j]], i);
            }
            row = enc.set(row, i, code);
        }
        rows.push_back(row);
        int j = static_cast<int>(layers.size()) - 1;
        while (j >= 0 && ++pick[j] == layers[j].size()) pick[j--] = 0;
        if (j < 0) break;
    }
    return FunctionSet(attrs, static_cast<Value>(alphabet), std::move(rows));
}

FunctionSet parity_set(const AttributeSet& attrs, Mask x) {
    if (popcount(x) <= 1) throw precondition_error("parity set needs |X| > 1");
    if ((x & attrs.full_mask()) != x) throw precondition_error("X outside the attribute set");
    int n = attrs.size();
    std::vector<Word> rows;
    rows.reserve(Word(1) << (n - 1));
    for (Mask a = 0; a < (Mask(1) << n); ++a) {
        int zeros = popcount(x & ~a);
        if (zeros % 2 == 0) rows.push_back(a);
    }
    return FunctionSet(attrs, 2, std::move(rows));
}

FunctionSet constant_set(const AttributeSet& attrs) {
    Mask full = attrs.full_mask();
    return FunctionSet(attrs, 2, {0, Word(full)});
}

FunctionSet pair_set(const AttributeSet& attrs, Word g_row, bool* degenerate) {
    if (degenerate) *degenerate = (g_row == 0);
    return FunctionSet(attrs, 2, {0, g_row});
}

FunctionSet all_but(const AttributeSet& attrs, const Fragment& forbidden,
                    bool* everything_forbidden) {
    int n = attrs.size();
    if ((forbidden.support & attrs.full_mask()) != forbidden.support)
        throw precondition_error("forbidden support outside the attribute set");
    if (everything_forbidden) *everything_forbidden = (forbidden.support == 0);
    std::vector<Word> rows;
    for (Mask a = 0; a < (Mask(1) << n); ++a) {
        if ((Word(a) & Word(forbidden.support)) == forbidden.bits) continue;
        rows.push_back(a);
    }
    return FunctionSet(attrs, 2, std::move(rows));
}

}  // namespace indep
