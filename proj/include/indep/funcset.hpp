#pragma once

#include <optional>
#include <vector>

#include "indep/attrset.hpp"

namespace indep {

/// Fixed-width packing of one total assignment into a 64-bit word:
/// attribute i occupies bits [i*bpv, (i+1)*bpv). Equality on an attribute
/// subset is a masked comparison, which keeps the triple scan cheap.
struct Encoding {
    int nattrs = 0;
    int bpv = 1;  // bits per value

    Word field_mask() const { return (bpv == 64) ? ~Word(0) : (Word(1) << bpv) - 1; }

    Value get(Word row, int i) const {
        return static_cast<Value>((row >> (i * bpv)) & field_mask());
    }
    Word set(Word row, int i, Value v) const {
        int sh = i * bpv;
        return (row & ~(field_mask() << sh)) | (Word(v) << sh);
    }
    /// Expand an attribute mask to the packed-bit mask selecting those fields.
    Word expand(Mask attrs) const {
        Word out = 0;
        for (int i = 0; i < nattrs; ++i)
            if (attrs >> i & 1) out |= field_mask() << (i * bpv);
        return out;
    }
    bool fits() const { return nattrs * bpv <= 64; }
};

inline int bits_for_alphabet(Value k) {
    int b = 1;
    while ((Word(1) << b) < k) ++b;
    return b;
}

/// Partial assignment: values on `support`, packed with the owning set's
/// encoding; bits outside the support are zero.
struct Fragment {
    Mask support = 0;
    Word bits = 0;
    bool operator==(const Fragment&) const = default;
    bool operator<(const Fragment& o) const {
        return support != o.support ? support < o.support : bits < o.bits;
    }
};

/// Finite set of total assignments I -> {0..K-1}. Rows are kept sorted and
/// deduplicated; the whole object is an immutable value after construction.
class FunctionSet {
  public:
    FunctionSet(AttributeSet attrs, Value alphabet, std::vector<Word> rows);

    /// Build from explicit value vectors (one per member).
    static FunctionSet from_rows(const AttributeSet& attrs, Value alphabet,
                                 const std::vector<std::vector<Value>>& rows);
    /// Convenience for binary sets: members given as bit patterns over
    /// attrs in order, e.g. {0b000, 0b111}. Bit 0 = first attribute.
    static FunctionSet from_bits(const AttributeSet& attrs, const std::vector<Mask>& members);

    const AttributeSet& attrs() const { return attrs_; }
    const Encoding& enc() const { return enc_; }
    Value alphabet() const { return alphabet_; }
    int size() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    const std::vector<Word>& rows() const { return rows_; }

    std::vector<Value> values_of(Word row) const;
    std::string format_row(Word row) const;
    bool contains_row(Word row) const;

  private:
    AttributeSet attrs_;
    Value alphabet_;
    Encoding enc_;
    std::vector<Word> rows_;
};

/// f restricted to S (S must be within the encoding's attribute range).
Fragment restrict_row(const Encoding& enc, Word row, Mask s);

/// { f|S : f in sigma }, deduplicated, sorted.
std::vector<Fragment> project(const FunctionSet& sigma, Mask s);

/// Ordered list of function sets over one attribute set; the tuple-valued
/// product is usually evaluated per layer rather than materialized.
class LayeredFunctionSet {
  public:
    explicit LayeredFunctionSet(std::vector<FunctionSet> layers);
    const std::vector<FunctionSet>& layers() const { return layers_; }
    const AttributeSet& attrs() const { return layers_.front().attrs(); }

  private:
    std::vector<FunctionSet> layers_;
};

/// Materialize the attribute-wise tuple product; tuple values are re-encoded
/// injectively (mixed-radix over layer alphabets) into a flat alphabet.
/// Throws resource_error when the result does not fit the packed encoding.
FunctionSet compose_layers(const LayeredFunctionSet& l);

/// All binary assignments whose number of zeros on X is even. |X| > 1 required.
FunctionSet parity_set(const AttributeSet& attrs, Mask x);

/// {0_c, 1_c}.
FunctionSet constant_set(const AttributeSet& attrs);

/// {0_c, g}; degenerate (g = 0_c) collapses to a singleton, flagged.
FunctionSet pair_set(const AttributeSet& attrs, Word g_row, bool* degenerate = nullptr);

/// All binary assignments except those extending `forbidden`. An empty
/// support forbids everything; the empty result is flagged.
FunctionSet all_but(const AttributeSet& attrs, const Fragment& forbidden,
                    bool* everything_forbidden = nullptr);

}  // namespace indep
