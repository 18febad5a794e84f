#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "indep/funcset.hpp"
#include "indep/indep.hpp"
#include "indep/rules.hpp"

using namespace indep;

namespace {

const AttributeSet kXYZ({"x", "y", "z"});

FunctionSet change_rel() {
    // six rows over x,a,b,c,d,z
    AttributeSet attrs({"x", "a", "b", "c", "d", "z"});
    return FunctionSet::from_rows(attrs, 2,
                                  {{1, 1, 1, 1, 1, 1},
                                   {0, 1, 1, 1, 1, 0},
                                   {0, 1, 1, 1, 0, 1},
                                   {1, 1, 1, 1, 0, 0},
                                   {1, 1, 0, 1, 1, 1},
                                   {0, 1, 0, 0, 0, 0}});
}

std::set<Word> fragment_bits(const std::vector<Fragment>& frags) {
    std::set<Word> out;
    for (const Fragment& f : frags) out.insert(f.bits);
    return out;
}

}  // namespace

TEST_CASE("restriction") {
    AttributeSet attrs({"A", "B", "C", "D", "E"});
    FunctionSet fs = FunctionSet::from_rows(attrs, 2, {{0, 0, 0, 0, 0}, {1, 0, 1, 1, 1}});
    const Encoding& e = fs.enc();

    Fragment ab = restrict_row(e, fs.rows()[0], 0b00011);
    CHECK(ab.support == 0b00011);
    CHECK(ab.bits == 0);

    // tau = 10111 agrees with sigma on B
    Fragment tb = restrict_row(e, fs.rows()[1], 0b00010);
    CHECK(tb.bits == 0);

    Fragment empty = restrict_row(e, fs.rows()[1], 0);
    CHECK(empty.support == 0);
    CHECK(empty.bits == 0);

    CHECK_THROWS_AS(restrict_row(Encoding{3, 1}, 0, 0b1000), precondition_error);
}

TEST_CASE("restriction composes") {
    auto rng = seeded_rng(kDefaultSeed);
    AttributeSet attrs = numbered_attrs(6);
    std::uniform_int_distribution<Word> row(0, 63);
    Encoding enc{6, 1};
    for (int it = 0; it < 200; ++it) {
        Word r = row(rng);
        Mask s = static_cast<Mask>(row(rng));
        Mask s2 = static_cast<Mask>(row(rng)) & s;
        Fragment big = restrict_row(enc, r, s);
        Fragment small = restrict_row(enc, big.bits, s2);
        CHECK(small == restrict_row(enc, r, s2));
    }
}

TEST_CASE("projection") {
    FunctionSet fs = FunctionSet::from_rows(kXYZ, 2, {{0, 0, 0}, {1, 1, 1}});
    auto px = project(fs, 0b001);
    CHECK(px.size() == 2);
    CHECK(fragment_bits(px) == std::set<Word>{0, 1});

    // first two coordinates of the six change-rel rows collapse to two fragments
    FunctionSet cr = change_rel();
    auto pxa = project(cr, 0b000011);
    CHECK(pxa.size() == 2);
    CHECK(fragment_bits(pxa) == std::set<Word>{0b10, 0b11});

    auto all = project(fs, kXYZ.full_mask());
    CHECK(all.size() == fs.size());
}

TEST_CASE("projection cardinality bounds") {
    auto rng = seeded_rng(kDefaultSeed + 1);
    AttributeSet attrs = numbered_attrs(5);
    std::uniform_int_distribution<Word> row(0, 31);
    for (int it = 0; it < 100; ++it) {
        std::vector<Word> rows;
        for (int j = 0; j < 10; ++j) rows.push_back(row(rng));
        FunctionSet fs(attrs, 2, rows);
        Mask s = static_cast<Mask>(row(rng));
        auto p = project(fs, s);
        CHECK(static_cast<int>(p.size()) <= fs.size());
        CHECK(p.size() <= (std::size_t(1) << popcount(s)));
    }
}

TEST_CASE("compose_layers materializes the product") {
    AttributeSet xy({"x", "y"});
    FunctionSet l1 = FunctionSet::from_rows(xy, 2, {{0, 0}, {1, 1}});
    FunctionSet l2 = FunctionSet::from_rows(xy, 2, {{0, 0}, {0, 1}});
    FunctionSet prod = compose_layers(LayeredFunctionSet({l1, l2}));
    CHECK(prod.size() == 4);
    CHECK(prod.alphabet() == 4);

    // single layer: same set up to value re-encoding
    FunctionSet single = compose_layers(LayeredFunctionSet({l1}));
    CHECK(single.size() == l1.size());
    CHECK(single.rows() == l1.rows());

    CHECK_THROWS_AS(LayeredFunctionSet({FunctionSet(xy, 2, {})}), precondition_error);
}

TEST_CASE("layer transfer: a triple holds in the product iff in every layer") {
    auto rng = seeded_rng(kDefaultSeed + 2);
    AttributeSet attrs = numbered_attrs(4);
    std::uniform_int_distribution<Word> row(0, 15);
    std::uniform_int_distribution<int> nrows(1, 4);
    for (int it = 0; it < 60; ++it) {
        std::vector<FunctionSet> layers;
        for (int l = 0; l < 2; ++l) {
            std::vector<Word> rows;
            for (int j = nrows(rng); j > 0; --j) rows.push_back(row(rng));
            layers.emplace_back(attrs, 2, rows);
        }
        LayeredFunctionSet lfs(layers);
        FunctionSet prod = compose_layers(lfs);
        for (Word code = 0; code < triple_space_size(4); ++code) {
            Triple t = triple_from_code(code, 4);
            if (t.x > t.z) continue;
            bool per_layer = set_indep(layers[0], t) && set_indep(layers[1], t);
            CHECK(per_layer == set_indep(prod, t));
        }
    }
}

TEST_CASE("parity sets") {
    AttributeSet ab({"a", "b"});
    FunctionSet p2 = parity_set(ab, 0b11);
    CHECK(p2.rows() == std::vector<Word>{0b00, 0b11});

    AttributeSet abc({"a", "b", "c"});
    FunctionSet p3 = parity_set(abc, 0b011);
    CHECK(p3.rows() == std::vector<Word>{0b000, 0b011, 0b100, 0b111});

    CHECK_THROWS_AS(parity_set(abc, 0b001), precondition_error);
}

TEST_CASE("parity failure pattern") {
    // <A|B|C> fails on the parity set iff both outsides touch X and the
    // triple covers X
    for (int n = 3; n <= 5; ++n) {
        AttributeSet attrs = numbered_attrs(n);
        for (Mask x = 0; x <= attrs.full_mask(); ++x) {
            if (popcount(x) < 2) continue;
            FunctionSet ps = parity_set(attrs, x);
            CHECK(ps.size() == (1 << (n - 1)));
            for (Word code = 0; code < triple_space_size(n); ++code) {
                Triple t = triple_from_code(code, n);
                if (t.trivial() || t.x > t.z) continue;
                bool fails = (t.x & x) && (t.z & x) && (x & ~t.covered()) == 0;
                CHECK(set_indep(ps, t) == !fails);
            }
        }
    }
}

TEST_CASE("constant set") {
    FunctionSet cs = constant_set(kXYZ);
    CHECK(cs.rows() == std::vector<Word>{0b000, 0b111});
    CHECK_FALSE(set_indep(cs, Triple(0b001, 0, 0b100)));
    CHECK(set_indep(cs, Triple(0b001, 0b010, 0b100)));
}

TEST_CASE("pair set") {
    AttributeSet xay({"x", "a", "y"});
    // a=0, everything else 1
    bool degenerate = false;
    FunctionSet ps = pair_set(xay, 0b101, &degenerate);
    CHECK_FALSE(degenerate);
    CHECK(ps.rows() == std::vector<Word>{0b000, 0b101});

    FunctionSet same = pair_set(xay, 0b111, &degenerate);
    CHECK_FALSE(degenerate);
    CHECK(same.rows() == constant_set(xay).rows());

    FunctionSet single = pair_set(xay, 0, &degenerate);
    CHECK(degenerate);
    CHECK(single.size() == 1);
}

TEST_CASE("pair set with a=y=0 destroys <x|y|z> without a") {
    AttributeSet attrs({"a", "x", "y", "z"});
    FunctionSet ps = pair_set(attrs, 0b1110 & ~0b0100);  // a=0, y=0, rest 1
    CHECK_FALSE(set_indep(ps, Triple(0b0010, 0b0100, 0b1000)));
    CHECK(set_indep(ps, Triple(0b0001, 0b0100, 0b1000)));  // a outside stays
}

TEST_CASE("all_but") {
    AttributeSet ayz({"a", "y", "z"});
    bool everything = false;
    FunctionSet ab = all_but(ayz, Fragment{0b111, 0}, &everything);
    CHECK_FALSE(everything);
    CHECK(ab.size() == 7);
    CHECK_FALSE(ab.contains_row(0));
    CHECK_FALSE(set_indep(ab, Triple(0b001, 0b010, 0b100)));

    FunctionSet none = all_but(ayz, Fragment{0, 0}, &everything);
    CHECK(everything);
    CHECK(none.empty());
}

TEST_CASE("all_but preserves triples at positive set distance") {
    // over {a,y,z,u,v}: forbid a=y=z=0; every <a|s|t> with {s,t} != {y,z}
    // keeps all combinations
    AttributeSet attrs({"a", "y", "z", "u", "v"});
    FunctionSet ab = all_but(attrs, Fragment{0b00111, 0});
    for (int s = 1; s < 5; ++s)
        for (int t = 1; t < 5; ++t) {
            if (s == t) continue;
            Triple triple(1, Mask(1) << s, Mask(1) << t);
            bool is_target = (triple.covered()) == 0b00111;
            CHECK(set_indep(ab, triple) == !is_target);
        }
}
