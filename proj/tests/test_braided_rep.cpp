#include <gtest/gtest.h>

#include "braidlift/braidlift.hpp"

using namespace braidlift;

namespace {

TensorElement pure(PureTensor t) { return TensorElement::pure(std::move(t)); }

TensorElement act_text(const BraidedAlgebra& spec, int n, const std::string& element, const PureTensor& t) {
    return act(spec, parse_element(n, element), pure(t));
}

BraidedAlgebra diagonal_23() { return diagonal_algebra({{1, 2}, {3, 1}}); }

/// Flip braiding with m(y_i (x) y_j) = y_{2i+j}: not associative.
BraidedAlgebra skew_algebra() {
    return BraidedAlgebra(
        "skew", std::nullopt, [](BasisIndex i, BasisIndex j) { return PairCombination{{j, i, 1}}; },
        [](BasisIndex i, BasisIndex j) { return IndexCombination{{2 * i + j, 1}}; }, false);
}

}  // namespace

TEST(Action, GeneratorsOnBasisTensors) {
    const auto h = hoffman_algebra();
    EXPECT_EQ(act_text(h, 2, "b1", {1, 2}), pure({2, 1}));
    EXPECT_EQ(act_text(h, 2, "x1", {1, 2}), pure({0, 3}));
    EXPECT_EQ(act_text(h, 2, "e", {1, 2}), pure({1, 2}));
    EXPECT_EQ(act_text(diagonal_23(), 2, "b1", {1, 2}), pure({2, 1}) * Rational(2));
    EXPECT_EQ(act_text(diagonal_23(), 2, "b1", {2, 1}), pure({1, 2}) * Rational(3));
    EXPECT_TRUE(act_text(diagonal_23(), 2, "x1", {1, 2}).is_zero());
}

TEST(Action, UnitRules) {
    for (const auto& spec : builtin_algebras()) {
        EXPECT_EQ(act_text(spec, 2, "b1", {0, 2}), pure({2, 0})) << spec.name();
        EXPECT_EQ(act_text(spec, 2, "b1", {2, 0}), pure({0, 2})) << spec.name();
        EXPECT_EQ(act_text(spec, 2, "x1", {0, 2}), pure({0, 2})) << spec.name();
        EXPECT_EQ(act_text(spec, 2, "x1", {2, 0}), pure({0, 2})) << spec.name();
        EXPECT_EQ(act_text(spec, 2, "x1", {0, 0}), pure({0, 0})) << spec.name();
    }
}

TEST(Action, RightmostLetterActsFirst) {
    const auto h = hoffman_algebra();
    // x2 first: [1,2,3] -> [1,0,5]; then b1: -> [0,1,5]
    EXPECT_EQ(act_text(h, 3, "b1 x2", {1, 2, 3}), pure({0, 1, 5}));
    EXPECT_EQ(act_text(h, 3, "x2 b1", {1, 2, 3}), pure({2, 0, 4}));
}

TEST(Action, Linearity) {
    const auto h = hoffman_algebra();
    const auto x = parse_element(3, "2*b1 - x2 + 1/3*b2 b1");
    const auto t = pure({1, 2, 3}) + pure({2, 2, 1}) * Rational(5);
    TensorElement expected;
    for (const auto& [w, c] : x.terms())
        for (const auto& [u, d] : t.terms()) expected += act_word(h, w, pure(u), 3) * (c * d);
    EXPECT_EQ(act(h, x, t), expected);
    EXPECT_THROW(act(h, x, pure({1, 2})), std::invalid_argument);
}

TEST(Validation, BuiltinsAreBraidedAlgebras) {
    for (const auto& spec : builtin_algebras()) {
        const auto r = validate_braided(spec);
        EXPECT_TRUE(r.ok) << spec.name() << ": " << r.failure;
        EXPECT_NO_THROW(require_valid(spec));
    }
}

TEST(Validation, GvbRelationsOnThreeAndFourFold) {
    for (const auto& spec : builtin_algebras()) {
        for (int n = 3; n <= 4; ++n) {
            const auto r = check_gvb_relations(spec, n);
            EXPECT_TRUE(r.ok) << spec.name() << " n=" << n << ": " << r.failure;
            EXPECT_EQ(r.checked.size(), gvb_relations(n).size());
        }
    }
    EXPECT_EQ(gvb_relations(3).size(), 4u);
    EXPECT_EQ(gvb_relations(4).size(), 12u);
}

TEST(Validation, NonAssociativeMultiplicationIsRejectedWithWitness) {
    const auto r = validate_braided(skew_algebra());
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.failure.find("[1,1,1]"), std::string::npos) << r.failure;
    EXPECT_THROW(require_valid(skew_algebra()), ValidationError);
}

TEST(Validation, BrokenBraidingIsRejected) {
    // sigma(y1 (x) y2) = 2 y2 (x) y1 but sigma(y2 (x) y1) = 1/2 y1 (x) y2, with
    // y1 y1 = y1: the mixed relation between x and b fails.
    const auto spec = table_algebra("broken", 2, {{{1, 2}, {{2, 1, 2}}}, {{2, 1}, {{1, 2, Rational(1, 2)}}}},
                                    {{{1, 1}, {{1, 1}}}});
    const auto r = validate_braided(spec);
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.failure.find("fails on"), std::string::npos) << r.failure;
}

TEST(Validation, BasisOverflowIsRejected) {
    const auto spec = table_algebra("overflow", 2, {}, {{{2, 2}, {{3, 1}}}});
    EXPECT_FALSE(validate_braided(spec).ok);
}

TEST(Validation, MaxMultiplicationWithFlipPasses) {
    // m(y_i (x) y_j) = y_max(i,j) is associative and commutative, so the flip
    // braiding makes it a legitimate braided algebra.
    const auto spec = BraidedAlgebra(
        "max", std::nullopt, [](BasisIndex i, BasisIndex j) { return PairCombination{{j, i, 1}}; },
        [](BasisIndex i, BasisIndex j) { return IndexCombination{{std::max(i, j), 1}}; }, false);
    EXPECT_TRUE(validate_braided(spec).ok);
}

TEST(Builtins, Parameters) {
    EXPECT_THROW(diagonal_algebra({{1, 0}, {1, 1}}), std::invalid_argument);
    EXPECT_THROW(diagonal_algebra({{1, 2}}), std::invalid_argument);
    EXPECT_THROW(flip_algebra(0), std::invalid_argument);
    const auto f = flip_algebra(3);
    EXPECT_EQ(f.mul(1, 2).size(), 1u);
    EXPECT_TRUE(f.mul(2, 2).empty());
    EXPECT_EQ(f.generators(5), (std::vector<BasisIndex>{1, 2, 3}));
    EXPECT_EQ(hoffman_algebra().generators(4), (std::vector<BasisIndex>{1, 2, 3, 4}));
    EXPECT_TRUE(flip_zero_algebra().zero_mul());
    EXPECT_FALSE(hoffman_algebra().zero_mul());
}

TEST(Builtins, TableDefaults) {
    const auto spec = table_algebra("t", 2, {}, {});
    const auto s = spec.sigma(1, 2);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].first, 2u);
    EXPECT_EQ(s[0].second, 1u);
    EXPECT_TRUE(spec.zero_mul());
}

TEST(BraidedCommutativity, Probe) {
    EXPECT_TRUE(is_braided_commutative(hoffman_algebra()));
    EXPECT_TRUE(is_braided_commutative(flip_zero_algebra()));
    EXPECT_TRUE(is_braided_commutative(flip_algebra(3)));
    // m(y_i (x) y_j) = y_i with the flip
    const auto left = table_algebra("left", 2, {}, {{{1, 1}, {{1, 1}}}, {{1, 2}, {{1, 1}}}, {{2, 1}, {{2, 1}}}, {{2, 2}, {{2, 1}}}});
    EXPECT_TRUE(validate_braided(left).ok);
    EXPECT_FALSE(is_braided_commutative(left));
}

TEST(RankThreeIdentities, OperatorIdentitiesHoldForEveryBuiltin) {
    for (const auto& spec : builtin_algebras()) {
        const auto r = check_rank3_identities(spec);
        EXPECT_TRUE(r.ok) << spec.name() << ": " << r.failure;
    }
}

TEST(RankThreeIdentities, IdentitiesFailAsWords) {
    EXPECT_NE(parse_element(3, "b2 x1"), parse_element(3, "b1 x2 b1 b2"));
}

TEST(VariantAgreement, LeftAndRightSumsActIdentically) {
    for (const auto& spec : {hoffman_algebra(), diagonal_23()}) {
        for (int n = 2; n <= 4; ++n) {
            const auto r = check_variant_agreement(spec, n);
            EXPECT_TRUE(r.ok) << spec.name() << " n=" << n << ": " << r.failure;
        }
    }
}
