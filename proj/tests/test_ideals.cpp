#include <gtest/gtest.h>

#include "braidlift/braidlift.hpp"
#include "oracles.hpp"

using namespace braidlift;

namespace {

TensorElement pure(PureTensor t) { return TensorElement::pure(std::move(t)); }

TensorElement commutator(BasisIndex i, BasisIndex j) { return pure({i, j}) - pure({j, i}); }

/// Flip braiding with y_i y_j = y_{2i+j}; fails associativity.
BraidedAlgebra skew_algebra() {
    return BraidedAlgebra(
        "skew", std::nullopt, [](BasisIndex i, BasisIndex j) { return PairCombination{{j, i, 1}}; },
        [](BasisIndex i, BasisIndex j) { return IndexCombination{{2 * i + j, 1}}; }, false);
}

/// Rescaled braiding that breaks the mixed relation; y1 y1 = y1.
BraidedAlgebra tilted_algebra() {
    return table_algebra("tilted", 2, {{{1, 2}, {{2, 1, 2}}}, {{2, 1}, {{1, 2, Rational(1, 2)}}}}, {{{1, 1}, {{1, 1}}}});
}

}  // namespace

TEST(Kernel, HoffmanDegreeTwoSliceIsSpannedByCommutators) {
    const auto b = kernel_total_symmetrization(hoffman_algebra(), {1, 2, 3}, 2);
    ASSERT_EQ(b.dimension(), 3u);
    EXPECT_EQ(b.elements[0], commutator(1, 2));
    EXPECT_EQ(b.elements[1], commutator(1, 3));
    EXPECT_EQ(b.elements[2], commutator(2, 3));
    EXPECT_EQ(b.pivots, (std::vector<PureTensor>{{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(b.kind, KernelKind::total);
    for (const auto& x : b.elements) EXPECT_TRUE(total_symmetrize(hoffman_algebra(), x).is_zero());
}

TEST(Kernel, DenseEliminationOracleAgreesOnDimension) {
    // Columns QS(w) for w over {1,2,3} in degrees 1..d, built from the
    // independent quasi-shuffle fold; rows indexed by every word that appears.
    for (int d = 2; d <= 3; ++d) {
        std::vector<oracle::Word> domain;
        for (int k = 1; k <= d; ++k)
            for (const auto& w : words_over({1, 2, 3}, k)) domain.emplace_back(w.begin(), w.end());
        std::vector<std::map<oracle::Word, long>> images;
        std::map<oracle::Word, std::size_t> rows;
        for (const auto& w : domain) {
            images.push_back(oracle::quasi_shuffle_fold(w));
            for (const auto& [z, c] : images.back()) rows.emplace(z, rows.size());
        }
        std::vector<std::vector<mpz_class>> m(rows.size(), std::vector<mpz_class>(domain.size(), 0));
        for (std::size_t c = 0; c < domain.size(); ++c)
            for (const auto& [z, v] : images[c]) m[rows.at(z)][c] = v;
        const auto nullity = domain.size() - oracle::bareiss_rank(m);
        EXPECT_EQ(kernel_total_symmetrization(hoffman_algebra(), {1, 2, 3}, d).dimension(), nullity) << "d=" << d;
    }
}

TEST(Kernel, BraidSymmetrizerForFlip) {
    const auto b = kernel_braid_symmetrizer(flip_zero_algebra(), {1, 2}, 2);
    ASSERT_EQ(b.dimension(), 1u);
    EXPECT_EQ(b.elements[0], commutator(1, 2));
    EXPECT_EQ(b.kind, KernelKind::braid);
}

TEST(Kernel, DiagonalBraidings) {
    EXPECT_EQ(kernel_total_symmetrization(diagonal_algebra({{1, 2}, {3, 1}}), {1, 2}, 2).dimension(), 0u);
    const auto b = kernel_total_symmetrization(diagonal_algebra({{1, 2}, {Rational(1, 2), 1}}), {1, 2}, 2);
    ASSERT_EQ(b.dimension(), 1u);
    EXPECT_EQ(b.elements[0], pure({1, 2}) - pure({2, 1}) * Rational(2));
}

TEST(Kernel, ZeroMultiplicationMatchesBraidKernel) {
    for (const auto& spec : {flip_zero_algebra(), diagonal_algebra({{1, 2}, {Rational(1, 2), 1}})}) {
        EXPECT_EQ(kernel_total_symmetrization(spec, {1, 2}, 2).elements, kernel_braid_symmetrizer(spec, {1, 2}, 2).elements)
            << spec.name();
    }
}

TEST(Kernel, TopPartsLieInBraidKernel) {
    const auto h = hoffman_algebra();
    const auto b = kernel_total_symmetrization(h, {1, 2}, 3);
    for (const auto& x : b.elements) {
        const int n = x.max_degree();
        EXPECT_TRUE(act(h, braid_symmetrizer(n), top_component(x, n)).is_zero()) << to_string(x);
    }
}

TEST(Kernel, WindowValidation) {
    EXPECT_THROW(kernel_total_symmetrization(hoffman_algebra(), {}, 2), std::invalid_argument);
    EXPECT_THROW(kernel_total_symmetrization(hoffman_algebra(), {0, 1}, 2), std::invalid_argument);
    EXPECT_EQ(kernel_total_symmetrization(hoffman_algebra(), {2, 1, 2}, 2).window, (std::vector<BasisIndex>{1, 2}));
    EXPECT_EQ(words_over({1, 2}, 3).size(), 8u);
}

TEST(WAction, Examples) {
    const auto h = hoffman_algebra();
    EXPECT_EQ(w_action(h, pure({1, 2})), pure({3}));
    EXPECT_TRUE(w_action(h, pure({2})).is_zero());
    EXPECT_TRUE(w_action(h, TensorElement()).is_zero());
    EXPECT_THROW(w_action(h, pure({1, 2}) + pure({1})), std::invalid_argument);
    // QS = T + W on homogeneous input
    const auto t = pure({1, 2, 1});
    EXPECT_EQ(total_symmetrize(h, t), delete_units(act(h, braid_symmetrizer(3), t)) + w_action(h, t));
}

TEST(LiftRelation, CommutatorsAreAlreadyRelations) {
    const auto h = hoffman_algebra();
    for (BasisIndex i = 1; i <= 3; ++i)
        for (BasisIndex j = i + 1; j <= 3; ++j) EXPECT_EQ(lift_relation(h, commutator(i, j), {1, 2, 3}), commutator(i, j));
}

TEST(LiftRelation, LiftedElementIsAnnihilated) {
    // Flip braiding with y_i y_j = y_i: the product is not commutative, so
    // degree-3 braid relations need lower-degree corrections.
    const auto f = table_algebra("left", 2, {}, {{{1, 1}, {{1, 1}}}, {{1, 2}, {{1, 1}}}, {{2, 1}, {{2, 1}}}, {{2, 2}, {{2, 1}}}});
    const auto b = kernel_braid_symmetrizer(f, {1, 2}, 3);
    int corrected = 0;
    for (const auto& xbar : b.elements) {
        const auto x = lift_relation(f, xbar, {1, 2});
        EXPECT_TRUE(total_symmetrize(f, x).is_zero()) << to_string(xbar);
        EXPECT_EQ(top_component(x, xbar.max_degree()), xbar);
        if (x != xbar) ++corrected;
    }
    EXPECT_GT(corrected, 0);
}

TEST(LiftRelation, RejectsNonRelations) {
    const auto h = hoffman_algebra();
    try {
        lift_relation(h, pure({1, 2}), {1, 2});
        FAIL() << "expected NotARelation";
    } catch (const NotARelation& e) {
        EXPECT_EQ(e.image(), pure({1, 2}) + pure({2, 1}));
    }
    EXPECT_THROW(lift_relation(h, pure({1, 2}) - pure({1}), {1, 2}), std::invalid_argument);
    EXPECT_THROW(lift_relation(h, pure({0, 1}) - pure({1, 0}), {1, 2}), std::invalid_argument);
    EXPECT_TRUE(lift_relation(h, TensorElement(), {1}).is_zero());
}

TEST(LiftRelation, ObstructionIsReportedForInvalidAlgebras) {
    EXPECT_THROW(lift_relation(skew_algebra(), pure({1, 1, 2}) - pure({2, 1, 1}), {1, 2}), Unliftable);
    try {
        lift_relation(tilted_algebra(), pure({1, 1, 2}) - pure({2, 1, 1}) * Rational(4), {1, 2});
        FAIL() << "expected Unliftable";
    } catch (const Unliftable& e) {
        EXPECT_FALSE(e.residual().is_zero());
    }
}

TEST(GradedProduct, TopPartIsQuantumShuffle) {
    const auto r = graded_product_check(hoffman_algebra(), {{{1}, {2}}, {{1, 2}, {3}}, {{2, 2}, {1, 3}}});
    EXPECT_TRUE(r.ok) << r.failure;
    EXPECT_EQ(r.checked, 3);
}

TEST(Commutativity, BraidedCommutativeAlgebras) {
    EXPECT_TRUE(commutativity_check(hoffman_algebra(), {1, 2}, 4).ok);
    EXPECT_TRUE(commutativity_check(flip_zero_algebra(), {1, 2}, 4).ok);
}

TEST(Commutativity, DiagonalBraidingGivesWitness) {
    const auto r = commutativity_check(diagonal_algebra({{1, 2}, {3, 1}}), {1, 2}, 2);
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.failure.find("!="), std::string::npos);
}

TEST(Commutativity, RefusesNonCommutativeMultiplication) {
    const auto left = table_algebra("left", 2, {}, {{{1, 1}, {{1, 1}}}, {{1, 2}, {{1, 1}}}, {{2, 1}, {{2, 1}}}, {{2, 2}, {{2, 1}}}});
    EXPECT_THROW(commutativity_check(left, {1, 2}, 2), std::invalid_argument);
}
