#include <gtest/gtest.h>

#include <string>
#include <utility>
#include <vector>

#include "braidlift/braidlift.hpp"
#include "golden.hpp"

using namespace braidlift;

namespace {

Permutation perm(const std::string& w, int n) { return parse_permutation(w, n); }
GvbElement elem(int n, const std::string& s) { return parse_element(n, s); }

}  // namespace

TEST(ShuffleLift, RankTwo) {
    EXPECT_EQ(lift_shuffle(Permutation::identity(2), 1, 1), elem(2, "e"));
    EXPECT_EQ(lift_shuffle(perm("s1", 2), 1, 1), elem(2, "b1 + x1"));
}

TEST(ShuffleLift, ExamplesRankThree) {
    EXPECT_EQ(lift_shuffle(perm("s2", 3), 2, 1), elem(3, "b2 + b1 x2"));
    EXPECT_EQ(lift_shuffle(perm("s1s2", 3), 2, 1), elem(3, "b1 b2 + x1 b2"));
    EXPECT_EQ(lift_shuffle(perm("s1", 3), 1, 2), elem(3, "b1 + x1"));
}

TEST(ShuffleLift, RejectsNonShuffle) {
    EXPECT_THROW(lift_shuffle(perm("s1", 3), 2, 1), std::invalid_argument);
    EXPECT_TRUE(lift_shuffle_extended(perm("s1", 3), 2, 1).is_zero());
}

TEST(ShuffleLift, AlphaProjectionIsTitsSection) {
    for (int n = 2; n <= 6; ++n) {
        for (int p = 1; p < n; ++p) {
            for (const auto& s : enumerate_shuffles(p, n - p, 0, n)) {
                const auto lifted = lift_shuffle(s, p, n - p);
                EXPECT_EQ(project_alpha(lifted), GvbElement::word(tits_section(s)));
            }
        }
    }
}

TEST(ShuffleLift, ShiftedVersionPushesUnitFromTheLeftEnd) {
    // The unit still travels in from slot 1, so the shifted lift is not a
    // plain index shift.
    const auto s = perm("s1", 2).shifted(1, 4);
    EXPECT_EQ(lift_shuffle_shifted(s, 1, 1, 1), elem(4, "b2 + b1 x2"));
    EXPECT_EQ(lift_shuffle_shifted(perm("s1", 2).shifted(1, 3), 1, 1, 1), elem(3, "b2 + b1 x2"));
}

TEST(MMap, LeftVariantKillsVirtualTau) {
    // Q_{1,1}(s1 s2) x1 = 0 because the virtual letter uses up a slot.
    EXPECT_TRUE(m_map(2, 1, perm("s1s2", 3), elem(3, "x1")).is_zero());
    EXPECT_EQ(m_map(2, 1, perm("s1s2", 3), elem(3, "b1")), elem(3, "b1 b2 b1 + x1 b2 b1"));
}

TEST(DescentLift, GoldenRankThree) {
    const auto I = DescentSet::full(3);
    for (const auto& [w, expected] : golden::rank3) EXPECT_EQ(lift_descent(perm(w, 3), I), elem(3, expected)) << w;
}

TEST(DescentLift, GoldenRankFour) {
    const auto I = DescentSet::make(4, {1, 3});
    const auto cls = enumerate_descent_class(4, I, DescentMode::leq);
    ASSERT_EQ(cls.size(), golden::rank4.size());
    for (const auto& [w, expected] : golden::rank4) {
        const auto p = perm(w, 4);
        EXPECT_TRUE(std::find(cls.begin(), cls.end(), p) != cls.end()) << w;
        EXPECT_EQ(lift_descent(p, I), elem(4, expected)) << w;
    }
}

TEST(DescentLift, SingletonDescentIsShuffleLift) {
    for (int n = 2; n <= 5; ++n) {
        for (int i = 1; i < n; ++i) {
            const auto I = DescentSet::make(n, {i});
            for (const auto& s : enumerate_descent_class(n, I, DescentMode::leq)) {
                EXPECT_EQ(lift_descent(s, I), lift_shuffle(s, i, n - i));
            }
        }
    }
}

TEST(DescentLift, EmptyDescentSetGivesUnit) {
    const auto I = DescentSet::make(4, {});
    EXPECT_EQ(lift_descent(Permutation::identity(4), I), GvbElement::unit(4));
}

TEST(DescentLift, RejectsOutsideClass) {
    EXPECT_THROW(lift_descent(perm("s2", 3), DescentSet::make(3, {1})), std::invalid_argument);
}

TEST(DescentLift, AlphaProjectionIsTitsSection) {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& p : all_permutations(n)) {
            for (auto variant : {LiftVariant::left, LiftVariant::right}) {
                // A single braid word survives; it is a reduced word for p.
                const auto alpha = project_alpha(mt_section(p, variant));
                ASSERT_EQ(alpha.size(), 1u) << p;
                const auto& [word, coeff] = *alpha.terms().begin();
                EXPECT_EQ(coeff, 1);
                EXPECT_EQ(static_cast<int>(word.size()), p.length()) << p;
                EXPECT_EQ(project_beta(alpha), PermSum::single(p)) << p;
            }
        }
    }
}

TEST(DescentLift, RightVariantDiffersOnlyAtRankThree) {
    // The two lifts of s2 s1 in rank 3 differ as words.
    const auto p = perm("s2s1", 3);
    const auto left = mt_section(p, LiftVariant::left);
    const auto right = mt_section(p, LiftVariant::right);
    EXPECT_NE(left, right);
    EXPECT_EQ(project_alpha(left), project_alpha(right));
}

TEST(TotalSymmetrization, RankThreeHasThirteenWords) {
    const auto& q3 = total_symmetrization_element(3);
    EXPECT_EQ(q3, elem(3, golden::q3));
    EXPECT_EQ(q3.size(), 13u);
}

TEST(TotalSymmetrization, WordCountsAreOrderedBellNumbers) {
    // Word count of Q_n: every coefficient is 1 and there is one word per
    // ordered set partition of {1..n}.
    const std::vector<std::size_t> fubini = {1, 1, 3, 13, 75, 541};
    for (int n = 1; n <= 5; ++n) {
        const auto& q = total_symmetrization_element(n);
        EXPECT_EQ(q.size(), fubini[static_cast<std::size_t>(n)]) << n;
        for (const auto& [w, c] : q.terms()) EXPECT_EQ(c, 1);
    }
}

TEST(TotalSymmetrization, MinusBraidSymmetrizerIsPurelyVirtual) {
    for (int n = 1; n <= 5; ++n) {
        const auto w = total_symmetrization_element(n) - braid_symmetrizer(n);
        EXPECT_TRUE(project_alpha(w).is_zero()) << n;
    }
    EXPECT_EQ(total_symmetrization_element(2) - braid_symmetrizer(2), elem(2, "x1"));
}

TEST(TotalSymmetrization, LeftAndRightVariantsDifferAsWords) {
    const auto left = total_symmetrization_element(3, LiftVariant::left);
    const auto right = total_symmetrization_element(3, LiftVariant::right);
    const auto e_b1 = elem(3, "e + b1"), e_b2 = elem(3, "e + b2");
    EXPECT_EQ(left, elem(3, "e + b2 + b1 x2 + b1 b2 + x1 b2") * e_b1 + elem(3, "x1 + b2 x1 + b1 x2 x1"));
    EXPECT_EQ(right, elem(3, "e + x1 + b1 + b1 x2 b1 + b2 b1") * e_b2 + elem(3, "b1 x2 + b2 b1 x2 + b1 x2 b1 x2"));
    EXPECT_NE(left, right);
    // ... but agree as operators on every basis tensor.
    const auto h = hoffman_algebra();
    for (BasisIndex a = 0; a <= 2; ++a)
        for (BasisIndex b = 0; b <= 2; ++b)
            for (BasisIndex c = 0; c <= 2; ++c)
                EXPECT_TRUE(act(h, left - right, TensorElement::pure({a, b, c})).is_zero()) << a << b << c;
}
