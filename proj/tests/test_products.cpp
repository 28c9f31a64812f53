#include <gtest/gtest.h>

#include <random>

#include "braidlift/braidlift.hpp"
#include "oracles.hpp"

using namespace braidlift;

namespace {

TensorElement pure(PureTensor t) { return TensorElement::pure(std::move(t)); }

TensorElement from_oracle(const std::map<oracle::Word, long>& m) {
    TensorElement out;
    for (const auto& [w, c] : m) out.add(PureTensor(w.begin(), w.end()), Rational(c));
    return out;
}

oracle::Word as_word(const PureTensor& t) { return oracle::Word(t.begin(), t.end()); }

std::vector<PureTensor> all_words(BasisIndex bound, int n) {
    std::vector<BasisIndex> gens;
    for (BasisIndex i = 1; i <= bound; ++i) gens.push_back(i);
    return words_over(gens, n);
}

}  // namespace

TEST(Shuffle, CountsAreBinomial) {
    const auto x = shuffle_product(pure({1, 2}), pure({3, 4, 5}));
    Rational total = 0;
    for (const auto& [t, c] : x.terms()) total += c;
    EXPECT_EQ(total, 10);
    EXPECT_EQ(x.size(), 10u);
    EXPECT_EQ(shuffle_product(pure({1}), pure({1})), pure({1, 1}) * Rational(2));
    EXPECT_EQ(shuffle_product(TensorElement::scalar(3), pure({2})), pure({2}) * Rational(3));
}

TEST(QuantumShuffle, DiagonalBraiding) {
    const auto d = diagonal_algebra({{1, 2}, {3, 1}});
    EXPECT_EQ(quantum_shuffle_product(d, pure({1}), pure({2})), pure({1, 2}) + pure({2, 1}) * Rational(2));
    EXPECT_EQ(quantum_shuffle_product(d, pure({2}), pure({1})), pure({2, 1}) + pure({1, 2}) * Rational(3));
    EXPECT_EQ(quantum_shuffle_product(flip_zero_algebra(), pure({1, 2}), pure({3})),
              shuffle_product(pure({1, 2}), pure({3})));
}

TEST(QuasiShuffle, HoffmanExamples) {
    const auto h = hoffman_algebra();
    EXPECT_EQ(qq_product(h, pure({1}), pure({2})), pure({1, 2}) + pure({2, 1}) + pure({3}));
    const auto x = qq_product(h, pure({1, 2}), pure({3}));
    EXPECT_EQ(top_component(x, 3), pure({1, 2, 3}) + pure({1, 3, 2}) + pure({3, 1, 2}));
    EXPECT_EQ(top_component(x, 2), pure({4, 2}) + pure({1, 5}));
    EXPECT_THROW(qq_product(h, pure({0, 1}), pure({1})), std::invalid_argument);
}

TEST(QuasiShuffle, AgreesWithTwoIndependentOracles) {
    const auto h = hoffman_algebra();
    for (int total = 2; total <= 4; ++total) {
        for (int p = 1; p < total; ++p) {
            for (const auto& a : all_words(2, p)) {
                for (const auto& b : all_words(2, total - p)) {
                    const auto got = qq_product(h, pure(a), pure(b));
                    EXPECT_EQ(got, hoffman_oracle(pure(a), pure(b))) << to_string(a) << " * " << to_string(b);
                    EXPECT_EQ(got, from_oracle(oracle::quasi_shuffle(as_word(a), as_word(b))))
                        << to_string(a) << " * " << to_string(b);
                }
            }
        }
    }
}

TEST(QuasiShuffle, UnitAndBilinearity) {
    const auto h = hoffman_algebra();
    const auto x = pure({1, 2}) * Rational(2) - pure({3});
    EXPECT_EQ(qq_product(h, TensorElement::scalar(1), x), x);
    EXPECT_EQ(qq_product(h, x, TensorElement::scalar(1)), x);
    const auto y = pure({2}), z = pure({1, 1});
    EXPECT_EQ(qq_product(h, x, y + z), qq_product(h, x, y) + qq_product(h, x, z));
}

TEST(QuasiShuffle, AssociativeOnRandomTriples) {
    const auto r = check_associativity(hoffman_algebra(), {1, 2, 3}, 2, 40, 7);
    EXPECT_TRUE(r.ok) << r.failure;
    const auto d = check_associativity(diagonal_algebra({{1, 2}, {3, 1}}), {1, 2}, 2, 20, 7);
    EXPECT_TRUE(d.ok) << d.failure;
    const auto f = check_associativity(flip_algebra(3), {1, 2, 3}, 2, 20, 7);
    EXPECT_TRUE(f.ok) << f.failure;
}

TEST(Degeneration, TopComponentIsQuantumShuffle) {
    const std::vector<std::pair<int, int>> degrees{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (const auto& spec : builtin_algebras()) {
        const auto r = check_degeneration(spec, spec.generators(2), degrees);
        EXPECT_TRUE(r.ok) << spec.name() << ": " << r.failure;
        EXPECT_GT(r.checked, 0);
    }
}

TEST(Degeneration, ZeroMultiplicationGivesQuantumShuffleExactly) {
    const auto d = diagonal_algebra({{1, 2}, {3, 1}});
    for (const auto& a : all_words(2, 2))
        for (const auto& b : all_words(2, 1))
            EXPECT_EQ(qq_product(d, pure(a), pure(b)), quantum_shuffle_product(d, pure(a), pure(b)));
}

TEST(Oracle, SuiteDispatch) {
    EXPECT_TRUE(check_oracle(hoffman_algebra(), 2, 4).ok);
    EXPECT_TRUE(check_oracle(flip_zero_algebra(), 2, 4).ok);
    EXPECT_EQ(check_oracle(flip_algebra(3), 2, 4).checked, 0);
}

TEST(DescentTheorem, EveryDescentSetUpToFour) {
    for (const auto& spec : {hoffman_algebra(), diagonal_algebra({{1, 2}, {3, 1}})}) {
        for (int n = 2; n <= 4; ++n) {
            const auto probes = all_words(2, n);
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<int> pos;
                for (int i = 1; i < n; ++i)
                    if (mask & (1u << (i - 1))) pos.push_back(i);
                const auto I = DescentSet::make(n, pos);
                for (auto v : {LiftVariant::left, LiftVariant::right}) {
                    const auto r = verify_descent_theorem(spec, n, I, v, probes);
                    EXPECT_TRUE(r.ok) << spec.name() << " " << to_string(I) << ": " << r.failure;
                    EXPECT_EQ(r.probes_checked, static_cast<int>(probes.size()));
                }
            }
        }
    }
}

TEST(DescentTheorem, WordSumsDifferForFullDescentSetAtThree) {
    const auto r = verify_descent_theorem(hoffman_algebra(), 3, DescentSet::make(3, {1, 2}), LiftVariant::left,
                                          {{1, 2, 3}});
    EXPECT_TRUE(r.ok);
    EXPECT_FALSE(r.word_sums_equal);
    EXPECT_THROW(verify_descent_theorem(hoffman_algebra(), 3, DescentSet::make(3, {1}), LiftVariant::left, {}),
                 std::invalid_argument);
}

TEST(DescentTheorem, FourFoldRowWithMiddleBlock) {
    // I = {1,3}: composition (1,2,1), probes over {1,2}.
    const auto h = hoffman_algebra();
    const auto I = DescentSet::make(4, {1, 3});
    const auto r = verify_descent_theorem(h, 4, I, LiftVariant::left, all_words(2, 4));
    EXPECT_TRUE(r.ok) << r.failure;
    EXPECT_EQ(r.probes_checked, 16);
}

TEST(TotalSymmetrize, MatchesLeftFoldOfLetters) {
    const auto h = hoffman_algebra();
    for (int n = 1; n <= 4; ++n) {
        for (const auto& w : all_words(3, n)) {
            const auto qs = total_symmetrize(h, pure(w));
            EXPECT_EQ(qs, from_oracle(oracle::quasi_shuffle_fold(as_word(w)))) << to_string(w);
            std::vector<TensorElement> letters;
            for (auto i : w) letters.push_back(pure({i}));
            EXPECT_EQ(qs, iterated_product(h, letters, Bracketing::left));
        }
    }
}

TEST(TotalSymmetrize, VariantsAgreeAndLowDegreesAreFixed) {
    const auto h = hoffman_algebra();
    EXPECT_EQ(total_symmetrize(h, TensorElement::scalar(2)), TensorElement::scalar(2));
    EXPECT_EQ(total_symmetrize(h, pure({3})), pure({3}));
    EXPECT_THROW(total_symmetrize(h, pure({0, 1})), std::invalid_argument);
    for (const auto& w : all_words(2, 4))
        EXPECT_EQ(total_symmetrize(h, pure(w), LiftVariant::left), total_symmetrize(h, pure(w), LiftVariant::right));
}

TEST(IteratedProduct, BracketingsAgree) {
    const auto h = hoffman_algebra();
    const std::vector<TensorElement> blocks{pure({1}), pure({2, 1}), pure({3})};
    const auto l = iterated_product(h, blocks, Bracketing::left);
    EXPECT_EQ(l, iterated_product(h, blocks, Bracketing::right));
    EXPECT_EQ(l, iterated_product(h, blocks, Bracketing::balanced));
    EXPECT_EQ(iterated_product(h, {}, Bracketing::left), TensorElement::scalar(1));
    EXPECT_THROW(parse_bracketing("middle"), std::invalid_argument);
    EXPECT_THROW(split_blocks({1, 2}, subset_composition(DescentSet::make(3, {1}))), std::invalid_argument);
}
