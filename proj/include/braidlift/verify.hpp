#pragma once

// Probe suites over a braided algebra or over the pure combinatorics. Each
// returns a CheckReport with the first counterexample.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "braided_algebra.hpp"
#include "gvb_word.hpp"
#include "lifting.hpp"
#include "perm_sum.hpp"
#include "permutation.hpp"
#include "products.hpp"
#include "report.hpp"
#include "tensor.hpp"

namespace braidlift {

namespace detail {

inline CheckReport from_validation(const ValidationReport& v) {
    CheckReport r;
    r.checked = static_cast<long>(v.checked.size());
    if (!v.ok) r.fail(v.failure);
    return r;
}

inline std::vector<BasisIndex> with_unit(std::vector<BasisIndex> gens) {
    gens.insert(gens.begin(), 0);
    return gens;
}

inline PureTensor random_pure(std::mt19937_64& rng, const std::vector<BasisIndex>& gens, int degree) {
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    PureTensor t(static_cast<std::size_t>(degree));
    for (auto& i : t) i = gens[pick(rng)];
    return t;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

}  // namespace detail

/// GVB_n relations as operators on V-hat^{(x) n}.
inline CheckReport check_relations_suite(const BraidedAlgebra& spec, int n, BasisIndex bound = 3) {
    return detail::from_validation(check_gvb_relations(spec, n, bound));
}

/// b2 x1 = b1 x2 b1 b2 and b1 x2 x1 = b1 x2 b1 x2 on V-hat^{(x) 3}.
inline CheckReport check_rank3_identities(const BraidedAlgebra& spec, BasisIndex bound = 3) {
    const std::vector<Relation> rels = {
        {"b2 x1 = b1 x2 b1 b2", parse_letters("b2 x1"), parse_letters("b1 x2 b1 b2")},
        {"b1 x2 x1 = b1 x2 b1 x2", parse_letters("b1 x2 x1"), parse_letters("b1 x2 b1 x2")},
    };
    return detail::from_validation(check_operator_identities(spec, rels, 3, bound));
}

/// Left and right lifted sums over des_n(<= I) act identically on every basis
/// tensor of V-hat^{(x) n}, for every I in {1..n-1}.
inline CheckReport check_variant_agreement(const BraidedAlgebra& spec, int n, BasisIndex bound = 3) {
    CheckReport report;
    const auto probes = detail::all_pure_tensors(detail::with_unit(spec.generators(bound)), n);
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> pos;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) pos.push_back(i);
        const auto I = DescentSet::make(n, pos);
        const auto left = descent_lift_sum(n, I, LiftVariant::left);
        const auto right = descent_lift_sum(n, I, LiftVariant::right);
        for (const auto& p : probes) {
            const auto t = TensorElement::pure(p);
            ++report.checked;
            const auto a = act(spec, left, t), b = act(spec, right, t);
            if (a != b) {
                report.fail("I = " + to_string(I) + ", probe " + to_string(p) + ": " + to_string(a) + " vs " +
                            to_string(b));
                return report;
            }
        }
    }
    return report;
}

/// (x * y) * z == x * (y * z) on `count` random triples of pure tensors with
/// factor degrees 1..max_degree over the given generators.
inline CheckReport check_associativity(const BraidedAlgebra& spec, const std::vector<BasisIndex>& gens,
                                       int max_degree, int count, std::uint64_t seed = 1) {
    CheckReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(1, max_degree);
    for (int k = 0; k < count; ++k) {
        const auto a = detail::random_pure(rng, gens, deg(rng));
        const auto b = detail::random_pure(rng, gens, deg(rng));
        const auto c = detail::random_pure(rng, gens, deg(rng));
        const auto x = TensorElement::pure(a), y = TensorElement::pure(b), z = TensorElement::pure(c);
        ++report.checked;
        const auto lhs = qq_product(spec, qq_product(spec, x, y), z);
        const auto rhs = qq_product(spec, x, qq_product(spec, y, z));
        if (lhs != rhs) {
            report.fail("(" + to_string(a) + " * " + to_string(b) + ") * " + to_string(c) + " = " + to_string(lhs) +
                        ", but the other bracketing gives " + to_string(rhs));
            return report;
        }
    }
    return report;
}

/// Top-degree part of x * y is the quantum shuffle x . y (exhaustive over the
/// listed degree pairs); for zero multiplication the two products coincide.
inline CheckReport check_degeneration(const BraidedAlgebra& spec, const std::vector<BasisIndex>& gens,
                                      const std::vector<std::pair<int, int>>& degrees) {
    CheckReport report;
    for (const auto& [p, q] : degrees) {
        for (const auto& a : detail::all_pure_tensors(gens, p)) {
            for (const auto& b : detail::all_pure_tensors(gens, q)) {
                const auto x = TensorElement::pure(a), y = TensorElement::pure(b);
                const auto full = qq_product(spec, x, y);
                const auto quantum = quantum_shuffle_product(spec, x, y);
                ++report.checked;
                if (top_component(full, p + q) != quantum) {
                    report.fail("top part of " + to_string(a) + " * " + to_string(b) + " is " +
                                to_string(top_component(full, p + q)) + ", quantum shuffle gives " + to_string(quantum));
                    return report;
                }
                if (spec.zero_mul() && full != quantum) {
                    report.fail("zero multiplication but " + to_string(a) + " * " + to_string(b) + " = " +
                                to_string(full) + " differs from " + to_string(quantum));
                    return report;
                }
            }
        }
    }
    return report;
}

/// alpha~(Q_{p,q}(s)) = T_s and beta~(T_s) = s for every shuffle, p + q <= max_n.
inline CheckReport check_tits_projection(int max_n) {
    CheckReport report;
    for (int n = 2; n <= max_n; ++n) {
        for (int p = 1; p < n; ++p) {
            for (const auto& s : enumerate_shuffles(p, n - p, 0, n)) {
                ++report.checked;
                const auto tits = tits_section(s);
                if (project_alpha(lift_shuffle(s, p, n - p)) != GvbElement::word(tits)) {
                    report.fail("alpha of the lift of " + to_string(s) + " is not " + to_string(tits));
                    return report;
                }
                if (project_beta(GvbElement::word(tits)) != PermSum::single(s)) {
                    report.fail("beta(" + to_string(tits) + ") != " + to_string(s));
                    return report;
                }
            }
        }
    }
    return report;
}

/// S_{j,n-j} S_{i,j-i} = S_{i,n-i} S^{up i}_{j-i,n-j} in K[S_n], 1 <= i < j < n <= max_n.
inline CheckReport check_shuffle_sum_identity(int max_n) {
    CheckReport report;
    for (int n = 3; n <= max_n; ++n) {
        for (int i = 1; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                ++report.checked;
                const auto lhs = partial_symmetrizer(j, n - j, 0, n) * partial_symmetrizer(i, j - i, 0, n);
                const auto rhs = partial_symmetrizer(i, n - i, 0, n) * partial_symmetrizer(j - i, n - j, i, n);
                if (lhs != rhs) {
                    report.fail("n=" + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
                    return report;
                }
            }
        }
    }
    return report;
}

/// |des_n(<= I)| = n! / prod c_i! for every I, n <= max_n.
inline CheckReport check_cardinality(int max_n) {
    CheckReport report;
    for (int n = 1; n <= max_n; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> pos;
            for (int i = 1; i < n; ++i)
                if (mask & (1u << (i - 1))) pos.push_back(i);
            const auto I = DescentSet::make(n, pos);
            std::uint64_t expected = detail::factorial(n);
            for (int c : subset_composition(I).parts) expected /= detail::factorial(c);
            ++report.checked;
            const auto got = enumerate_descent_class(n, I, DescentMode::leq).size();
            if (got != expected) {
                report.fail("|des_" + std::to_string(n) + "(<= " + to_string(I) + ")| = " + std::to_string(got) +
                            ", expected " + std::to_string(expected));
                return report;
            }
        }
    }
    return report;
}

/// qq_product against an independent product: Hoffman's recursion for the
/// hoffman algebra, the classical shuffle for flip_zero, the quantum shuffle
/// for other zero multiplications. Exhaustive on
/// indices <= bound and total degree <= max_total.
inline CheckReport check_oracle(const BraidedAlgebra& spec, BasisIndex bound, int max_total) {
    CheckReport report;
    std::function<TensorElement(const TensorElement&, const TensorElement&)> oracle;
    if (spec.name() == "hoffman") {
        oracle = hoffman_oracle;
    } else if (spec.name() == "flip_zero") {
        oracle = shuffle_product;
    } else if (spec.zero_mul()) {
        oracle = [&](const TensorElement& x, const TensorElement& y) { return quantum_shuffle_product(spec, x, y); };
    } else {
        return report;  // no independent product available
    }
    const auto gens = spec.generators(bound);
    for (int total = 2; total <= max_total; ++total) {
        for (int p = 1; p < total; ++p) {
            for (const auto& a : detail::all_pure_tensors(gens, p)) {
                for (const auto& b : detail::all_pure_tensors(gens, total - p)) {
                    const auto x = TensorElement::pure(a), y = TensorElement::pure(b);
                    ++report.checked;
                    const auto got = qq_product(spec, x, y), want = oracle(x, y);
                    if (got != want) {
                        report.fail(to_string(a) + " * " + to_string(b) + " = " + to_string(got) + ", oracle gives " +
                                    to_string(want));
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace braidlift
