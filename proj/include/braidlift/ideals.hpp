#pragma once

// Finite slices of the defining ideals: kernels of the braid symmetrizer T_n
// and of the total symmetrization operator QS, the correction W_n = Q_n - T_n,
// degree-by-degree lifting of relations, and the degeneration checks.
//
// Kernel bases are reduced echelon forms whose column order is: higher degree
// first, then lexicographic. Pivots are therefore top-degree words, normalized
// to coefficient 1.

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "braided_algebra.hpp"
#include "gvb_word.hpp"
#include "lifting.hpp"
#include "linalg.hpp"
#include "products.hpp"
#include "report.hpp"
#include "tensor.hpp"

namespace braidlift {

class NotARelation : public std::invalid_argument {
public:
    explicit NotARelation(TensorElement image)
        : std::invalid_argument("not a relation: T_n(x) = " + to_string(image)), image_(std::move(image)) {}
    const TensorElement& image() const { return image_; }

private:
    TensorElement image_;
};

class Unliftable : public std::runtime_error {
public:
    explicit Unliftable(TensorElement residual)
        : std::runtime_error("unliftable: QS(y) = " + to_string(residual) + " has no solution in lower degrees"),
          residual_(std::move(residual)) {}
    const TensorElement& residual() const { return residual_; }

private:
    TensorElement residual_;
};

enum class KernelKind { braid, total };

struct RelationBasis {
    KernelKind kind = KernelKind::total;
    std::vector<BasisIndex> window;
    int max_degree = 0;
    std::vector<TensorElement> elements;
    std::vector<PureTensor> pivots;

    std::size_t dimension() const { return elements.size(); }
};

/// Every pure tensor of length n over the window, lexicographic.
inline std::vector<PureTensor> words_over(const std::vector<BasisIndex>& window, int n) {
    return detail::all_pure_tensors(window, n);
}

namespace detail {

inline std::vector<BasisIndex> normalized_window(std::vector<BasisIndex> window) {
    if (window.empty()) throw std::invalid_argument("empty generator window");
    std::sort(window.begin(), window.end());
    window.erase(std::unique(window.begin(), window.end()), window.end());
    if (window.front() == 0) throw std::invalid_argument("window may not contain the unit index 0");
    return window;
}

/// Columns: domain words; rows: every codomain word hit. Returns the matrix
/// and the codomain row labels.
inline std::pair<RationalMatrix, std::vector<PureTensor>> assemble(
    const std::vector<PureTensor>& domain, const std::function<TensorElement(const PureTensor&)>& map,
    const std::vector<TensorElement>& extra_rows = {}) {
    std::vector<TensorElement> images;
    images.reserve(domain.size());
    std::set<PureTensor, TensorOrder> codomain;
    for (const auto& w : domain) {
        images.push_back(map(w));
        for (const auto& [t, c] : images.back().terms()) codomain.insert(t);
    }
    for (const auto& e : extra_rows)
        for (const auto& [t, c] : e.terms()) codomain.insert(t);
    std::vector<PureTensor> rows(codomain.begin(), codomain.end());
    RationalMatrix m(rows.size(), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
        for (const auto& [t, v] : images[c].terms()) {
            const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), t, TensorOrder{}) - rows.begin());
            m(r, c) = v;
        }
    }
    return {std::move(m), std::move(rows)};
}

inline RelationBasis kernel_of(KernelKind kind, const std::vector<BasisIndex>& window, int max_degree,
                               const std::vector<PureTensor>& domain,
                               const std::function<TensorElement(const PureTensor&)>& map) {
    RelationBasis basis{kind, window, max_degree, {}, {}};
    if (domain.empty()) return basis;
    const auto [m, rows] = assemble(domain, map);
    for (const auto& v : nullspace(m)) {
        TensorElement e;
        std::optional<PureTensor> pivot;
        for (std::size_t c = 0; c < domain.size(); ++c) {
            if (v[c] == 0) continue;
            if (!pivot) pivot = domain[c];
            e.add(domain[c], v[c]);
        }
        basis.elements.push_back(std::move(e));
        basis.pivots.push_back(*pivot);
    }
    return basis;
}

}  // namespace detail

/// Kernel of T_n on the degree-n words over the window.
inline RelationBasis kernel_braid_symmetrizer(const BraidedAlgebra& spec, std::vector<BasisIndex> window, int n) {
    window = detail::normalized_window(std::move(window));
    if (n < 1) throw std::invalid_argument("degree must be positive");
    const GvbElement tn = braid_symmetrizer(n);
    return detail::kernel_of(KernelKind::braid, window, n, words_over(window, n),
                             [&](const PureTensor& w) { return act(spec, tn, TensorElement::pure(w)); });
}

/// Kernel of QS on (+)_{1 <= k <= n} of the degree-k words over the window.
inline RelationBasis kernel_total_symmetrization(const BraidedAlgebra& spec, std::vector<BasisIndex> window, int n,
                                                 LiftVariant variant = LiftVariant::left) {
    window = detail::normalized_window(std::move(window));
    if (n < 1) throw std::invalid_argument("degree must be positive");
    std::vector<PureTensor> domain;
    for (int k = n; k >= 1; --k) {
        auto w = words_over(window, k);
        domain.insert(domain.end(), w.begin(), w.end());
    }
    return detail::kernel_of(KernelKind::total, window, n, domain, [&](const PureTensor& w) {
        return total_symmetrize(spec, TensorElement::pure(w), variant);
    });
}

/// Action of W_n = Q_n - T_n followed by D, on a homogeneous tensor.
inline TensorElement w_action(const BraidedAlgebra& spec, const TensorElement& t, LiftVariant variant = LiftVariant::left) {
    if (t.is_zero()) return {};
    if (!t.is_homogeneous()) throw std::invalid_argument("w_action needs a homogeneous tensor");
    const int n = t.max_degree();
    if (n <= 1) return {};
    return delete_units(act(spec, total_symmetrization_element(n, variant) - braid_symmetrizer(n), t));
}

/// x = xbar + y with y in T^{<= n-1}(V) and QS(x) = 0, for xbar in ker T_n.
/// y is the echelon back-substitution solution (free variables zero) over the
/// words built from the window and every index occurring in QS(xbar).
inline TensorElement lift_relation(const BraidedAlgebra& spec, const TensorElement& xbar, std::vector<BasisIndex> window,
                                   LiftVariant variant = LiftVariant::left) {
    if (xbar.is_zero()) return xbar;
    if (!xbar.is_homogeneous()) throw std::invalid_argument("lift_relation needs a homogeneous tensor");
    if (xbar.has_units()) throw std::invalid_argument("lift_relation input must be unit-free");
    const int n = xbar.max_degree();
    const TensorElement top_image = act(spec, braid_symmetrizer(std::max(n, 1)), xbar);
    if (n >= 1 && !top_image.is_zero()) throw NotARelation(top_image);

    const TensorElement target = total_symmetrize(spec, xbar, variant) * Rational(-1);
    if (target.is_zero()) return xbar;
    if (n <= 1) throw Unliftable(target);

    std::set<BasisIndex> letters(window.begin(), window.end());
    for (const auto& e : {xbar, target})
        for (const auto& [t, c] : e.terms()) letters.insert(t.begin(), t.end());
    letters.erase(0);
    const std::vector<BasisIndex> gens(letters.begin(), letters.end());

    std::vector<PureTensor> domain;
    for (int k = n - 1; k >= 1; --k) {
        auto w = words_over(gens, k);
        domain.insert(domain.end(), w.begin(), w.end());
    }
    const auto [m, rows] = detail::assemble(
        domain, [&](const PureTensor& w) { return total_symmetrize(spec, TensorElement::pure(w), variant); }, {target});
    std::vector<Rational> rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rhs[r] = target.coefficient(rows[r]);
    const auto y = solve(m, rhs);
    if (!y) throw Unliftable(target);
    TensorElement x = xbar;
    for (std::size_t c = 0; c < domain.size(); ++c) x.add(domain[c], (*y)[c]);
    return x;
}

/// The degree-(p+q) part of x * y equals the quantum shuffle x . y for every
/// probe pair of pure tensors.
inline CheckReport graded_product_check(const BraidedAlgebra& spec,
                                        const std::vector<std::pair<PureTensor, PureTensor>>& probes) {
    CheckReport report;
    for (const auto& [a, b] : probes) {
        const auto x = TensorElement::pure(a), y = TensorElement::pure(b);
        const int top = static_cast<int>(a.size() + b.size());
        const auto lhs = top_component(qq_product(spec, x, y), top);
        const auto rhs = quantum_shuffle_product(spec, x, y);
        ++report.checked;
        if (lhs != rhs) {
            report.fail("top part of " + to_string(a) + " * " + to_string(b) + " is " + to_string(lhs) +
                        ", quantum shuffle gives " + to_string(rhs));
        }
    }
    return report;
}

/// x * y == y * x over all pure x, y on the window with
/// deg x + deg y <= max_degree. Requires m o sigma = m on the probe.
inline CheckReport commutativity_check(const BraidedAlgebra& spec, std::vector<BasisIndex> window, int max_degree) {
    window = detail::normalized_window(std::move(window));
    if (!is_braided_commutative(spec, window.back())) {
        throw std::invalid_argument("commutativity_check: '" + spec.name() + "' is not braided commutative");
    }
    CheckReport report;
    for (int p = 1; p < max_degree; ++p) {
        for (int q = p; p + q <= max_degree; ++q) {
            for (const auto& a : words_over(window, p)) {
                for (const auto& b : words_over(window, q)) {
                    const auto x = TensorElement::pure(a), y = TensorElement::pure(b);
                    ++report.checked;
                    if (qq_product(spec, x, y) != qq_product(spec, y, x)) {
                        report.fail(to_string(a) + " * " + to_string(b) + " != " + to_string(b) + " * " + to_string(a));
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace braidlift
