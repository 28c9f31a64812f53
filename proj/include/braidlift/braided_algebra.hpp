#pragma once

// Braided algebras (V, sigma, m) with an adjoined unit, and the induced
// representation of GVB_n^+ on tensor powers of V-hat = K.1 (+) V.
//
// On V-hat the structure maps are extended by
//   m(1 (x) v) = m(v (x) 1) = v,  sigma(1 (x) v) = v (x) 1,  sigma(v (x) 1) = 1 (x) v,
// and sigma^m(v (x) w) = 1 (x) m(v (x) w). b_i acts by sigma on slots (i, i+1),
// x_i by sigma^m. Words act with their rightmost letter first.

#include <algorithm>
#include <functional>
#include <memory>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gvb_word.hpp"
#include "rational.hpp"
#include "tensor.hpp"

namespace braidlift {

struct PairTerm {
    BasisIndex first;
    BasisIndex second;
    Rational coeff;
};

struct IndexTerm {
    BasisIndex index;
    Rational coeff;
};

using PairCombination = std::vector<PairTerm>;
using IndexCombination = std::vector<IndexTerm>;

class BraidedAlgebra {
public:
    using SigmaFn = std::function<PairCombination(BasisIndex, BasisIndex)>;
    using MulFn = std::function<IndexCombination(BasisIndex, BasisIndex)>;

    BraidedAlgebra(std::string name, std::optional<BasisIndex> dim, SigmaFn sigma, MulFn mul, bool zero_mul)
        : name_(std::move(name)), dim_(dim), sigma_(std::move(sigma)), mul_(std::move(mul)), zero_mul_(zero_mul) {}

    const std::string& name() const { return name_; }
    /// nullopt for a lazily extended basis y_1, y_2, ...
    std::optional<BasisIndex> dim() const { return dim_; }
    bool zero_mul() const { return zero_mul_; }

    /// The first `bound` basis indices of V (all of them if V is smaller).
    std::vector<BasisIndex> generators(BasisIndex bound) const {
        const BasisIndex top = dim_ ? std::min(*dim_, bound) : bound;
        std::vector<BasisIndex> g;
        for (BasisIndex i = 1; i <= top; ++i) g.push_back(i);
        return g;
    }

    /// sigma restricted to V (x) V.
    PairCombination sigma(BasisIndex i, BasisIndex j) const { return sigma_(i, j); }
    /// m restricted to V (x) V.
    IndexCombination mul(BasisIndex i, BasisIndex j) const {
        if (zero_mul_) return {};
        return mul_(i, j);
    }

    /// sigma on V-hat (x) V-hat.
    PairCombination braid_hat(BasisIndex i, BasisIndex j) const {
        if (i == 0 || j == 0) return {{j, i, 1}};
        return sigma_(i, j);
    }

    /// sigma^m on V-hat (x) V-hat.
    PairCombination sigma_m(BasisIndex i, BasisIndex j) const {
        if (i == 0) return {{0, j, 1}};
        if (j == 0) return {{0, i, 1}};
        PairCombination out;
        for (const auto& t : mul(i, j)) out.push_back({0, t.index, t.coeff});
        return out;
    }

private:
    std::string name_;
    std::optional<BasisIndex> dim_;
    SigmaFn sigma_;
    MulFn mul_;
    bool zero_mul_;
};

// ---------------------------------------------------------------------------
// Builtins

/// Flip braiding and m(y_i (x) y_j) = y_{i+j} on the unbounded basis y_1, y_2, ...
inline BraidedAlgebra hoffman_algebra() {
    return BraidedAlgebra(
        "hoffman", std::nullopt, [](BasisIndex i, BasisIndex j) { return PairCombination{{j, i, 1}}; },
        [](BasisIndex i, BasisIndex j) { return IndexCombination{{i + j, 1}}; }, false);
}

/// Flip braiding, zero multiplication, unbounded basis.
inline BraidedAlgebra flip_zero_algebra() {
    return BraidedAlgebra(
        "flip_zero", std::nullopt, [](BasisIndex i, BasisIndex j) { return PairCombination{{j, i, 1}}; },
        [](BasisIndex, BasisIndex) { return IndexCombination{}; }, true);
}

/// Flip braiding on y_1..y_dim with the truncated multiplication
/// m(y_i (x) y_j) = y_{i+j} if i + j <= dim, else 0.
inline BraidedAlgebra flip_algebra(BasisIndex dim = 3) {
    if (dim < 1) throw std::invalid_argument("flip algebra needs dim >= 1");
    return BraidedAlgebra(
        "flip", dim, [](BasisIndex i, BasisIndex j) { return PairCombination{{j, i, 1}}; },
        [dim](BasisIndex i, BasisIndex j) {
            return i + j <= dim ? IndexCombination{{i + j, 1}} : IndexCombination{};
        },
        false);
}

/// sigma(v_i (x) v_j) = q_ij v_j (x) v_i with zero multiplication.
inline BraidedAlgebra diagonal_algebra(std::vector<std::vector<Rational>> q) {
    const auto d = q.size();
    if (d == 0) throw std::invalid_argument("diagonal braiding needs a non-empty q-matrix");
    for (const auto& row : q) {
        if (row.size() != d) throw std::invalid_argument("q-matrix must be square");
        for (const auto& v : row)
            if (v == 0) throw std::invalid_argument("q-matrix entries must be nonzero");
    }
    auto table = std::make_shared<const std::vector<std::vector<Rational>>>(std::move(q));
    return BraidedAlgebra(
        "diagonal", static_cast<BasisIndex>(d),
        [table](BasisIndex i, BasisIndex j) {
            if (i > table->size() || j > table->size()) throw std::out_of_range("index outside diagonal basis");
            return PairCombination{{j, i, (*table)[i - 1][j - 1]}};
        },
        [](BasisIndex, BasisIndex) { return IndexCombination{}; }, true);
}

/// Table-driven algebra. Missing sigma entries default to the flip, missing m
/// entries to zero.
inline BraidedAlgebra table_algebra(std::string name, std::optional<BasisIndex> dim,
                                    std::map<std::pair<BasisIndex, BasisIndex>, PairCombination> sigma,
                                    std::map<std::pair<BasisIndex, BasisIndex>, IndexCombination> mul) {
    const bool zero = std::all_of(mul.begin(), mul.end(), [](const auto& kv) {
        return std::all_of(kv.second.begin(), kv.second.end(), [](const IndexTerm& t) { return t.coeff == 0; });
    });
    auto s = std::make_shared<const decltype(sigma)>(std::move(sigma));
    auto m = std::make_shared<const decltype(mul)>(std::move(mul));
    return BraidedAlgebra(
        std::move(name), dim,
        [s](BasisIndex i, BasisIndex j) {
            auto it = s->find({i, j});
            return it == s->end() ? PairCombination{{j, i, 1}} : it->second;
        },
        [m](BasisIndex i, BasisIndex j) {
            auto it = m->find({i, j});
            return it == m->end() ? IndexCombination{} : it->second;
        },
        zero);
}

/// Hoffman, flip (dim 3), flip_zero and diagonal(q12 = 2, q21 = 3), the
/// instances used throughout the verification suites.
inline std::vector<BraidedAlgebra> builtin_algebras() {
    return {hoffman_algebra(), flip_algebra(3), flip_zero_algebra(),
            diagonal_algebra({{Rational(1), Rational(2)}, {Rational(3), Rational(1)}})};
}

// ---------------------------------------------------------------------------
// Representation

namespace detail {

inline void apply_local(const PairCombination& image, const PureTensor& base, std::size_t pos, const Rational& c,
                        TensorElement& out) {
    for (const auto& term : image) {
        PureTensor w = base;
        w[pos] = term.first;
        w[pos + 1] = term.second;
        out.add(w, c * term.coeff);
    }
}

}  // namespace detail

/// Action of a single generator on V-hat^{(x) n}.
inline TensorElement apply_generator(const BraidedAlgebra& spec, const GvbLetter& letter, const TensorElement& t,
                                     int n) {
    if (letter.index < 1 || letter.index > n - 1) throw std::invalid_argument("letter index exceeds rank");
    TensorElement out;
    const auto pos = static_cast<std::size_t>(letter.index - 1);
    for (const auto& [w, c] : t.terms()) {
        if (static_cast<int>(w.size()) != n) {
            throw std::invalid_argument("tensor of degree " + std::to_string(w.size()) + " acted on in rank " +
                                        std::to_string(n));
        }
        const BasisIndex a = w[pos], b = w[pos + 1];
        detail::apply_local(letter.is_braid() ? spec.braid_hat(a, b) : spec.sigma_m(a, b), w, pos, c, out);
    }
    return out;
}

/// Action of a word (rightmost letter first).
inline TensorElement act_word(const BraidedAlgebra& spec, const Letters& word, const TensorElement& t, int n) {
    TensorElement cur = t;
    for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it) cur = apply_generator(spec, *it, cur, n);
    return cur;
}

inline TensorElement act(const BraidedAlgebra& spec, const GvbElement& x, const TensorElement& t) {
    for (const auto& [w, c] : t.terms()) {
        if (static_cast<int>(w.size()) != x.rank()) throw std::invalid_argument("act: tensor degree differs from rank");
    }
    TensorElement out;
    for (const auto& [w, c] : x.terms()) out += act_word(spec, w, t, x.rank()) * c;
    return out;
}

// ---------------------------------------------------------------------------
// Validation

/// Raised when a structure fails the braided-algebra probe.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> checked;  // relation names, in check order
    std::string failure;               // first violated relation with witness

    explicit operator bool() const { return ok; }
};

namespace detail {

/// Every pure tensor of length n over `letters`.
inline std::vector<PureTensor> all_pure_tensors(const std::vector<BasisIndex>& letters, int n) {
    std::vector<PureTensor> out{{}};
    for (int d = 0; d < n; ++d) {
        std::vector<PureTensor> next;
        for (const auto& p : out)
            for (BasisIndex i : letters) {
                auto q = p;
                q.push_back(i);
                next.push_back(std::move(q));
            }
        out.swap(next);
    }
    return out;
}

inline IndexCombination mul_hat(const BraidedAlgebra& spec, BasisIndex i, BasisIndex j) {
    if (i == 0) return {{j, 1}};
    if (j == 0) return {{i, 1}};
    return spec.mul(i, j);
}

inline TensorElement as_tensor(const IndexCombination& c) {
    TensorElement t;
    for (const auto& term : c) t.add({term.index}, term.coeff);
    return t;
}

inline TensorElement mul_hat(const BraidedAlgebra& spec, const TensorElement& left, BasisIndex j) {
    TensorElement out;
    for (const auto& [w, c] : left.terms()) out += as_tensor(mul_hat(spec, w[0], j)) * c;
    return out;
}

inline TensorElement mul_hat(const BraidedAlgebra& spec, BasisIndex i, const TensorElement& right) {
    TensorElement out;
    for (const auto& [w, c] : right.terms()) out += as_tensor(mul_hat(spec, i, w[0])) * c;
    return out;
}

}  // namespace detail

struct Relation {
    std::string name;
    Letters lhs;
    Letters rhs;
};

/// All defining relations of GVB_n^+ (far commutation and the braid-type
/// relations).
inline std::vector<Relation> gvb_relations(int n) {
    using L = GvbLetter;
    std::vector<Relation> out;
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 2; j <= n - 1; ++j) {
            out.push_back({"b" + std::to_string(i) + " b" + std::to_string(j) + " commute", {L::b(i), L::b(j)},
                           {L::b(j), L::b(i)}});
            out.push_back({"b" + std::to_string(i) + " x" + std::to_string(j) + " commute", {L::b(i), L::x(j)},
                           {L::x(j), L::b(i)}});
            out.push_back({"x" + std::to_string(i) + " b" + std::to_string(j) + " commute", {L::x(i), L::b(j)},
                           {L::b(j), L::x(i)}});
            out.push_back({"x" + std::to_string(i) + " x" + std::to_string(j) + " commute", {L::x(i), L::x(j)},
                           {L::x(j), L::x(i)}});
        }
    }
    for (int i = 1; i <= n - 2; ++i) {
        const auto s = [](int k) { return std::to_string(k); };
        out.push_back({"b" + s(i) + " b" + s(i + 1) + " b" + s(i) + " = b" + s(i + 1) + " b" + s(i) + " b" + s(i + 1),
                       {L::b(i), L::b(i + 1), L::b(i)},
                       {L::b(i + 1), L::b(i), L::b(i + 1)}});
        out.push_back({"x" + s(i) + " x" + s(i + 1) + " x" + s(i) + " = x" + s(i + 1) + " x" + s(i) + " x" + s(i + 1),
                       {L::x(i), L::x(i + 1), L::x(i)},
                       {L::x(i + 1), L::x(i), L::x(i + 1)}});
        out.push_back({"x" + s(i) + " b" + s(i + 1) + " b" + s(i) + " = b" + s(i + 1) + " b" + s(i) + " x" + s(i + 1),
                       {L::x(i), L::b(i + 1), L::b(i)},
                       {L::b(i + 1), L::b(i), L::x(i + 1)}});
        out.push_back({"x" + s(i + 1) + " b" + s(i) + " b" + s(i + 1) + " = b" + s(i) + " b" + s(i + 1) + " x" + s(i),
                       {L::x(i + 1), L::b(i), L::b(i + 1)},
                       {L::b(i), L::b(i + 1), L::x(i)}});
    }
    return out;
}

/// Checks lhs == rhs as operators on every basis tensor of V-hat^{(x) n} built
/// from the unit and the first `bound` generators.
inline ValidationReport check_operator_identities(const BraidedAlgebra& spec, const std::vector<Relation>& relations,
                                                  int n, BasisIndex bound = 3) {
    ValidationReport report;
    auto letters = spec.generators(bound);
    letters.insert(letters.begin(), 0);
    const auto probes = detail::all_pure_tensors(letters, n);
    for (const auto& rel : relations) {
        report.checked.push_back(rel.name);
        for (const auto& p : probes) {
            const auto t = TensorElement::pure(p);
            const auto lhs = act_word(spec, rel.lhs, t, n);
            const auto rhs = act_word(spec, rel.rhs, t, n);
            if (lhs != rhs) {
                report.ok = false;
                report.failure = rel.name + " fails on " + to_string(p) + ": " + to_string(lhs) + " vs " + to_string(rhs);
                return report;
            }
        }
    }
    return report;
}

inline ValidationReport check_gvb_relations(const BraidedAlgebra& spec, int n, BasisIndex bound = 3) {
    return check_operator_identities(spec, gvb_relations(n), n, bound);
}

/// Structural checks plus the GVB_3 relations on V-hat^{(x) 3}.
inline ValidationReport validate_braided(const BraidedAlgebra& spec, BasisIndex bound = 3) {
    ValidationReport report;
    const auto gens = spec.generators(bound);
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.failure = std::move(msg);
        return report;
    };

    report.checked.push_back("sigma and m restrict to V");
    for (BasisIndex i : gens) {
        for (BasisIndex j : gens) {
            for (const auto& t : spec.sigma(i, j)) {
                if (t.first == 0 || t.second == 0) {
                    return fail("sigma(" + std::to_string(i) + "," + std::to_string(j) + ") involves the unit");
                }
                if (spec.dim() && (t.first > *spec.dim() || t.second > *spec.dim())) {
                    return fail("sigma(" + std::to_string(i) + "," + std::to_string(j) + ") leaves the basis");
                }
            }
            for (const auto& t : spec.mul(i, j)) {
                if (t.index == 0) return fail("m(" + std::to_string(i) + "," + std::to_string(j) + ") involves the unit");
                if (spec.dim() && t.index > *spec.dim()) {
                    return fail("m(" + std::to_string(i) + "," + std::to_string(j) + ") leaves the basis");
                }
            }
        }
    }

    report.checked.push_back("m associative");
    for (BasisIndex a : gens)
        for (BasisIndex b : gens)
            for (BasisIndex c : gens) {
                const auto left = detail::mul_hat(spec, detail::as_tensor(detail::mul_hat(spec, a, b)), c);
                const auto right = detail::mul_hat(spec, a, detail::as_tensor(detail::mul_hat(spec, b, c)));
                if (left != right) {
                    return fail("m associativity fails on " + to_string(PureTensor{a, b, c}) + ": " + to_string(left) +
                                " vs " + to_string(right));
                }
            }

    auto rel = check_gvb_relations(spec, 3, bound);
    report.checked.insert(report.checked.end(), rel.checked.begin(), rel.checked.end());
    if (!rel.ok) return fail(rel.failure);
    return report;
}

/// m o sigma == m on V (x) V probes.
inline bool is_braided_commutative(const BraidedAlgebra& spec, BasisIndex bound = 3) {
    const auto gens = spec.generators(bound);
    for (BasisIndex i : gens)
        for (BasisIndex j : gens) {
            TensorElement lhs;
            for (const auto& t : spec.sigma(i, j)) lhs += detail::as_tensor(spec.mul(t.first, t.second)) * t.coeff;
            if (lhs != detail::as_tensor(spec.mul(i, j))) return false;
        }
    return true;
}

inline const BraidedAlgebra& require_valid(const BraidedAlgebra& spec, BasisIndex bound = 3) {
    auto r = validate_braided(spec, bound);
    if (!r.ok) throw ValidationError("braided algebra '" + spec.name() + "' rejected: " + r.failure);
    return spec;
}

}  // namespace braidlift
