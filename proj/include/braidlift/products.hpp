#pragma once

// Shuffle, quantum shuffle and quantum quasi-shuffle products on T(V), the
// total symmetrization operator, and the operator-level checks of the
// descent-lift identities.

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braided_algebra.hpp"
#include "gvb_word.hpp"
#include "lifting.hpp"
#include "permutation.hpp"
#include "tensor.hpp"

namespace braidlift {

namespace detail {

/// Bilinear extension over pure pairs; scalars (degree 0) act as the unit.
template <class PureProduct>
TensorElement bilinear(const TensorElement& x, const TensorElement& y, PureProduct&& pure) {
    TensorElement out;
    for (const auto& [u, c] : x.terms()) {
        for (const auto& [w, d] : y.terms()) {
            if (u.empty() || w.empty()) {
                PureTensor cat = u;
                cat.insert(cat.end(), w.begin(), w.end());
                out.add(cat, c * d);
                continue;
            }
            out += pure(u, w) * (c * d);
        }
    }
    return out;
}

inline TensorElement concat_pure(const PureTensor& u, const PureTensor& w) {
    PureTensor cat = u;
    cat.insert(cat.end(), w.begin(), w.end());
    return TensorElement::pure(std::move(cat));
}

/// sum over S_{p,q} of T_s, in rank p+q. Memoized.
inline const GvbElement& braid_shuffle_sum(int p, int q) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, GvbElement> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({p, q});
    if (it != cache.end()) return it->second;
    GvbElement r(p + q);
    for (const auto& s : enumerate_shuffles(p, q, 0, p + q)) r.add(tits_section(s).letters(), 1);
    return cache.emplace(std::pair{p, q}, std::move(r)).first->second;
}

}  // namespace detail

/// Classical shuffle: the (p,q)-shuffle s sends v_1..v_n to the tensor whose
/// y-th slot is v_{s(y)}.
inline TensorElement shuffle_product(const TensorElement& x, const TensorElement& y) {
    return detail::bilinear(x, y, [](const PureTensor& u, const PureTensor& w) {
        const int p = static_cast<int>(u.size()), q = static_cast<int>(w.size());
        PureTensor cat = u;
        cat.insert(cat.end(), w.begin(), w.end());
        TensorElement out;
        for (const auto& s : enumerate_shuffles(p, q, 0, p + q)) {
            PureTensor moved(cat.size());
            for (int slot = 1; slot <= p + q; ++slot) moved[static_cast<std::size_t>(slot - 1)] = cat[static_cast<std::size_t>(s(slot) - 1)];
            out.add(moved, 1);
        }
        return out;
    });
}

/// x . y = sum over S_{p,q} of T_s (x (x) y).
inline TensorElement quantum_shuffle_product(const BraidedAlgebra& spec, const TensorElement& x, const TensorElement& y) {
    return detail::bilinear(x, y, [&](const PureTensor& u, const PureTensor& w) {
        const int p = static_cast<int>(u.size()), q = static_cast<int>(w.size());
        return act(spec, detail::braid_shuffle_sum(p, q), detail::concat_pure(u, w));
    });
}

/// x * y = D o sum over S_{p,q} of Q_{p,q}(s) (x (x) y).
inline TensorElement qq_product(const BraidedAlgebra& spec, const TensorElement& x, const TensorElement& y) {
    if (x.has_units() || y.has_units()) throw std::invalid_argument("qq_product inputs must be unit-free");
    return detail::bilinear(x, y, [&](const PureTensor& u, const PureTensor& w) {
        const int p = static_cast<int>(u.size()), q = static_cast<int>(w.size());
        return delete_units(act(spec, shuffle_lift_sum(p, q), detail::concat_pure(u, w)));
    });
}

namespace detail {

inline const TensorElement& hoffman_pure(const PureTensor& a, const PureTensor& b,
                                         std::map<std::pair<PureTensor, PureTensor>, TensorElement>& memo) {
    auto key = std::pair{a, b};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    TensorElement out;
    if (a.empty() || b.empty()) {
        out = concat_pure(a, b);
    } else {
        const PureTensor u(a.begin() + 1, a.end()), v(b.begin() + 1, b.end());
        auto prepend = [](BasisIndex head, const TensorElement& t) {
            TensorElement r;
            for (const auto& [w, c] : t.terms()) {
                PureTensor h{head};
                h.insert(h.end(), w.begin(), w.end());
                r.add(h, c);
            }
            return r;
        };
        out += prepend(a.front(), hoffman_pure(u, b, memo));
        out += prepend(b.front(), hoffman_pure(a, v, memo));
        out += prepend(a.front() + b.front(), hoffman_pure(u, v, memo));
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace detail

/// Hoffman's quasi-shuffle by its first-letter recursion
/// (a u) * (b v) = a (u * b v) + b (a u * v) + [a+b] (u * v).
inline TensorElement hoffman_oracle(const TensorElement& x, const TensorElement& y) {
    std::map<std::pair<PureTensor, PureTensor>, TensorElement> memo;
    TensorElement out;
    for (const auto& [u, c] : x.terms())
        for (const auto& [w, d] : y.terms()) out += detail::hoffman_pure(u, w, memo) * (c * d);
    return out;
}

enum class Bracketing { left, right, balanced };

inline Bracketing parse_bracketing(std::string_view s) {
    if (s == "left") return Bracketing::left;
    if (s == "right") return Bracketing::right;
    if (s == "balanced") return Bracketing::balanced;
    throw std::invalid_argument("unknown bracketing '" + std::string(s) + "'");
}

inline TensorElement iterated_product(const BraidedAlgebra& spec, const std::vector<TensorElement>& blocks,
                                      Bracketing bracketing) {
    if (blocks.empty()) return TensorElement::scalar(1);
    std::function<TensorElement(std::size_t, std::size_t)> fold = [&](std::size_t lo, std::size_t hi) {
        if (hi - lo == 1) return blocks[lo];
        switch (bracketing) {
            case Bracketing::left: return qq_product(spec, fold(lo, hi - 1), blocks[hi - 1]);
            case Bracketing::right: return qq_product(spec, blocks[lo], fold(lo + 1, hi));
            case Bracketing::balanced: break;
        }
        const std::size_t mid = lo + (hi - lo) / 2;
        return qq_product(spec, fold(lo, mid), fold(mid, hi));
    };
    return fold(0, blocks.size());
}

/// QS = (+)_n D o Q_n; identity on degrees 0 and 1.
inline TensorElement total_symmetrize(const BraidedAlgebra& spec, const TensorElement& t,
                                      LiftVariant variant = LiftVariant::left) {
    if (t.has_units()) throw std::invalid_argument("total_symmetrize input must be unit-free");
    TensorElement out;
    for (const auto& [n, part] : t.components()) {
        if (n <= 1) {
            out += part;
            continue;
        }
        out += delete_units(act(spec, total_symmetrization_element(n, variant), part));
    }
    return out;
}

/// Splits a pure tensor into consecutive blocks of the given sizes.
inline std::vector<TensorElement> split_blocks(const PureTensor& t, const Composition& c) {
    if (c.weight() != static_cast<int>(t.size())) throw std::invalid_argument("composition weight differs from degree");
    std::vector<TensorElement> blocks;
    std::size_t at = 0;
    for (int part : c.parts) {
        blocks.push_back(TensorElement::pure(PureTensor(t.begin() + static_cast<long>(at), t.begin() + static_cast<long>(at + part))));
        at += static_cast<std::size_t>(part);
    }
    return blocks;
}

struct DescentTheoremReport {
    bool ok = true;
    int probes_checked = 0;
    bool word_sums_equal = false;  // left and right lifted sums equal as free elements
    std::string failure;
};

/// For every probe: the bracketed product along I's composition (left-nested
/// for the left variant, right-nested for the right one) equals
/// D o Q_I(D_{<=I}), and the two lift variants act identically.
inline DescentTheoremReport verify_descent_theorem(const BraidedAlgebra& spec, int n, const DescentSet& I,
                                                   LiftVariant variant, const std::vector<PureTensor>& probes) {
    if (probes.empty()) throw std::invalid_argument("verify_descent_theorem needs at least one probe");
    DescentTheoremReport report;
    const auto composition = subset_composition(I);
    const GvbElement lifted = descent_lift_sum(n, I, variant);
    const GvbElement other = descent_lift_sum(n, I, variant == LiftVariant::left ? LiftVariant::right : LiftVariant::left);
    report.word_sums_equal = lifted == other;
    const Bracketing bracketing = variant == LiftVariant::left ? Bracketing::left : Bracketing::right;
    for (const auto& probe : probes) {
        if (static_cast<int>(probe.size()) != n) throw std::invalid_argument("probe degree differs from n");
        const auto t = TensorElement::pure(probe);
        const auto product = iterated_product(spec, split_blocks(probe, composition), bracketing);
        const auto via_lift = delete_units(act(spec, lifted, t));
        ++report.probes_checked;
        if (product != via_lift) {
            report.ok = false;
            report.failure = "bracketed product differs from lifted action on " + to_string(probe) + ": " +
                             to_string(product) + " vs " + to_string(via_lift);
            return report;
        }
        const auto via_other = delete_units(act(spec, other, t));
        if (via_other != via_lift) {
            report.ok = false;
            report.failure = "left/right lifts act differently on " + to_string(probe);
            return report;
        }
    }
    return report;
}

}  // namespace braidlift
