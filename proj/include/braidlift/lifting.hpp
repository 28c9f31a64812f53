#pragma once

// Generalized Matsumoto-Tits lifts of permutations into K[GVB_n^+].
//
// The shuffle lift of a permutation is read off its bubble decomposition in
// the ambient S_n:
//
//   prod_{k = n-1 .. 1, t_k != 0} (b_{t_k} + [t_k + 1 != t_{k+1}] b_1 ... b_{t_k - 1} x_{t_k}) b_{t_k+1} ... b_k
//
// where t_{k+1} is the start of the literal next level (0 when that level is
// trivial or absent). The unit-pushing prefix b_1 ... b_{t-1} always starts
// at ambient position 1, also for shifted shuffles.

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "gvb_word.hpp"
#include "perm_sum.hpp"
#include "permutation.hpp"

namespace braidlift {

enum class LiftVariant { left, right };

inline const char* to_string(LiftVariant v) { return v == LiftVariant::left ? "left" : "right"; }

inline LiftVariant parse_variant(std::string_view s) {
    if (s == "left") return LiftVariant::left;
    if (s == "right") return LiftVariant::right;
    throw std::invalid_argument("unknown lift variant '" + std::string(s) + "'");
}

/// The shuffle-lift formula evaluated on p's ambient bubble decomposition,
/// with no membership check.
inline GvbElement lift_formula(const Permutation& p) {
    const int n = p.rank();
    const BubbleDecomposition bubble = bubble_decompose(p);
    GvbElement result = GvbElement::unit(n);
    for (int k = n - 1; k >= 1; --k) {
        const int t = bubble.start(k);
        if (t == 0) continue;
        GvbElement factor(n);
        Letters tail;
        for (int i = t + 1; i <= k; ++i) tail.push_back(GvbLetter::b(i));

        Letters plain{GvbLetter::b(t)};
        plain.insert(plain.end(), tail.begin(), tail.end());
        factor.add(plain, 1);

        if (t + 1 != bubble.start(k + 1)) {
            Letters pushed;
            for (int i = 1; i < t; ++i) pushed.push_back(GvbLetter::b(i));
            pushed.push_back(GvbLetter::x(t));
            pushed.insert(pushed.end(), tail.begin(), tail.end());
            factor.add(pushed, 1);
        }
        result = result * factor;
    }
    return result;
}

/// Q_{p,q}(s) for s in S_{p,q} (embedded in S_n); throws on non-shuffles.
inline GvbElement lift_shuffle(const Permutation& s, int p, int q) {
    if (!is_shuffle(s, p, q, 0)) {
        throw std::invalid_argument(to_string(s) + " is not a (" + std::to_string(p) + "," + std::to_string(q) +
                                    ")-shuffle");
    }
    return lift_formula(s);
}

/// Zero-extended Q_{p,q}: non-shuffles map to 0.
inline GvbElement lift_shuffle_extended(const Permutation& s, int p, int q) {
    if (!is_shuffle(s, p, q, 0)) return GvbElement(s.rank());
    return lift_formula(s);
}

inline GvbElement lift_shuffle_extended(const PermSum& x, int p, int q) {
    GvbElement r(x.rank());
    for (const auto& [s, c] : x.terms()) r += lift_shuffle_extended(s, p, q) * c;
    return r;
}

/// Q^{->shift}_{p,q}(s) for s in S_{p,q}^{up shift}.
inline GvbElement lift_shuffle_shifted(const Permutation& s, int p, int q, int shift) {
    if (!is_shuffle(s, p, q, shift)) {
        throw std::invalid_argument(to_string(s) + " is not a shifted (" + std::to_string(p) + "," +
                                    std::to_string(q) + ")-shuffle");
    }
    return lift_formula(s);
}

namespace detail {

inline GvbElement times_word(const GvbElement& lift, const Letters& w, const Rational& c) {
    return lift * GvbElement::word(GvbWord(lift.rank(), w), c);
}

/// s^{up l} inside the same S_n (s must fix the top l positions).
inline Permutation shift_in_place(const Permutation& s, int l) {
    const int n = s.rank();
    for (int x = n - l + 1; x <= n; ++x) {
        if (s(x) != x) throw std::invalid_argument("permutation cannot be shifted inside its rank");
    }
    std::vector<int> images = Permutation::identity(n).images();
    for (int x = 1; x <= n - l; ++x) images[static_cast<std::size_t>(x + l - 1)] = s(x) + l;
    return Permutation::from_images(std::move(images));
}

}  // namespace detail

/// M_{p,q}(s, tau): per word of tau with l = l_v, Q^{->l}_{p-l,q}(s) * word
/// when p - l > 0 and s in S_{p-l,q}^{up l}, else 0.
inline GvbElement m_map(int p, int q, const Permutation& s, const GvbElement& tau) {
    if (s.rank() != tau.rank()) throw std::invalid_argument("m_map rank mismatch");
    GvbElement r(s.rank());
    for (const auto& [w, c] : tau.terms()) {
        const int l = virtual_length(w);
        if (p - l > 0 && is_shuffle(s, p - l, q, l)) r += detail::times_word(lift_formula(s), w, c);
    }
    return r;
}

inline GvbElement m_map(int p, int q, const Permutation& s) { return m_map(p, q, s, GvbElement::unit(s.rank())); }

/// M'_{p,q} with the block starting after `base` positions: per word of tau
/// with l = l_v, Q(s^{up l}) * word when q - l > 0 and s in S_{p,q-l}^{up base},
/// else 0. The permutation is shifted by l before lifting.
inline GvbElement m_map_prime(int p, int q, const Permutation& s, const GvbElement& tau, int base = 0) {
    if (s.rank() != tau.rank()) throw std::invalid_argument("m_map_prime rank mismatch");
    GvbElement r(s.rank());
    for (const auto& [w, c] : tau.terms()) {
        const int l = virtual_length(w);
        if (q - l > 0 && is_shuffle(s, p, q - l, base)) {
            r += detail::times_word(lift_formula(detail::shift_in_place(s, l)), w, c);
        }
    }
    return r;
}

/// Q_I(p) (left: iterated M along descent_factorize) or Q'_I(p) (right:
/// iterated M' along descent_factorize_alt).
inline GvbElement lift_descent(const Permutation& p, const DescentSet& I, LiftVariant variant = LiftVariant::left) {
    const int n = p.rank();
    const auto& pos = I.positions;
    const int k = static_cast<int>(pos.size());
    auto at = [&](int l) { return l <= 0 ? 0 : (l > k ? n : pos[static_cast<std::size_t>(l - 1)]); };

    GvbElement tau = GvbElement::unit(n);
    if (variant == LiftVariant::left) {
        // factors = (sigma^k, ..., sigma^1); level l uses M_{i_l, i_{l+1} - i_l}.
        const auto factors = descent_factorize(p, I);
        for (int l = 1; l <= k; ++l) {
            const auto& sigma = factors[static_cast<std::size_t>(k - l)];
            tau = m_map(at(l), at(l + 1) - at(l), sigma, tau);
        }
    } else {
        // factors = (sigma'^1, ..., sigma'^k); level l uses M'^{up i_{l-1}}_{c_l, n - i_l}.
        const auto factors = descent_factorize_alt(p, I);
        for (int l = k; l >= 1; --l) {
            const auto& sigma = factors[static_cast<std::size_t>(l - 1)];
            tau = m_map_prime(at(l) - at(l - 1), n - at(l), sigma, tau, at(l - 1));
        }
    }
    return tau;
}

/// The generalized Matsumoto-Tits section Q(p) = Q_{1..n-1}(p).
inline GvbElement mt_section(const Permutation& p, LiftVariant variant = LiftVariant::left) {
    return lift_descent(p, DescentSet::full(p.rank()), variant);
}

inline GvbElement mt_section(const PermSum& x, LiftVariant variant = LiftVariant::left) {
    GvbElement r(x.rank());
    for (const auto& [p, c] : x.terms()) r += mt_section(p, variant) * c;
    return r;
}

/// Q_I(D_{<=I}) = sum of lifts over des_n(<= I).
inline GvbElement descent_lift_sum(int n, const DescentSet& I, LiftVariant variant = LiftVariant::left) {
    GvbElement r(n);
    for (const auto& p : enumerate_descent_class(n, I, DescentMode::leq)) r += lift_descent(p, I, variant);
    return r;
}

/// sum over S_{p,q} of Q_{p,q}(s), in rank p+q. Memoized.
inline const GvbElement& shuffle_lift_sum(int p, int q) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, GvbElement> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({p, q});
    if (it != cache.end()) return it->second;
    GvbElement r(p + q);
    for (const auto& s : enumerate_shuffles(p, q, 0, p + q)) r += lift_formula(s);
    return cache.emplace(std::pair{p, q}, std::move(r)).first->second;
}

/// Q_n = sum over S_n of Q(sigma). Memoized per (n, variant).
inline const GvbElement& total_symmetrization_element(int n, LiftVariant variant = LiftVariant::left) {
    if (n < 1) throw std::invalid_argument("total symmetrization needs n >= 1");
    static std::mutex mutex;
    static std::map<std::pair<int, LiftVariant>, GvbElement> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({n, variant});
    if (it != cache.end()) return it->second;
    GvbElement r = descent_lift_sum(n, DescentSet::full(n), variant);
    return cache.emplace(std::pair{n, variant}, std::move(r)).first->second;
}

}  // namespace braidlift
