#pragma once

// Type-A combinatorics: permutations in one-line notation, descent sets,
// compositions, shuffles, bubble decompositions and descent factorizations.
//
// Product convention: (a * b)(x) = b(a(x)), i.e. the left factor is applied
// first. Under this convention the word s_{i1} s_{i2} ... s_{il} is the
// product s_{i1} * s_{i2} * ... * s_{il}, and s_1 * s_2 = [3,1,2] is a
// (2,1)-shuffle.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidlift {

class Permutation {
public:
    Permutation() = default;

    /// Identity of S_n.
    static Permutation identity(int n) {
        if (n < 1) throw std::invalid_argument("permutation rank must be positive");
        Permutation p;
        p.images_.resize(static_cast<std::size_t>(n));
        std::iota(p.images_.begin(), p.images_.end(), 1);
        return p;
    }

    /// From one-line notation (values 1..n).
    static Permutation from_images(std::vector<int> images) {
        const int n = static_cast<int>(images.size());
        if (n < 1) throw std::invalid_argument("permutation rank must be positive");
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
                throw std::invalid_argument("one-line array is not a bijection of {1..n}");
            }
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
        Permutation p;
        p.images_ = std::move(images);
        return p;
    }

    /// The simple transposition s_i = (i, i+1) in S_n.
    static Permutation simple(int i, int n) {
        if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
        Permutation p = identity(n);
        std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
        return p;
    }

    /// Product s_{w[0]} * s_{w[1]} * ... in S_n.
    static Permutation from_word(const std::vector<int>& word, int n) {
        Permutation p = identity(n);
        for (int i : word) p = p * simple(i, n);
        return p;
    }

    /// Longest element w_0.
    static Permutation longest(int n) {
        Permutation p = identity(n);
        std::reverse(p.images_.begin(), p.images_.end());
        return p;
    }

    int rank() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }

    /// sigma(x), 1-based.
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i] != static_cast<int>(i) + 1) return false;
        }
        return true;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) {
            r.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
        }
        return r;
    }

    /// a * b applies a first: (a * b)(x) = b(a(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("permutation rank mismatch");
        Permutation r;
        r.images_.resize(a.images_.size());
        for (std::size_t i = 0; i < a.images_.size(); ++i) {
            r.images_[i] = b(a.images_[i]);
        }
        return r;
    }

    /// Number of inversions, i.e. the Coxeter length.
    int length() const {
        int count = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                if (images_[i] > images_[j]) ++count;
        return count;
    }

    /// Image under i_k : S_m -> S_n, sigma |-> sigma^{up k}.
    Permutation shifted(int k, int new_rank) const {
        if (k < 0 || k + rank() > new_rank) throw std::invalid_argument("shift exceeds ambient rank");
        Permutation r = identity(new_rank);
        for (int x = 1; x <= rank(); ++x) r.images_[static_cast<std::size_t>(x + k - 1)] = (*this)(x) + k;
        return r;
    }

    /// Same permutation viewed in a larger symmetric group (fixing the tail).
    Permutation embedded(int new_rank) const { return shifted(0, new_rank); }

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

inline std::string to_string(const Permutation& p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.images().size(); ++i) {
        if (i) os << ',';
        os << p.images()[i];
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Descent sets and compositions

struct DescentSet {
    int n = 1;
    std::vector<int> positions;  // strictly increasing, within 1..n-1

    static DescentSet make(int n, std::vector<int> positions) {
        std::sort(positions.begin(), positions.end());
        if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
            throw std::invalid_argument("descent positions must be distinct");
        }
        for (int i : positions) {
            if (i < 1 || i > n - 1) throw std::invalid_argument("descent position outside 1..n-1");
        }
        return DescentSet{n, std::move(positions)};
    }

    static DescentSet full(int n) {
        DescentSet d{n, {}};
        for (int i = 1; i < n; ++i) d.positions.push_back(i);
        return d;
    }

    bool contains(int i) const { return std::binary_search(positions.begin(), positions.end(), i); }

    bool subset_of(const DescentSet& other) const {
        return std::includes(other.positions.begin(), other.positions.end(), positions.begin(),
                             positions.end());
    }

    bool operator==(const DescentSet&) const = default;
};

inline std::string to_string(const DescentSet& d) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < d.positions.size(); ++i) {
        if (i) os << ',';
        os << d.positions[i];
    }
    os << ']';
    return os.str();
}

/// {i : p^{-1}(i) > p^{-1}(i+1)}.
inline DescentSet descent_set(const Permutation& p) {
    const Permutation inv = p.inverse();
    DescentSet d{p.rank(), {}};
    for (int i = 1; i < p.rank(); ++i) {
        if (inv(i) > inv(i + 1)) d.positions.push_back(i);
    }
    return d;
}

struct Composition {
    std::vector<int> parts;

    static Composition make(std::vector<int> parts) {
        if (parts.empty()) throw std::invalid_argument("composition must have at least one part");
        for (int c : parts) {
            if (c < 1) throw std::invalid_argument("composition parts must be positive");
        }
        return Composition{std::move(parts)};
    }

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }

    bool operator==(const Composition&) const = default;
};

/// phi(c_1..c_{k+1}) = {c_1, c_1+c_2, ..., c_1+...+c_k}.
inline DescentSet composition_subset(const Composition& c) {
    DescentSet d{c.weight(), {}};
    int partial = 0;
    for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) {
        partial += c.parts[i];
        d.positions.push_back(partial);
    }
    return d;
}

/// Inverse of composition_subset.
inline Composition subset_composition(const DescentSet& d) {
    Composition c;
    int previous = 0;
    for (int i : d.positions) {
        c.parts.push_back(i - previous);
        previous = i;
    }
    c.parts.push_back(d.n - previous);
    return c;
}

// ---------------------------------------------------------------------------
// Shuffles and descent classes

/// Membership in S_{p,q}^{up shift} inside S_n: the permutation fixes every
/// position outside [shift+1, shift+p+q] and its inverse is increasing on the
/// two blocks.
inline bool is_shuffle(const Permutation& s, int p, int q, int shift = 0) {
    const int n = s.rank();
    if (p < 0 || q < 0 || shift < 0 || shift + p + q > n) return false;
    const Permutation inv = s.inverse();
    for (int x = 1; x <= n; ++x) {
        if ((x <= shift || x > shift + p + q) && s(x) != x) return false;
    }
    for (int y = shift + 1; y < shift + p; ++y)
        if (inv(y) > inv(y + 1)) return false;
    for (int y = shift + p + 1; y < shift + p + q; ++y)
        if (inv(y) > inv(y + 1)) return false;
    return true;
}

/// Every permutation of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

/// S_{p,q}^{up shift} embedded in S_n, in lexicographic one-line order.
/// Built directly from the choice of which window slots receive the first
/// block, so the result has binomial(p+q, p) elements.
inline std::vector<Permutation> enumerate_shuffles(int p, int q, int shift, int n) {
    if (p < 0 || q < 0 || shift < 0 || shift + p + q > n) {
        throw std::invalid_argument("shuffle window exceeds ambient rank");
    }
    std::vector<Permutation> out;
    const int w = p + q;
    // mask[j] == 1 means window slot j holds a value from the first block.
    std::vector<int> mask(static_cast<std::size_t>(w), 0);
    std::fill(mask.begin(), mask.begin() + p, 1);
    std::sort(mask.begin(), mask.end());
    do {
        // inverse images: the first-block values 1..p land, in order, on the
        // slots flagged 1; the second-block values on slots flagged 0.
        std::vector<int> inv = Permutation::identity(n).images();
        int a = 0, b = 0;
        for (int j = 0; j < w; ++j) {
            const int slot = shift + j + 1;
            if (mask[static_cast<std::size_t>(j)]) {
                inv[static_cast<std::size_t>(shift + a)] = slot;
                ++a;
            } else {
                inv[static_cast<std::size_t>(shift + p + b)] = slot;
                ++b;
            }
        }
        out.push_back(Permutation::from_images(inv).inverse());
    } while (std::next_permutation(mask.begin(), mask.end()));
    std::sort(out.begin(), out.end());
    return out;
}

enum class DescentMode { exact, leq };

/// des_n(I) (exact) or des_n(<= I) (leq), lexicographic one-line order.
inline std::vector<Permutation> enumerate_descent_class(int n, const DescentSet& I, DescentMode mode) {
    if (I.n != n) throw std::invalid_argument("descent set rank mismatch");
    std::vector<Permutation> out;
    for (auto& p : all_permutations(n)) {
        const DescentSet d = descent_set(p);
        if (mode == DescentMode::exact ? d == I : d.subset_of(I)) out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bubble decomposition

/// starts[k] = t_k for k = 1..n-1 (index 0 unused); t_k = 0 marks a trivial
/// level, otherwise sigma^{(k)} = s_{t_k} s_{t_k+1} ... s_k.
struct BubbleDecomposition {
    int n = 1;
    std::vector<int> starts;

    int start(int k) const {
        if (k < 1 || k > n - 1) return 0;
        return starts[static_cast<std::size_t>(k)];
    }

    /// Generator indices of the reduced word sigma^{(n-1)} ... sigma^{(1)}.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        for (int k = n - 1; k >= 1; --k) {
            const int t = start(k);
            if (t == 0) continue;
            for (int i = t; i <= k; ++i) word.push_back(i);
        }
        return word;
    }

    Permutation factor(int k) const {
        const int t = start(k);
        Permutation f = Permutation::identity(n);
        if (t == 0) return f;
        for (int i = t; i <= k; ++i) f = f * Permutation::simple(i, n);
        return f;
    }

    Permutation product() const {
        Permutation p = Permutation::identity(n);
        for (int k = n - 1; k >= 1; --k) p = p * factor(k);
        return p;
    }
};

inline BubbleDecomposition bubble_decompose(const Permutation& p) {
    BubbleDecomposition b{p.rank(), std::vector<int>(static_cast<std::size_t>(p.rank()), 0)};
    Permutation rest = p;
    for (int k = p.rank() - 1; k >= 1; --k) {
        // rest = f * rest' with f in S_{k,1} and rest' fixing k+1; f(t) = k+1
        // forces t = rest^{-1}(k+1).
        const int t = rest.inverse()(k + 1);
        if (t == k + 1) continue;
        b.starts[static_cast<std::size_t>(k)] = t;
        rest = b.factor(k).inverse() * rest;
    }
    return b;
}

inline std::vector<int> reduced_word(const Permutation& p) { return bubble_decompose(p).reduced_word(); }

/// "e" or "s2 s3 s1".
inline std::string word_string(const Permutation& p) {
    const auto w = reduced_word(p);
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += 's' + std::to_string(w[i]);
    }
    return out;
}

/// Parses "[2,4,1,3]" (rank from the array) or a generator word
/// "s1 s3" / "s3s2s1" / "e" in S_n.
inline Permutation parse_permutation(std::string_view text, int n) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw std::invalid_argument("empty permutation");
    if (s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unterminated one-line array '" + s + "'");
        std::vector<int> images;
        std::istringstream is(s.substr(1, s.size() - 2));
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed one-line entry '" + tok + "'");
            }
            if (used != tok.size()) throw std::invalid_argument("malformed one-line entry '" + tok + "'");
            images.push_back(v);
        }
        return Permutation::from_images(std::move(images));
    }
    if (s == "e") return Permutation::identity(n);
    std::vector<int> word;
    std::size_t at = 0;
    while (at < s.size()) {
        if (s[at] != 's') throw std::invalid_argument("expected 's<i>' in '" + std::string(text) + "'");
        std::size_t end = at + 1;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == at + 1) throw std::invalid_argument("missing generator index in '" + std::string(text) + "'");
        word.push_back(std::stoi(s.substr(at + 1, end - at - 1)));
        at = end;
    }
    return Permutation::from_word(word, n);
}

// ---------------------------------------------------------------------------
// Descent factorizations

namespace detail {

/// Splits p (fixing everything above `top`) as a * rest, where a is a
/// (m, top-m)-shuffle and rest fixes every position above m.
inline std::pair<Permutation, Permutation> split_upper_block(const Permutation& p, int m, int top) {
    const int n = p.rank();
    const Permutation inv = p.inverse();
    std::vector<int> lower;
    for (int y = 1; y <= m; ++y) lower.push_back(inv(y));
    std::sort(lower.begin(), lower.end());
    std::vector<int> a_inv = Permutation::identity(n).images();
    for (int y = 1; y <= m; ++y) a_inv[static_cast<std::size_t>(y - 1)] = lower[static_cast<std::size_t>(y - 1)];
    for (int y = m + 1; y <= top; ++y) a_inv[static_cast<std::size_t>(y - 1)] = inv(y);
    const Permutation a = Permutation::from_images(a_inv).inverse();
    return {a, a.inverse() * p};
}

/// Splits p (fixing everything at or below `shift`) as a * rest, where a is a
/// (c, n-shift-c)-shuffle shifted by `shift` and rest also fixes shift+1..shift+c.
inline std::pair<Permutation, Permutation> split_lower_block(const Permutation& p, int shift, int c) {
    const int n = p.rank();
    const Permutation inv = p.inverse();
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    std::vector<int> a_inv = Permutation::identity(n).images();
    for (int y = shift + 1; y <= shift + c; ++y) {
        a_inv[static_cast<std::size_t>(y - 1)] = inv(y);
        used[static_cast<std::size_t>(inv(y))] = true;
    }
    int next = shift + c + 1;
    for (int slot = shift + 1; slot <= n; ++slot) {
        if (used[static_cast<std::size_t>(slot)]) continue;
        a_inv[static_cast<std::size_t>(next - 1)] = slot;
        ++next;
    }
    const Permutation a = Permutation::from_images(a_inv).inverse();
    return {a, a.inverse() * p};
}

inline void require_descents_within(const Permutation& p, const DescentSet& I) {
    if (I.n != p.rank()) throw std::invalid_argument("descent set rank mismatch");
    if (!descent_set(p).subset_of(I)) {
        throw std::invalid_argument("descent set of " + to_string(p) + " is not contained in " + to_string(I));
    }
}

}  // namespace detail

/// (sigma^k, ..., sigma^1) with sigma^l in S_{c_1+..+c_l, c_{l+1}} and
/// sigma^k * ... * sigma^1 = p.
inline std::vector<Permutation> descent_factorize(const Permutation& p, const DescentSet& I) {
    detail::require_descents_within(p, I);
    std::vector<Permutation> factors;
    Permutation rest = p;
    int top = p.rank();
    for (auto it = I.positions.rbegin(); it != I.positions.rend(); ++it) {
        auto [a, r] = detail::split_upper_block(rest, *it, top);
        factors.push_back(std::move(a));
        rest = std::move(r);
        top = *it;
    }
    return factors;
}

/// (sigma'^1, ..., sigma'^k) with sigma'^l in
/// S_{c_l, c_{l+1}+..+c_{k+1}}^{up c_1+..+c_{l-1}} and sigma'^1 * ... * sigma'^k = p.
inline std::vector<Permutation> descent_factorize_alt(const Permutation& p, const DescentSet& I) {
    detail::require_descents_within(p, I);
    std::vector<Permutation> factors;
    Permutation rest = p;
    int shift = 0;
    for (int position : I.positions) {
        auto [a, r] = detail::split_lower_block(rest, shift, position - shift);
        factors.push_back(std::move(a));
        rest = std::move(r);
        shift = position;
    }
    return factors;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const DescentSet& d) { return os << to_string(d); }

}  // namespace braidlift
