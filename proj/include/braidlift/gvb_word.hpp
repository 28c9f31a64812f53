#pragma once

// Words in the generators of the generalized virtual braid monoid GVB_n^+ and
// their rational linear combinations.
//
// Braid generators sigma_i print as "b<i>", virtual generators xi_i as "x<i>".
// (Kauffman-Lambropoulou use the opposite naming for the two families.)
// A word is read left to right as written; under a representation the
// rightmost letter acts first. Words are free: no monoid relation is applied.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "perm_sum.hpp"
#include "permutation.hpp"
#include "rational.hpp"

namespace braidlift {

enum class LetterKind : std::uint8_t { braid, virtual_ };

struct GvbLetter {
    LetterKind kind = LetterKind::braid;
    int index = 1;

    static GvbLetter b(int i) { return {LetterKind::braid, i}; }
    static GvbLetter x(int i) { return {LetterKind::virtual_, i}; }

    bool is_braid() const { return kind == LetterKind::braid; }
    bool is_virtual() const { return kind == LetterKind::virtual_; }

    auto operator<=>(const GvbLetter&) const = default;
    bool operator==(const GvbLetter&) const = default;
};

inline std::string to_string(const GvbLetter& l) {
    return (l.is_braid() ? "b" : "x") + std::to_string(l.index);
}

using Letters = std::vector<GvbLetter>;

/// Shorter words first, then lexicographic on (kind, index).
struct WordOrder {
    bool operator()(const Letters& a, const Letters& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct WordLengths {
    int braid = 0;    // l_s
    int virtual_ = 0; // l_v
    int total = 0;    // l
    bool operator==(const WordLengths&) const = default;
};

class GvbWord {
public:
    GvbWord() = default;
    explicit GvbWord(int rank, Letters letters = {}) : rank_(rank), letters_(std::move(letters)) {
        if (rank_ < 1) throw std::invalid_argument("word rank must be positive");
        for (const auto& l : letters_) {
            if (l.index < 1 || l.index > rank_ - 1) {
                throw std::invalid_argument("letter " + braidlift::to_string(l) + " exceeds rank " +
                                            std::to_string(rank_));
            }
        }
    }

    int rank() const { return rank_; }
    const Letters& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    WordLengths lengths() const {
        WordLengths w;
        for (const auto& l : letters_) (l.is_braid() ? w.braid : w.virtual_)++;
        w.total = w.braid + w.virtual_;
        return w;
    }

    friend GvbWord operator*(const GvbWord& a, const GvbWord& b) {
        if (a.rank_ != b.rank_) throw std::invalid_argument("word rank mismatch");
        Letters l = a.letters_;
        l.insert(l.end(), b.letters_.begin(), b.letters_.end());
        return GvbWord(a.rank_, std::move(l));
    }

    bool operator==(const GvbWord&) const = default;

private:
    int rank_ = 1;
    Letters letters_;
};

inline WordLengths word_lengths(const GvbWord& w) { return w.lengths(); }

inline int virtual_length(const Letters& l) {
    return static_cast<int>(std::count_if(l.begin(), l.end(), [](const GvbLetter& g) { return g.is_virtual(); }));
}

inline std::string word_to_string(const Letters& letters) {
    if (letters.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ' ';
        out += to_string(letters[i]);
    }
    return out;
}

inline std::string to_string(const GvbWord& w) { return word_to_string(w.letters()); }

/// Parses "b1 x2 b1", "b1x2b1" or "e"/"" into letters.
inline Letters parse_letters(std::string_view text) {
    Letters out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '*')) ++i;
    };
    skip();
    if (text.substr(i) == "e") return out;
    while (i < text.size()) {
        const char c = text[i];
        LetterKind kind;
        if (c == 'b' || c == 's') kind = LetterKind::braid;
        else if (c == 'x') kind = LetterKind::virtual_;
        else throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in word");
        ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (start == i) throw std::invalid_argument("letter without index in word");
        out.push_back({kind, std::stoi(std::string(text.substr(start, i - start)))});
        skip();
    }
    return out;
}

class GvbElement {
public:
    using Terms = std::map<Letters, Rational, WordOrder>;

    explicit GvbElement(int rank = 1) : rank_(rank) {
        if (rank_ < 1) throw std::invalid_argument("element rank must be positive");
    }

    static GvbElement unit(int rank) { return word(GvbWord(rank)); }

    static GvbElement word(const GvbWord& w, const Rational& c = 1) {
        GvbElement e(w.rank());
        e.add(w.letters(), c);
        return e;
    }

    static GvbElement parse(int rank, std::string_view word_text) {
        return word(GvbWord(rank, parse_letters(word_text)));
    }

    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Letters& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Letters& w, const Rational& c) {
        if (c == 0) return;
        for (const auto& l : w) {
            if (l.index < 1 || l.index > rank_ - 1) throw std::invalid_argument("letter exceeds element rank");
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GvbElement& operator+=(const GvbElement& o) {
        check_rank(o);
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    GvbElement& operator-=(const GvbElement& o) {
        check_rank(o);
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    GvbElement& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend GvbElement operator+(GvbElement a, const GvbElement& b) { return a += b; }
    friend GvbElement operator-(GvbElement a, const GvbElement& b) { return a -= b; }
    friend GvbElement operator*(GvbElement a, const Rational& s) { return a *= s; }
    friend GvbElement operator*(const Rational& s, GvbElement a) { return a *= s; }

    /// Concatenation product, extended bilinearly.
    friend GvbElement operator*(const GvbElement& a, const GvbElement& b) {
        a.check_rank(b);
        GvbElement r(a.rank_);
        for (const auto& [u, c] : a.terms_) {
            for (const auto& [v, d] : b.terms_) {
                Letters w = u;
                w.insert(w.end(), v.begin(), v.end());
                r.add(w, c * d);
            }
        }
        return r;
    }

    bool operator==(const GvbElement&) const = default;

private:
    void check_rank(const GvbElement& o) const {
        if (o.rank_ != rank_) throw std::invalid_argument("element rank mismatch");
    }

    int rank_;
    Terms terms_;
};

inline GvbElement element_multiply(const GvbElement& a, const GvbElement& b) { return a * b; }
inline GvbElement element_add(const GvbElement& a, const GvbElement& b) { return a + b; }
inline GvbElement element_scale(const GvbElement& a, const Rational& s) { return a * s; }

inline std::string to_string(const GvbElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += word_to_string(w);
        first = false;
    }
    return out;
}

/// Parses "b2 b1 + b1 x2 b1 - 3/2*x1" (terms separated by '+'/'-').
inline GvbElement parse_element(int rank, std::string_view text) {
    GvbElement out(rank);
    std::size_t i = 0;
    Rational sign = 1;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size()) break;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
        std::string_view term = text.substr(i, j - i);
        Rational coeff = 1;
        if (auto star = term.find('*'); star != std::string_view::npos) {
            coeff = parse_rational(term.substr(0, star));
            term = term.substr(star + 1);
        }
        auto last = term.find_last_not_of(' ');
        term = term.substr(0, last == std::string_view::npos ? 0 : last + 1);
        if (term == "0") {
            i = j;
            continue;
        }
        out.add(GvbWord(rank, parse_letters(term)).letters(), sign * coeff);
        sign = 1;
        i = j;
    }
    return out;
}

/// i_k: every letter index increased by k, into rank new_rank.
inline GvbElement shift(const GvbElement& x, int k, int new_rank) {
    if (k < 0) throw std::invalid_argument("negative shift");
    GvbElement r(new_rank);
    for (const auto& [w, c] : x.terms()) {
        Letters s = w;
        for (auto& l : s) {
            l.index += k;
            if (l.index > new_rank - 1) throw std::invalid_argument("shifted letter exceeds new rank");
        }
        r.add(s, c);
    }
    return r;
}

/// alpha~: kill every word containing a virtual letter.
inline GvbElement project_alpha(const GvbElement& x) {
    GvbElement r(x.rank());
    for (const auto& [w, c] : x.terms()) {
        if (virtual_length(w) == 0) r.add(w, c);
    }
    return r;
}

/// beta~: braid words to permutations, b_i |-> s_i.
inline PermSum project_beta(const GvbElement& x) {
    PermSum r(x.rank());
    for (const auto& [w, c] : x.terms()) {
        Permutation p = Permutation::identity(x.rank());
        for (const auto& l : w) {
            if (l.is_virtual()) {
                throw std::invalid_argument("project_beta: virtual letter " + to_string(l) + " present");
            }
            p = p * Permutation::simple(l.index, x.rank());
        }
        r.add(p, c);
    }
    return r;
}

/// Matsumoto-Tits section T_p, read off the bubble reduced word.
inline GvbWord tits_section(const Permutation& p) {
    Letters l;
    for (int i : reduced_word(p)) l.push_back(GvbLetter::b(i));
    return GvbWord(p.rank(), std::move(l));
}

inline GvbElement tits_section(const PermSum& s) {
    GvbElement r(s.rank());
    for (const auto& [p, c] : s.terms()) r.add(tits_section(p).letters(), c);
    return r;
}

/// T_n = sum of T_s over S_n.
inline GvbElement braid_symmetrizer(int n) {
    GvbElement r(n);
    for (const auto& p : all_permutations(n)) r.add(tits_section(p).letters(), 1);
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const GvbElement& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const GvbWord& w) { return os << to_string(w); }

}  // namespace braidlift
