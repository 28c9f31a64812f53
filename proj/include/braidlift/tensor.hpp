#pragma once

// Finitely supported rational combinations of pure basis tensors, possibly of
// mixed degrees. Slot value 0 is the adjoined unit; positive values index a
// basis of V. The empty sequence is the scalar 1.

#include <cstdint>
#include <map>
#include <sstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace braidlift {

using BasisIndex = std::uint32_t;
using PureTensor = std::vector<BasisIndex>;

/// Degree first, then lexicographic.
struct TensorOrder {
    bool operator()(const PureTensor& a, const PureTensor& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class TensorElement {
public:
    using Terms = std::map<PureTensor, Rational, TensorOrder>;

    TensorElement() = default;

    static TensorElement pure(PureTensor t, const Rational& c = 1) {
        TensorElement e;
        e.add(t, c);
        return e;
    }

    static TensorElement scalar(const Rational& c) { return pure({}, c); }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const PureTensor& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const PureTensor& t, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        for (const auto& [t, c] : o.terms_) add(t, -c);
        return *this;
    }
    TensorElement& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [t, c] : terms_) c *= s;
        return *this;
    }

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const Rational& s) { return a *= s; }
    friend TensorElement operator*(const Rational& s, TensorElement a) { return a *= s; }

    bool operator==(const TensorElement&) const = default;

    /// -1 for the zero element.
    int max_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }
    int min_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()); }
    bool is_homogeneous() const { return min_degree() == max_degree(); }

    /// The degree-d homogeneous part.
    TensorElement component(int d) const {
        TensorElement r;
        for (const auto& [t, c] : terms_)
            if (static_cast<int>(t.size()) == d) r.terms_.emplace(t, c);
        return r;
    }

    /// Homogeneous parts keyed by degree.
    std::map<int, TensorElement> components() const {
        std::map<int, TensorElement> out;
        for (const auto& [t, c] : terms_) out[static_cast<int>(t.size())].terms_.emplace(t, c);
        return out;
    }

    bool has_units() const {
        for (const auto& [t, c] : terms_)
            for (BasisIndex i : t)
                if (i == 0) return true;
        return false;
    }

private:
    Terms terms_;
};

/// Concatenation a (x) b, extended bilinearly.
inline TensorElement tensor(const TensorElement& a, const TensorElement& b) {
    TensorElement r;
    for (const auto& [u, c] : a.terms()) {
        for (const auto& [v, d] : b.terms()) {
            PureTensor w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.add(w, c * d);
        }
    }
    return r;
}

/// Top-degree homogeneous part for degree n.
inline TensorElement top_component(const TensorElement& t, int n) { return t.component(n); }

/// The deleting operator: erase every unit slot.
inline TensorElement delete_units(const TensorElement& t) {
    TensorElement r;
    for (const auto& [w, c] : t.terms()) {
        PureTensor kept;
        kept.reserve(w.size());
        for (BasisIndex i : w)
            if (i != 0) kept.push_back(i);
        r.add(kept, c);
    }
    return r;
}

/// "1 2 3" -> pure tensor y1 (x) y2 (x) y3; "" is the scalar 1.
inline PureTensor parse_pure_tensor(std::string_view text) {
    PureTensor out;
    std::string s(text);
    for (char& ch : s)
        if (ch == ',') ch = ' ';
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok.front() == 'y' || tok.front() == 'v') tok.erase(0, 1);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed basis index '" + tok + "'");
        }
        if (used != tok.size() || v < 0) throw std::invalid_argument("malformed basis index '" + tok + "'");
        out.push_back(static_cast<BasisIndex>(v));
    }
    return out;
}

/// "[1,2] - [2,1] + 3/2*[3]" (the inverse of to_string), a bare pure tensor
/// "1 2", or "0".
inline TensorElement parse_tensor_element(std::string_view text) {
    if (text.find('[') == std::string_view::npos) {
        const auto first = text.find_first_not_of(" \t");
        if (first != std::string_view::npos && text.substr(first, text.find_last_not_of(" \t") - first + 1) == "0") return {};
        return TensorElement::pure(parse_pure_tensor(text));
    }
    TensorElement out;
    std::size_t i = 0;
    Rational sign = 1;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (c == '+' || c == '-') {
            if (c == '-') sign = -sign;
            ++i;
        } else {
            const auto open = text.find('[', i);
            const auto close = text.find(']', i);
            if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
                throw std::invalid_argument("malformed tensor term near '" + std::string(text.substr(i)) + "'");
            }
            Rational coeff = 1;
            auto prefix = text.substr(i, open - i);
            if (const auto star = prefix.find('*'); star != std::string_view::npos) {
                coeff = parse_rational(prefix.substr(0, star));
                if (prefix.substr(star + 1).find_first_not_of(" \t") != std::string_view::npos) {
                    throw std::invalid_argument("unexpected text before '['");
                }
            } else if (prefix.find_first_not_of(" \t") != std::string_view::npos) {
                throw std::invalid_argument("unexpected text '" + std::string(prefix) + "' before '['");
            }
            out.add(parse_pure_tensor(text.substr(open + 1, close - open - 1)), sign * coeff);
            sign = 1;
            i = close + 1;
        }
    }
    return out;
}

inline std::string to_string(const PureTensor& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t[i]);
    }
    return out + "]";
}

inline std::string to_string(const TensorElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : x.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += to_string(t);
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const TensorElement& x) { return os << to_string(x); }

}  // namespace braidlift
