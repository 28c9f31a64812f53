#pragma once

// Formal sums in the group algebra K[S_n].

#include <map>
#include <ostream>
#include <string>
#include <stdexcept>

#include "permutation.hpp"
#include "rational.hpp"

namespace braidlift {

class PermSum {
public:
    explicit PermSum(int n = 1) : n_(n) {}

    static PermSum single(const Permutation& p, const Rational& c = 1) {
        PermSum s(p.rank());
        s.add(p, c);
        return s;
    }

    int rank() const { return n_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Permutation& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Permutation& p, const Rational& c) {
        if (p.rank() != n_) throw std::invalid_argument("permutation rank mismatch in PermSum");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PermSum& operator+=(const PermSum& other) {
        if (other.n_ != n_) throw std::invalid_argument("rank mismatch in PermSum");
        for (const auto& [p, c] : other.terms_) add(p, c);
        return *this;
    }

    friend PermSum operator+(PermSum a, const PermSum& b) { return a += b; }

    friend PermSum operator*(const PermSum& a, const PermSum& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("rank mismatch in PermSum product");
        PermSum r(a.n_);
        for (const auto& [p, c] : a.terms_)
            for (const auto& [q, d] : b.terms_) r.add(p * q, c * d);
        return r;
    }

    bool operator==(const PermSum&) const = default;

private:
    int n_;
    std::map<Permutation, Rational> terms_;
};

inline PermSum perm_sum_multiply(const PermSum& a, const PermSum& b) { return a * b; }

/// S_{p,q}^{up shift} = sum of the shuffles, in K[S_n].
inline PermSum partial_symmetrizer(int p, int q, int shift, int n) {
    PermSum s(n);
    for (const auto& perm : enumerate_shuffles(p, q, shift, n)) s.add(perm, 1);
    return s;
}

/// D_{<=I} = sum over des_n(<= I).
inline PermSum descent_symmetrizer(int n, const DescentSet& I) {
    PermSum s(n);
    for (const auto& perm : enumerate_descent_class(n, I, DescentMode::leq)) s.add(perm, 1);
    return s;
}

inline std::string to_string(const PermSum& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [p, c] : x.terms()) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        if (abs(c) != 1) out += Rational(abs(c)).get_str() + "*";
        out += to_string(p);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const PermSum& x) { return os << to_string(x); }

}  // namespace braidlift
