#pragma once

// JSON encodings for the public value types, and algebra lookup by builtin
// name or JSON file. Rationals are always exact strings.

#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braided_algebra.hpp"
#include "gvb_word.hpp"
#include "ideals.hpp"
#include "permutation.hpp"
#include "rational.hpp"
#include "tensor.hpp"

namespace braidlift {

using nlohmann::json;

inline json rational_json(const Rational& r) { return r.get_str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational string, got " + j.dump());
}

inline json to_json(const Permutation& p) { return p.images(); }
inline json to_json(const DescentSet& d) { return d.positions; }

inline json to_json(const GvbElement& x) {
    json out = json::array();
    for (const auto& [w, c] : x.terms()) out.push_back({{"word", word_to_string(w)}, {"coeff", rational_json(c)}});
    return out;
}

inline GvbElement gvb_element_from_json(int rank, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("GVB element must be a JSON array");
    GvbElement x(rank);
    for (const auto& t : j) {
        GvbWord w(rank, parse_letters(t.at("word").get<std::string>()));
        x.add(w.letters(), rational_from_json(t.at("coeff")));
    }
    return x;
}

inline json to_json(const TensorElement& t) {
    json terms = json::array();
    for (const auto& [w, c] : t.terms()) terms.push_back({{"word", w}, {"coeff", rational_json(c)}});
    return {{"terms", terms}};
}

inline TensorElement tensor_from_json(const json& j) try {
    TensorElement t;
    for (const auto& term : j.at("terms")) {
        PureTensor w;
        for (const auto& i : term.at("word")) {
            if (!i.is_number_integer() || i.get<long>() < 0) throw std::invalid_argument("tensor word entries must be non-negative integers");
            w.push_back(i.get<BasisIndex>());
        }
        t.add(w, rational_from_json(term.at("coeff")));
    }
    return t;
} catch (const json::exception& e) {
    throw std::invalid_argument("malformed tensor: " + std::string(e.what()));
}

inline json to_json(const RelationBasis& b) {
    json elements = json::array(), pivots = json::array();
    for (const auto& e : b.elements) elements.push_back(to_json(e));
    for (const auto& p : b.pivots) pivots.push_back(p);
    return {{"kind", b.kind == KernelKind::braid ? "braid" : "total"},
            {"window", b.window},
            {"max_degree", b.max_degree},
            {"dimension", b.dimension()},
            {"pivots", pivots},
            {"elements", elements}};
}

// ---------------------------------------------------------------------------
// Algebras

inline BraidedAlgebra algebra_from_json(const json& j, std::string name = "custom") try {
    std::optional<BasisIndex> dim;
    const auto& d = j.at("dim");
    if (d.is_string()) {
        if (d.get<std::string>() != "unbounded") throw std::invalid_argument("dim must be an integer or \"unbounded\"");
    } else {
        if (!d.is_number_integer() || d.get<long>() < 1) throw std::invalid_argument("dim must be a positive integer");
        dim = d.get<BasisIndex>();
    }
    auto check = [&](BasisIndex i) {
        if (i == 0 || (dim && i > *dim)) throw std::invalid_argument("basis index " + std::to_string(i) + " outside 1..dim");
        return i;
    };
    std::map<std::pair<BasisIndex, BasisIndex>, PairCombination> sigma;
    if (j.contains("sigma")) {
        for (const auto& e : j.at("sigma")) {
            PairCombination c;
            for (const auto& t : e.at("terms"))
                c.push_back({check(t.at("k").get<BasisIndex>()), check(t.at("l").get<BasisIndex>()), rational_from_json(t.at("c"))});
            sigma[{check(e.at("i").get<BasisIndex>()), check(e.at("j").get<BasisIndex>())}] = std::move(c);
        }
    }
    std::map<std::pair<BasisIndex, BasisIndex>, IndexCombination> mul;
    if (j.contains("m")) {
        for (const auto& e : j.at("m")) {
            IndexCombination c;
            for (const auto& t : e.at("terms")) c.push_back({check(t.at("k").get<BasisIndex>()), rational_from_json(t.at("c"))});
            mul[{check(e.at("i").get<BasisIndex>()), check(e.at("j").get<BasisIndex>())}] = std::move(c);
        }
    }
    return table_algebra(std::move(name), dim, std::move(sigma), std::move(mul));
} catch (const json::exception& e) {
    throw std::invalid_argument("malformed algebra: " + std::string(e.what()));
}

struct AlgebraOptions {
    BasisIndex dim = 3;                        // flip
    std::vector<std::vector<Rational>> q = {};  // diagonal; default {{1,2},{3,1}}
};

/// "hoffman", "flip", "flip_zero", "diagonal", or a path to a JSON file.
inline BraidedAlgebra resolve_algebra(const std::string& name, const AlgebraOptions& options = {}) {
    if (name == "hoffman") return hoffman_algebra();
    if (name == "flip_zero") return flip_zero_algebra();
    if (name == "flip") return flip_algebra(options.dim);
    if (name == "diagonal") {
        if (options.q.empty()) return diagonal_algebra({{Rational(1), Rational(2)}, {Rational(3), Rational(1)}});
        return diagonal_algebra(options.q);
    }
    const std::filesystem::path path(name);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("unknown algebra '" + name + "' (not a builtin, no such file)");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed algebra file: " + std::string(e.what()));
    }
    return algebra_from_json(j, path.stem().string());
}

/// "1,2;3,1" -> {{1,2},{3,1}}.
inline std::vector<std::vector<Rational>> parse_q_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find(';', start), text.size());
        std::vector<Rational> row;
        std::size_t at = start;
        while (at <= end) {
            const auto comma = std::min(text.find(',', at), end);
            row.push_back(parse_rational(text.substr(at, comma - at)));
            at = comma + 1;
        }
        rows.push_back(std::move(row));
        start = end + 1;
    }
    return rows;
}

}  // namespace braidlift
