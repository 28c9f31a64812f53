#include "cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidlift/braidlift.hpp"

namespace braidlift::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Common {
    std::string format = "text";
    std::string algebra = "hoffman";
    std::string variant = "left";
    unsigned dim = 3;
    std::string q;
    bool no_validate = false;
};

void add_format(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_variant(CLI::App* app, Common& c) {
    app->add_option("--variant", c.variant, "Lift variant")->check(CLI::IsMember({"left", "right"}));
}

void add_algebra(CLI::App* app, Common& c) {
    app->add_option("--algebra", c.algebra, "Builtin name (hoffman, flip, flip_zero, diagonal) or JSON file");
    app->add_option("--dim", c.dim, "Dimension of the flip algebra")->check(CLI::PositiveNumber);
    app->add_option("--q", c.q, "q-matrix of the diagonal algebra, rows split by ';' (e.g. \"1,2;3,1\")");
    app->add_flag("--no-validate", c.no_validate, "Skip the probe check of the braided-algebra axioms");
}

BraidedAlgebra load_algebra(const Common& c) {
    AlgebraOptions options;
    options.dim = c.dim;
    if (!c.q.empty()) options.q = parse_q_matrix(c.q);
    auto spec = resolve_algebra(c.algebra, options);
    if (!c.no_validate) require_valid(spec);
    return spec;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed integer '" + tok + "'");
        }
        if (used != tok.size()) throw UsageError("malformed integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<BasisIndex> parse_window(const std::string& text) {
    std::vector<BasisIndex> out;
    for (int v : parse_int_list(text)) {
        if (v <= 0) throw UsageError("window indices must be positive");
        out.push_back(static_cast<BasisIndex>(v));
    }
    if (out.empty()) throw UsageError("empty generator window");
    return out;
}

TensorElement read_tensor_input(const std::string& text) {
    auto t = parse_tensor_element(text);
    if (t.has_units()) throw UsageError("index 0 is reserved for the unit");
    return t;
}

void emit(std::ostream& out, const Common& c, const json& j, const std::string& text) {
    if (c.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << text << '\n';
    }
}

std::string factor_string(const std::vector<Permutation>& factors) {
    std::string s = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ", ";
        s += word_string(factors[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------

int cmd_lift(const Common& c, int n, const std::string& descents, std::ostream& out) {
    if (n < 1) throw UsageError("--n must be positive");
    const auto I = DescentSet::make(n, parse_int_list(descents));
    const auto variant = parse_variant(c.variant);
    const auto perms = enumerate_descent_class(n, I, DescentMode::leq);

    struct Row {
        Permutation p;
        std::vector<Permutation> factors;
        GvbElement lift;
    };
    std::vector<Row> rows;
    for (const auto& p : perms) {
        auto factors = I.positions.empty() ? std::vector<Permutation>{}
                       : variant == LiftVariant::left ? descent_factorize(p, I)
                                                      : descent_factorize_alt(p, I);
        rows.push_back({p, std::move(factors), lift_descent(p, I, variant)});
    }

    json j = {{"n", n}, {"descents", to_json(I)}, {"variant", to_string(variant)}, {"rows", json::array()}};
    for (const auto& r : rows) {
        json factors = json::array();
        for (const auto& f : r.factors) factors.push_back(to_json(f));
        j["rows"].push_back({{"permutation", to_json(r.p)},
                             {"word", word_string(r.p)},
                             {"factorization", factors},
                             {"lift", to_json(r.lift)}});
    }

    std::vector<std::array<std::string, 4>> cells = {{"permutation", "word", "factorization", "lift"}};
    for (const auto& r : rows) cells.push_back({to_string(r.p), word_string(r.p), factor_string(r.factors), to_string(r.lift)});
    std::array<std::size_t, 3> width{};
    for (const auto& row : cells)
        for (std::size_t k = 0; k < 3; ++k) width[k] = std::max(width[k], row[k].size());
    std::ostringstream text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text << '\n';
        for (std::size_t k = 0; k < 3; ++k) text << std::left << std::setw(static_cast<int>(width[k] + 2)) << cells[i][k];
        text << cells[i][3];
    }
    emit(out, c, j, text.str());
    return ok;
}

int cmd_mt_section(const Common& c, const std::string& perm, int n, std::ostream& out) {
    const auto p = parse_permutation(perm, n);
    const auto variant = parse_variant(c.variant);
    const auto lift = mt_section(p, variant);
    json j = {{"permutation", to_json(p)}, {"word", word_string(p)}, {"variant", to_string(variant)}, {"lift", to_json(lift)}};
    emit(out, c, j, to_string(lift));
    return ok;
}

int cmd_product(const Common& c, const std::string& left, const std::string& right, const std::string& kind,
                std::ostream& out) {
    const auto spec = load_algebra(c);
    const auto x = read_tensor_input(left), y = read_tensor_input(right);
    TensorElement r;
    if (kind == "quasi") r = qq_product(spec, x, y);
    else if (kind == "quantum") r = quantum_shuffle_product(spec, x, y);
    else r = shuffle_product(x, y);
    emit(out, c, to_json(r), to_string(r));
    return ok;
}

int cmd_symmetrize(const Common& c, const std::string& word, std::ostream& out) {
    const auto spec = load_algebra(c);
    const auto r = total_symmetrize(spec, read_tensor_input(word), parse_variant(c.variant));
    emit(out, c, to_json(r), to_string(r));
    return ok;
}

int cmd_kernel(const Common& c, const std::string& window, int degree, const std::string& kind, std::ostream& out) {
    const auto spec = load_algebra(c);
    if (degree < 1) throw UsageError("--degree must be positive");
    const auto basis = kind == "braid" ? kernel_braid_symmetrizer(spec, parse_window(window), degree)
                                       : kernel_total_symmetrization(spec, parse_window(window), degree,
                                                                     parse_variant(c.variant));
    std::ostringstream text;
    text << "dimension " << basis.dimension();
    std::size_t width = 0;
    for (const auto& p : basis.pivots) width = std::max(width, to_string(p).size());
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        text << '\n'
             << std::left << std::setw(static_cast<int>(width + 2)) << to_string(basis.pivots[i])
             << to_string(basis.elements[i]);
    }
    emit(out, c, to_json(basis), text.str());
    return ok;
}

int cmd_lift_relation(const Common& c, const std::string& file, const std::string& expr, const std::string& window,
                      std::ostream& out, std::ostream& err) {
    const auto spec = load_algebra(c);
    TensorElement xbar;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw UsageError("cannot open relation file '" + file + "'");
        json j;
        try {
            in >> j;
            xbar = tensor_from_json(j);
        } catch (const json::exception& e) {
            throw UsageError("malformed relation file: " + std::string(e.what()));
        }
    } else if (!expr.empty()) {
        xbar = read_tensor_input(expr);
    } else {
        throw UsageError("lift-relation needs --relation or --expr");
    }
    std::vector<BasisIndex> win;
    if (!window.empty()) win = parse_window(window);
    try {
        const auto x = lift_relation(spec, xbar, win, parse_variant(c.variant));
        emit(out, c, to_json(x), to_string(x));
        return ok;
    } catch (const Unliftable& e) {
        err << e.what() << '\n';
        if (c.format == "json") out << json{{"error", "unliftable"}, {"residual", to_json(e.residual())}}.dump(2) << '\n';
        return unliftable;
    }
}

struct SuiteResult {
    std::string name;
    CheckReport report;
    bool skipped = false;
};

int cmd_verify(const Common& c, const std::string& suite, int n, std::ostream& out) {
    static const std::vector<std::string> names = {"gvb-rel",         "rank3",        "cor1",        "assoc", "degeneration",
                                                   "tits-projection", "shuffle-sums", "cardinality", "oracle"};
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("unknown suite '" + suite + "'");
    }
    if (n < 1) throw UsageError("--n must be positive");
    const auto spec = load_algebra(c);
    const auto gens = spec.generators(3);

    std::vector<SuiteResult> results;
    auto run = [&](const std::string& name, const std::function<CheckReport()>& f) {
        if (suite == "all" || suite == name) results.push_back({name, f()});
    };
    run("gvb-rel", [&] { return check_relations_suite(spec, std::max(n, 3)); });
    run("rank3", [&] { return check_rank3_identities(spec); });
    run("cor1", [&] { return check_variant_agreement(spec, n); });
    run("assoc", [&] { return check_associativity(spec, gens, 2, 100); });
    run("degeneration", [&] { return check_degeneration(spec, gens, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}); });
    run("tits-projection", [&] { return check_tits_projection(std::max(n, 2)); });
    run("shuffle-sums", [&] { return check_shuffle_sum_identity(std::max(n, 3)); });
    run("cardinality", [&] { return check_cardinality(n); });
    run("oracle", [&] { return check_oracle(spec, 3, std::max(n, 2)); });
    for (auto& r : results)
        if (r.name == "oracle" && r.report.checked == 0) r.skipped = true;

    bool all_ok = true;
    json j = {{"algebra", spec.name()}, {"n", n}, {"suites", json::array()}};
    std::ostringstream text;
    for (const auto& r : results) {
        all_ok = all_ok && r.report.ok;
        j["suites"].push_back({{"name", r.name},
                               {"ok", r.report.ok},
                               {"skipped", r.skipped},
                               {"checked", r.report.checked},
                               {"failure", r.report.failure}});
        if (text.tellp() > 0) text << '\n';
        if (r.skipped) text << "SKIP " << r.name << " (no independent product for '" << spec.name() << "')";
        else if (r.report.ok) text << "PASS " << r.name << " (" << r.report.checked << " checks)";
        else text << "FAIL " << r.name << ": " << r.report.failure;
    }
    j["ok"] = all_ok;
    emit(out, c, j, text.str());
    return all_ok ? ok : validation_failure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Matsumoto-Tits lifts and quantum quasi-shuffle products", "braidlift"};
    app.require_subcommand(1);

    Common common;
    int n = 3, degree = 2;
    std::string descents, perm, left, right, kind = "quasi", word, window, kernel_kind = "total", relation, expr,
                                                                    suite = "all";
    window = "1,2,3";

    auto* lift = app.add_subcommand("lift", "Lift every permutation of des_n(<= I)");
    lift->add_option("--n", n, "Rank")->required();
    lift->add_option("--descents", descents, "Descent set I, e.g. 1,3");
    add_variant(lift, common);
    add_format(lift, common);

    auto* mt = app.add_subcommand("mt-section", "Generalized Matsumoto-Tits section of one permutation");
    mt->add_option("--perm", perm, "One-line array [2,3,1] or word s2 s1")->required();
    mt->add_option("--n", n, "Rank (for words)");
    add_variant(mt, common);
    add_format(mt, common);

    auto* product = app.add_subcommand("product", "Product of two tensors");
    product->add_option("--left", left, "Left factor, e.g. \"1 2\" or \"[1,2] - [2,1]\"")->required();
    product->add_option("--right", right, "Right factor")->required();
    product->add_option("--kind", kind, "quasi (quantum quasi-shuffle), quantum or shuffle")
        ->check(CLI::IsMember({"quasi", "quantum", "shuffle"}));
    add_algebra(product, common);
    add_format(product, common);

    auto* sym = app.add_subcommand("symmetrize", "Total symmetrization of a tensor");
    sym->add_option("--word", word, "Tensor, e.g. \"1 2\"")->required();
    add_algebra(sym, common);
    add_variant(sym, common);
    add_format(sym, common);

    auto* kernel = app.add_subcommand("kernel", "Kernel slice of a symmetrizer");
    kernel->add_option("--window", window, "Generator indices, e.g. 1,2,3");
    kernel->add_option("--degree", degree, "Maximal degree");
    kernel->add_option("--kind", kernel_kind, "total (QS) or braid (T_n)")->check(CLI::IsMember({"total", "braid"}));
    add_algebra(kernel, common);
    add_variant(kernel, common);
    add_format(kernel, common);

    auto* lr = app.add_subcommand("lift-relation", "Lift a relation of the braid symmetrizer to a kernel element of QS");
    std::string lr_window;
    lr->add_option("--relation", relation, "JSON file holding the tensor");
    lr->add_option("--expr", expr, "Tensor expression, e.g. \"[1,2] - [2,1]\"");
    lr->add_option("--window", lr_window, "Extra generator indices for the correction");
    add_algebra(lr, common);
    add_variant(lr, common);
    add_format(lr, common);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "gvb-rel, rank3, cor1, assoc, degeneration, tits-projection, shuffle-sums, cardinality, oracle or all");
    verify->add_option("--n", n, "Rank");
    add_algebra(verify, common);
    add_format(verify, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }

    try {
        if (lift->parsed()) return cmd_lift(common, n, descents, out);
        if (mt->parsed()) return cmd_mt_section(common, perm, n, out);
        if (product->parsed()) return cmd_product(common, left, right, kind, out);
        if (sym->parsed()) return cmd_symmetrize(common, word, out);
        if (kernel->parsed()) return cmd_kernel(common, window, degree, kernel_kind, out);
        if (lr->parsed()) return cmd_lift_relation(common, relation, expr, lr_window, out, err);
        if (verify->parsed()) return cmd_verify(common, suite, n, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return validation_failure;
    } catch (const Unliftable& e) {
        err << "error: " << e.what() << '\n';
        return unliftable;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
    return bad_input;
}

}  // namespace braidlift::cli
