#include "hyperpath/cli.hpp"

#include "hyperpath/bounds.hpp"
#include "hyperpath/coloring.hpp"
#include "hyperpath/coloring_io.hpp"
#include "hyperpath/enumeration.hpp"
#include "hyperpath/errors.hpp"
#include "hyperpath/higher_order.hpp"
#include "hyperpath/path_engine.hpp"
#include "hyperpath/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace hyperpath {

namespace {

using nlohmann::json;

constexpr std::uint64_t default_seed = 20240611;

struct Common {
    std::size_t budget = 0;
    std::string format = "json";
    std::string output;
};

std::size_t default_budget() {
    if (const char* env = std::getenv("HYPERPATH_BUDGET")) {
        try {
            std::size_t pos = 0;
            const unsigned long long v = std::stoull(env, &pos);
            if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw InputError("HYPERPATH_BUDGET must be a positive integer");
    }
    return WorkBudget::default_entries;
}

json vertices_json(const std::vector<int>& v) {
    json out = json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

GridBox make_box(const std::vector<int>& extents, int n, int d, const char* what) {
    if (!extents.empty()) return GridBox(extents);
    if (n < 1 || d < 1) throw InputError(std::string(what) + " needs --n and --d (or --extents)");
    return GridBox(n, d);
}

void emit(std::ostream& out, const Common& c, const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (c.output.empty())
        out << text;
    else
        write_file_atomic(c.output, text);
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], std::min<std::size_t>(r[i].size(), 48));
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::string cell = r[i].size() > 48 ? r[i].substr(0, 45) + "..." : r[i];
            out << std::left << std::setw(static_cast<int>(width[i]) + 2) << cell;
        }
        out << "\n";
    }
}

struct CountArgs {
    std::string kind = "partitions";
    int d = 0, n = 0, k = 0;
    std::vector<int> extents;
};

int cmd_count(const CountArgs& a, const Common& c, std::ostream& out) {
    const WorkBudget budget{c.budget};
    json j{{"kind", a.kind}};
    if (a.kind == "partitions") {
        const GridBox box = make_box(a.extents, a.n, a.d, "count --kind partitions");
        j["extents"] = box.extents();
        j["value"] = to_decimal(count_downsets(box, budget));
    } else if (a.kind == "dedekind") {
        if (a.d < 1) throw InputError("count --kind dedekind needs --d");
        j["d"] = a.d;
        j["value"] = to_decimal(count_downsets(GridBox(2, a.d), budget));
    } else if (a.kind == "rho") {
        if (a.k < 2) throw InputError("count --kind rho needs --k >= 2");
        const GridBox box = make_box(a.extents, a.n, a.d == 0 ? 2 : a.d, "count --kind rho");
        j["k"] = a.k;
        j["extents"] = box.extents();
        j["value"] = to_decimal(count_rho(a.k, box, budget));
    } else if (a.kind == "rank-profile") {
        if (a.n < 1) throw InputError("count --kind rank-profile needs --n");
        RankProfile p;
        if (a.d > 0) {
            p = s_profile(a.n, a.d);
            j["poset"] = "grid-sum";
            j["d"] = a.d;
        } else {
            p = lnn_rank_sizes(a.n);
            j["poset"] = "young";
        }
        j["n"] = a.n;
        j["offset"] = p.offset;
        json sizes = json::array();
        for (const auto& s : p.sizes) sizes.push_back(to_decimal(s));
        j["sizes"] = sizes;
        const auto it = std::max_element(p.sizes.begin(), p.sizes.end());
        j["max"] = to_decimal(*it);
        j["argmax"] = p.offset + static_cast<int>(it - p.sizes.begin());
        j["total"] = to_decimal(p.total());
    } else {
        throw InputError("unknown count kind: " + a.kind);
    }
    if (c.format == "table") {
        std::vector<std::vector<std::string>> rows{{"field", "value"}};
        for (auto it = j.begin(); it != j.end(); ++it)
            rows.push_back({it.key(), it->is_string() ? it->get<std::string>() : it->dump()});
        print_table(out, rows);
        return exit_ok;
    }
    emit(out, c, j);
    return exit_ok;
}

struct FormulaArgs {
    std::string name = "p1";
    int n = -1;
    std::vector<int> dims;
};

int cmd_formula(const FormulaArgs& a, const Common& c, std::ostream& out) {
    json j{{"formula", a.name}};
    auto nonneg = [](int v, const char* what) {
        if (v < 0) throw InputError(std::string(what) + " must be nonnegative");
        return static_cast<unsigned>(v);
    };
    if (a.name == "p1") {
        j["n"] = a.n;
        j["value"] = to_decimal(p1_closed(nonneg(a.n, "--n")));
    } else if (a.name == "macmahon") {
        if (a.n < 1) throw InputError("macmahon needs --n >= 1");
        j["n"] = a.n;
        j["value"] = to_decimal(macmahon(static_cast<unsigned>(a.n)));
    } else if (a.name == "rectangular") {
        j["dims"] = a.dims;
        if (a.dims.size() == 2)
            j["value"] = to_decimal(p1_rect(nonneg(a.dims[0], "a"), nonneg(a.dims[1], "b")));
        else if (a.dims.size() == 3)
            j["value"] = to_decimal(macmahon_rect(nonneg(a.dims[0], "a"), nonneg(a.dims[1], "b"), nonneg(a.dims[2], "c")));
        else
            throw InputError("rectangular needs --dims a b or --dims a b c");
    } else {
        throw InputError("unknown formula: " + a.name);
    }
    emit(out, c, j);
    return exit_ok;
}

struct ConstructArgs {
    std::string family;
    int q = 0, n = 0, k = 0, d = 2;
    std::vector<int> extents;
    std::string file;
};

int cmd_construct(const ConstructArgs& a, const Common& c, std::ostream& out) {
    const WorkBudget budget{c.budget};
    std::optional<EdgeColoring> col;
    if (a.family == "graph") {
        col = color_graph_lower(make_box(a.extents, a.n, a.q, "construct graph"), budget);
    } else if (a.family == "3uniform") {
        const GridBox box = make_box(a.extents, a.n, a.q, "construct 3uniform");
        col = color_3uniform_lower(box, budget);
    } else if (a.family == "kuniform") {
        if (a.k < 2) throw InputError("construct kuniform needs --k >= 2");
        col = color_kuniform_lower(a.k, make_box(a.extents, a.n, a.d, "construct kuniform"), budget);
    } else {
        throw InputError("unknown family: " + a.family);
    }
    json summary{{"family", a.family}, {"k", col->k()}, {"q", col->q()}, {"N", col->N()}, {"edges", col->edge_count()}};
    if (a.file.empty()) {
        emit(out, c, coloring_to_json(*col));
        return exit_ok;
    }
    write_coloring(a.file, *col);
    summary["output"] = a.file;
    out << summary.dump(2) << "\n";
    return exit_ok;
}

struct VerifyArgs {
    std::string input;
    int n = 0;
    bool certificate = true;
};

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
    if (a.n < 1) throw InputError("verify needs --n >= 1");
    const WorkBudget budget{c.budget};
    const EdgeColoring col = read_coloring(a.input);
    const LongestPaths lp = longest_mono(col, budget);
    json j;
    j["k"] = col.k();
    j["q"] = col.q();
    j["N"] = col.N();
    j["n"] = a.n;
    j["per_color_max"] = lp.max_length;
    json wit = json::array();
    for (const auto& w : lp.witnesses) wit.push_back(json{{"color", w.color}, {"vertices", vertices_json(w.vertices)}});
    j["witnesses"] = wit;
    j["extension_property"] = check_extension_property(col, budget);
    const bool long_path = std::any_of(lp.max_length.begin(), lp.max_length.end(), [&](int m) { return m >= a.n; });
    j["extremal"] = !long_path;
    bool ok = !long_path && j["extension_property"].get<bool>();
    if (a.certificate && col.k() >= 2) {
        const Certificate cert = injectivity_certificate(col, a.n, budget);
        if (cert.distinct) {
            j["certificate"] = "distinct";
        } else if (cert.path) {
            j["certificate"] = json{{"path", json{{"color", cert.path->color}, {"vertices", vertices_json(cert.path->vertices)}}}};
        } else {
            j["certificate"] = json{{"collision", {cert.collision->first + 1, cert.collision->second + 1}}};
            ok = false;
        }
    }
    if (c.format == "table") {
        std::vector<std::vector<std::string>> rows{{"color", "max_length"}};
        for (std::size_t i = 0; i < lp.max_length.size(); ++i)
            rows.push_back({std::to_string(i + 1), std::to_string(lp.max_length[i])});
        print_table(out, rows);
    } else {
        emit(out, c, j);
    }
    return ok ? exit_ok : exit_violated;
}

int cmd_transitive(const std::string& input, const Common& c, std::ostream& out) {
    const EdgeColoring col = read_coloring(input);
    const TransitivityResult r = is_transitive(col, WorkBudget{c.budget});
    json j{{"k", col.k()}, {"q", col.q()}, {"N", col.N()}, {"transitive", r.transitive}};
    if (!r.transitive) {
        j["witness"] = vertices_json(r.witness);
        j["witness_checked"] = violates_transitivity(col, r.witness);
    }
    emit(out, c, j);
    return r.transitive ? exit_ok : exit_violated;
}

struct SearchArgs {
    int k = 0, q = 0, n = 0, max_N = 0;
    std::uint64_t max_nodes = SearchBudget{}.max_nodes;
    double max_seconds = SearchBudget{}.max_seconds;
    std::string mode = "auto";
    std::string file;
};

int cmd_search(const SearchArgs& a, const Common& c, std::ostream& out) {
    if (a.k < 1 || a.q < 1 || a.n < 1 || a.max_N < 1) throw InputError("search needs --k, --q, --n, --max-N >= 1");
    if (a.max_nodes == 0 || a.max_seconds <= 0) throw InputError("search budgets must be positive");
    SearchMode mode = SearchMode::automatic;
    if (a.mode == "propagation")
        mode = SearchMode::propagation;
    else if (a.mode == "backtracking")
        mode = SearchMode::backtracking;
    else if (a.mode != "auto")
        throw InputError("unknown search mode: " + a.mode);
    const SearchResult r = exact_ramsey(a.k, a.q, a.n, a.max_N, SearchBudget{a.max_nodes, a.max_seconds}, mode);
    json j{{"k", a.k}, {"q", a.q}, {"n", a.n}, {"status", to_string(r.status)}, {"colorable", r.colorable},
           {"nodes", r.nodes}, {"seconds", r.seconds}};
    if (r.value) j["value"] = *r.value;
    if (r.extremal && !a.file.empty()) {
        write_coloring(a.file, *r.extremal);
        j["extremal_coloring_file"] = a.file;
    }
    emit(out, c, j);
    return r.status == SearchStatus::budget_exhausted ? exit_budget : exit_ok;
}

struct BoundsArgs {
    int max_d = 4, max_n = 4, max_k = 5;
    bool no_search = false;
};

int cmd_bounds(const BoundsArgs& a, const Common& c, std::ostream& out, bool budget_given) {
    SuiteConfig cfg;
    cfg.max_d = a.max_d;
    cfg.max_n = a.max_n;
    cfg.max_k = a.max_k;
    if (budget_given) cfg.budget = WorkBudget{c.budget};
    cfg.run_search = !a.no_search;
    const auto entries = run_inequality_suite(cfg);
    const bool failed = std::any_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.verdict == Verdict::fail; });
    if (c.format == "table") {
        std::vector<std::vector<std::string>> rows{{"name", "verdict", "lhs", "rhs", "params"}};
        for (const auto& e : entries) rows.push_back({e.name, to_string(e.verdict), e.lhs, e.rhs, e.params.dump()});
        print_table(out, rows);
    } else {
        emit(out, c, suite_json(entries));
    }
    return failed ? exit_violated : exit_ok;
}

struct UniverseArgs {
    int k = 0, d = 2, n = 0;
    std::vector<int> extents;
};

int cmd_universe(const UniverseArgs& a, const Common& c, std::ostream& out) {
    const Universe u = Universe::build(a.k, make_box(a.extents, a.n, a.d, "universe"), WorkBudget{c.budget});
    emit(out, c, universe_json(u, a.k));
    return exit_ok;
}

struct PigeonholeArgs {
    int k = 3, q = 2, n = 2, trials = 10000;
    std::uint64_t seed = default_seed;
};

// Random q-colorings of K^k_N with N = rho_{k,q}(n) + 1; each must contain
// a monochromatic monotone path of length n.
int cmd_pigeonhole(const PigeonholeArgs& a, const Common& c, std::ostream& out) {
    if (a.k < 2 || a.q < 1 || a.n < 1 || a.trials < 0) throw InputError("pigeonhole needs k >= 2, q >= 1, n >= 1");
    const WorkBudget budget{c.budget};
    const BigInt rho = count_rho(a.k, a.q, a.n, budget);
    if (rho > 5000) throw BudgetExceeded("pigeonhole: vertex count too large for random trials");
    const int N = rho.convert_to<int>() + 1;
    const std::uint64_t m = subset_count(N, a.k);
    budget.check(m, "pigeonhole coloring");
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<int> pick(1, a.q);
    int with_path = 0;
    for (int t = 0; t < a.trials; ++t) {
        std::vector<std::uint8_t> colors(m);
        for (auto& x : colors) x = static_cast<std::uint8_t>(pick(rng));
        const EdgeColoring col(a.k, a.q, N, std::move(colors));
        const Certificate cert = injectivity_certificate(col, a.n, budget);
        if (cert.path && is_monochromatic_path(col, *cert.path) && cert.path->length(a.k) >= a.n) ++with_path;
    }
    json j{{"k", a.k}, {"q", a.q}, {"n", a.n}, {"N", N}, {"trials", a.trials}, {"seed", a.seed},
           {"with_path", with_path}, {"all_paths", with_path == a.trials}};
    emit(out, c, j);
    return with_path == a.trials ? exit_ok : exit_violated;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration, constructions and verification for Ramsey numbers of monotone paths"};
    app.require_subcommand(1);
    Common common;
    bool budget_given = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--budget", common.budget, "work budget in table entries (default $HYPERPATH_BUDGET or 10^7)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", common.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--output", common.output, "write the report to this file");
    };

    CountArgs count;
    auto* s_count = app.add_subcommand("count", "count partitions, rho, Dedekind numbers or rank profiles");
    s_count->add_option("--kind", count.kind)->check(CLI::IsMember({"partitions", "rho", "dedekind", "rank-profile"}));
    s_count->add_option("--d", count.d);
    s_count->add_option("--n", count.n);
    s_count->add_option("--k", count.k);
    s_count->add_option("--extents", count.extents, "per-axis extents of a rectangular box");
    add_common(s_count);

    FormulaArgs formula;
    auto* s_formula = app.add_subcommand("formula", "closed formulas");
    s_formula->add_option("--name", formula.name)->check(CLI::IsMember({"p1", "macmahon", "rectangular"}));
    s_formula->add_option("--n", formula.n);
    s_formula->add_option("--dims", formula.dims);
    add_common(s_formula);

    ConstructArgs construct;
    auto* s_construct = app.add_subcommand("construct", "build an extremal coloring");
    s_construct->add_option("--family", construct.family)->required()->check(CLI::IsMember({"graph", "3uniform", "kuniform"}));
    s_construct->add_option("--q", construct.q);
    s_construct->add_option("--n", construct.n);
    s_construct->add_option("--k", construct.k);
    s_construct->add_option("--d", construct.d, "dimension of the k-uniform universe");
    s_construct->add_option("--extents", construct.extents);
    s_construct->add_option("--file,-o", construct.file, "coloring file to write");
    add_common(s_construct);

    VerifyArgs verify;
    auto* s_verify = app.add_subcommand("verify", "longest monochromatic monotone paths of a coloring");
    s_verify->add_option("--input,-i", verify.input)->required();
    s_verify->add_option("--n", verify.n)->required();
    s_verify->add_flag("!--no-certificate", verify.certificate, "skip the down-set label certificate");
    add_common(s_verify);

    std::string trans_input;
    auto* s_trans = app.add_subcommand("transitive", "check transitivity of a coloring");
    s_trans->add_option("--input,-i", trans_input)->required();
    add_common(s_trans);

    SearchArgs search;
    auto* s_search = app.add_subcommand("search", "exact N_k(q,n) by exhaustive search");
    s_search->add_option("--k", search.k)->required();
    s_search->add_option("--q", search.q)->required();
    s_search->add_option("--n", search.n)->required();
    s_search->add_option("--max-N", search.max_N)->required();
    s_search->add_option("--max-nodes", search.max_nodes);
    s_search->add_option("--max-seconds", search.max_seconds);
    s_search->add_option("--mode", search.mode)->check(CLI::IsMember({"auto", "propagation", "backtracking"}));
    s_search->add_option("--file,-o", search.file, "write the extremal coloring here");
    add_common(s_search);

    BoundsArgs bounds;
    auto* s_bounds = app.add_subcommand("bounds", "run the inequality suite");
    s_bounds->add_option("--max-d", bounds.max_d);
    s_bounds->add_option("--max-n", bounds.max_n);
    s_bounds->add_option("--max-k", bounds.max_k);
    s_bounds->add_flag("--no-search", bounds.no_search);
    add_common(s_bounds);

    UniverseArgs universe;
    auto* s_universe = app.add_subcommand("universe", "dump the order-k universe");
    s_universe->add_option("--k", universe.k)->required();
    s_universe->add_option("--d", universe.d);
    s_universe->add_option("--n", universe.n);
    s_universe->add_option("--extents", universe.extents);
    add_common(s_universe);

    PigeonholeArgs pigeon;
    auto* s_pigeon = app.add_subcommand("pigeonhole", "random colorings one vertex past the extremal size");
    s_pigeon->add_option("--k", pigeon.k);
    s_pigeon->add_option("--q", pigeon.q);
    s_pigeon->add_option("--n", pigeon.n);
    s_pigeon->add_option("--trials", pigeon.trials);
    s_pigeon->add_option("--seed", pigeon.seed);
    add_common(s_pigeon);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    try {
        for (auto* sub : app.get_subcommands())
            if (sub->count("--budget") > 0) budget_given = true;
        if (!budget_given) common.budget = default_budget();

        if (s_count->parsed()) return cmd_count(count, common, out);
        if (s_formula->parsed()) return cmd_formula(formula, common, out);
        if (s_construct->parsed()) return cmd_construct(construct, common, out);
        if (s_verify->parsed()) return cmd_verify(verify, common, out);
        if (s_trans->parsed()) return cmd_transitive(trans_input, common, out);
        if (s_search->parsed()) return cmd_search(search, common, out);
        if (s_bounds->parsed()) return cmd_bounds(bounds, common, out, budget_given);
        if (s_universe->parsed()) return cmd_universe(universe, common, out);
        if (s_pigeon->parsed()) return cmd_pigeonhole(pigeon, common, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const BudgetExceeded& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return exit_budget;
    } catch (const InvariantError& e) {
        err << "property violated: " << e.what() << "\n";
        return exit_violated;
    } catch (const PreconditionError& e) {
        err << "property violated: " << e.what() << "\n";
        return exit_violated;
    }
    return exit_input;
}

}  // namespace hyperpath
