// polymat — command-line front end for computing stability invariants of
// powers of monomial ideals.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 budget exhaustion, 4 other error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <cctype>

#include <CLI11.hpp>
#include <json.hpp>

#include "polymat/decomposition.hpp"
#include "polymat/families.hpp"
#include "polymat/homology.hpp"
#include "polymat/io.hpp"
#include "polymat/stability.hpp"
#include "polymat/structure.hpp"
#include "polymat/verify.hpp"

namespace {

using namespace polymat;
using nlohmann::json;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty()) parts.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current.push_back(c);
        }
    }
    if (!current.empty()) parts.push_back(current);
    return parts;
}

std::vector<int> split_ints(const std::string& text) {
    std::vector<int> out;
    for (const auto& part : split_list(text)) out.push_back(std::stoi(part));
    return out;
}

std::string read_source(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

MonomialIdeal load_ideal(const std::string& path) {
    return parse_ideal(read_source(path));
}

std::string prime_text(int n, std::uint64_t mask) {
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (int v : mask_to_vars_one_based(mask)) {
        if (!first) out << ',';
        first = false;
        out << 'x' << v;
    }
    (void)n;
    out << ')';
    return out.str();
}

json primes_json(const AssociatedPrimes& ass) {
    json out = json::array();
    for (auto mask : ass.primes) out.push_back(mask_to_vars_one_based(mask));
    return out;
}

struct IdealOptions {
    std::string file;
    bool as_json = false;
};

void add_ideal_options(CLI::App* cmd, IdealOptions& opts) {
    cmd->add_option("file", opts.file, "ideal file in the text format (default: stdin)");
    cmd->add_flag("--json", opts.as_json, "emit JSON");
}

int run_info(const IdealOptions& opts) {
    MonomialIdeal ideal = load_ideal(opts.file);
    std::ostringstream out;
    if (ideal.is_zero()) {
        if (opts.as_json)
            out << json{{"n", ideal.dim()}, {"generators", 0}, {"zero", true}}.dump() << '\n';
        else
            out << "zero ideal in " << ideal.dim() << " variables\n";
        std::cout << out.str();
        return 0;
    }

    SupportGcd sg = support_and_gcd(ideal);
    PolymatroidalResult poly = is_polymatroidal(ideal);
    bool matroidal = poly.ok && ideal.is_squarefree();
    LinearRelationGraph graph = linear_relation_graph(ideal);
    std::optional<int> ell;
    if (poly.ok) ell = analytic_spread_unchecked(ideal);

    std::vector<int> degrees;
    for (const auto& g : ideal.generators())
        if (degrees.empty() || degrees.back() != g.degree()) degrees.push_back(g.degree());

    if (opts.as_json) {
        json j;
        j["n"] = ideal.dim();
        j["generators"] = ideal.size();
        j["degrees"] = degrees;
        j["squarefree"] = ideal.is_squarefree();
        j["polymatroidal"] = poly.ok;
        j["matroidal"] = matroidal;
        j["support"] = mask_to_vars_one_based(sg.support);
        j["full_supported"] = sg.full;
        j["gcd"] = format_monomial(sg.gcd);
        j["gamma"] = json::parse(graph_json(graph));
        j["ell"] = ell ? json(*ell) : json(nullptr);
        out << j.dump() << '\n';
    } else {
        out << "ring dimension: " << ideal.dim() << '\n';
        out << "generators: " << ideal.size() << " (degree";
        if (degrees.size() == 1)
            out << ' ' << degrees.front();
        else {
            out << "s";
            for (int d : degrees) out << ' ' << d;
        }
        out << (ideal.is_squarefree() ? ", squarefree" : "") << ")\n";
        out << "support: " << mask_to_vars_one_based(sg.support).size() << " variables"
            << (sg.full ? " (full)" : "") << '\n';
        out << "gcd: " << format_monomial(sg.gcd) << '\n';
        out << "polymatroidal: " << (poly.ok ? "yes" : "no");
        if (matroidal) out << " (matroidal)";
        if (!poly.ok && poly.witness) {
            if (poly.witness->kind == ExchangeWitness::Kind::NotEquigenerated)
                out << " (mixed generator degrees)";
            else
                out << " (exchange fails for " << format_monomial(poly.witness->u) << " vs "
                    << format_monomial(poly.witness->v) << " at x" << poly.witness->var_one_based << ')';
        }
        out << '\n';
        out << "linear relation graph: " << graph.vertex_count() << " vertices, " << graph.edges.size()
            << " edges, " << graph.component_count()
            << (graph.component_count() == 1 ? " component\n" : " components\n");
        if (ell) out << "analytic spread: " << *ell << '\n';
    }
    std::cout << out.str();
    return 0;
}

int run_ass(const IdealOptions& opts, int t, std::size_t budget) {
    MonomialIdeal ideal = load_ideal(opts.file);
    MonomialIdeal target = power(ideal, t);
    AssociatedPrimes ass;
    if (is_polymatroidal(target).ok) {
        ass = ass_polymatroidal_fast(target);
    } else {
        DecompositionBudget db;
        if (budget > 0) db.max_nodes = budget;
        ass = associated_primes(target, db);
    }
    std::ostringstream out;
    if (opts.as_json) {
        out << json{{"t", t}, {"ass", primes_json(ass)}, {"contains_maximal", ass.contains_maximal}}.dump()
            << '\n';
    } else {
        for (auto mask : ass.primes) out << prime_text(ideal.dim(), mask) << '\n';
    }
    std::cout << out.str();
    return 0;
}

int run_depth(const IdealOptions& opts, int t, bool want_betti, std::size_t budget) {
    MonomialIdeal ideal = load_ideal(opts.file);
    MonomialIdeal target = power(ideal, t);
    HomologyBudget hb;
    hb.max_generators = 64;
    if (budget > 0) hb.max_cost = budget;

    std::ostringstream out;
    if (want_betti) {
        BettiTable table = betti_table(target, hb);
        if (opts.as_json) {
            out << betti_json(table) << '\n';
        } else {
            out << "pd: " << table.pd << "\ndepth: " << table.depth << '\n';
            for (const auto& entry : table.entries)
                out << "beta_" << entry.i << '(' << format_monomial(entry.a) << ") = " << entry.rank << '\n';
        }
        std::cout << out.str();
        return 0;
    }

    int depth = 0;
    std::string method;
    LinearQuotientsReport lq = linear_quotients_q(target);
    if (lq.linear) {
        depth = target.dim() - lq.q - 1;
        method = "linear-quotients";
    } else {
        depth = depth_oracle(target, hb);
        method = "homology";
    }
    if (opts.as_json)
        out << json{{"t", t}, {"depth", depth}, {"method", method}}.dump() << '\n';
    else
        out << depth << '\n';
    std::cout << out.str();
    return 0;
}

int run_stab(const IdealOptions& opts, int max_power, bool want_astab) {
    MonomialIdeal ideal = load_ideal(opts.file);
    StabilityOptions options;
    options.max_power = max_power;
    StabilityReport report = stability_report(ideal, options);
    std::ostringstream out;
    if (opts.as_json) {
        out << report_json(report) << '\n';
    } else {
        auto value = want_astab ? report.astab : report.dstab;
        const char* name = want_astab ? "astab" : "dstab";
        if (value)
            out << name << " = " << *value;
        else
            out << name << " unstabilized within max power " << max_power;
        if (report.certified)
            out << " (certified, ell = " << report.ell.value_or(0) << ")";
        else
            out << " (budget-limited)";
        out << '\n';
    }
    std::cout << out.str();
    return 0;
}

int run_gamma(const IdealOptions& opts) {
    MonomialIdeal ideal = load_ideal(opts.file);
    LinearRelationGraph graph = linear_relation_graph(ideal);
    std::ostringstream out;
    if (opts.as_json) {
        out << graph_json(graph) << '\n';
    } else {
        out << "vertices:";
        for (int v : mask_to_vars_one_based(graph.vertices)) out << " x" << v;
        out << "\nedges:";
        for (auto [a, b] : graph.edges) out << " {x" << (a + 1) << ",x" << (b + 1) << '}';
        out << "\ncomponents:";
        for (auto mask : graph.components) out << ' ' << prime_text(ideal.dim(), mask);
        out << '\n';
    }
    std::cout << out.str();
    return 0;
}

int run_decompose(const IdealOptions& opts, std::size_t budget) {
    MonomialIdeal ideal = load_ideal(opts.file);
    DecompositionBudget db;
    if (budget > 0) db.max_nodes = budget;
    auto comps = irreducible_decomposition(ideal, db);
    AssociatedPrimes ass = associated_primes(ideal, db);
    std::ostringstream out;
    if (opts.as_json) {
        out << decomposition_json(comps, ass) << '\n';
    } else {
        for (const auto& comp : comps) {
            out << '(';
            bool first = true;
            for (auto [var, exp] : comp.bounds) {
                if (!first) out << ',';
                first = false;
                out << 'x' << (var + 1);
                if (exp > 1) out << '^' << exp;
            }
            out << ")\n";
        }
        out << "ass:";
        for (auto mask : ass.primes) out << ' ' << prime_text(ideal.dim(), mask);
        out << '\n';
    }
    std::cout << out.str();
    return 0;
}

int run_localize(const IdealOptions& opts, const std::vector<int>& vars) {
    MonomialIdeal ideal = load_ideal(opts.file);
    MonomialIdeal loc = localize(ideal, MonomialPrime::of_vars(ideal.dim(), vars));
    std::cout << (opts.as_json ? ideal_json(loc) + "\n" : format_ideal(loc));
    return 0;
}

int run_power(const IdealOptions& opts, int t) {
    MonomialIdeal ideal = load_ideal(opts.file);
    MonomialIdeal result = power(ideal, t);
    std::cout << (opts.as_json ? ideal_json(result) + "\n" : format_ideal(result));
    return 0;
}

void emit_family(const std::vector<MonomialIdeal>& ideals, bool as_json) {
    std::ostringstream out;
    if (as_json) {
        json j;
        j["ideals"] = json::array();
        for (const auto& ideal : ideals) j["ideals"].push_back(json::parse(ideal_json(ideal)));
        out << j.dump() << '\n';
    } else {
        bool first = true;
        for (const auto& ideal : ideals) {
            if (!first) out << '\n';
            first = false;
            out << format_ideal(ideal);
        }
    }
    std::cout << out.str();
}

int run_verify(const std::vector<std::string>& checks, int max_power, bool as_json,
               const std::string& witness_dir) {
    VerifyConfig config;
    config.max_power = max_power;
    config.only = checks;
    auto results = run_suite(config);
    if (!witness_dir.empty()) {
        std::filesystem::create_directories(witness_dir);
        for (const auto& result : results) {
            for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
                std::ofstream file(std::filesystem::path(witness_dir) /
                                   (result.id + "-" + std::to_string(i) + ".ideal"));
                file << result.witnesses[i];
            }
        }
    }
    std::cout << (as_json ? suite_json(results) + "\n" : suite_table(results));
    return suite_failed(results) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability invariants of powers of monomial ideals"};
    app.require_subcommand(1);

    IdealOptions info_opts;
    add_ideal_options(app.add_subcommand("info", "summarize an ideal"), info_opts);

    IdealOptions ass_opts;
    int ass_t = 1;
    std::size_t ass_budget = 0;
    auto* ass_cmd = app.add_subcommand("ass", "associated primes of a power");
    add_ideal_options(ass_cmd, ass_opts);
    ass_cmd->add_option("-t,--power", ass_t, "power to inspect")->check(CLI::PositiveNumber);
    ass_cmd->add_option("--budget", ass_budget, "decomposition node budget");

    IdealOptions depth_opts;
    int depth_t = 1;
    bool depth_betti = false;
    std::size_t depth_budget = 0;
    auto* depth_cmd = app.add_subcommand("depth", "depth of R/I^t");
    add_ideal_options(depth_cmd, depth_opts);
    depth_cmd->add_option("-t,--power", depth_t, "power to inspect")->check(CLI::PositiveNumber);
    depth_cmd->add_flag("--betti", depth_betti, "emit the multigraded Betti table");
    depth_cmd->add_option("--budget", depth_budget, "homology cost budget");

    IdealOptions astab_opts;
    int astab_max = 10;
    auto* astab_cmd = app.add_subcommand("astab", "index of Ass-stability");
    add_ideal_options(astab_cmd, astab_opts);
    astab_cmd->add_option("--max-power", astab_max, "horizon for uncertified inputs")->check(CLI::PositiveNumber);

    IdealOptions dstab_opts;
    int dstab_max = 10;
    auto* dstab_cmd = app.add_subcommand("dstab", "index of depth stability");
    add_ideal_options(dstab_cmd, dstab_opts);
    dstab_cmd->add_option("--max-power", dstab_max, "horizon for uncertified inputs")->check(CLI::PositiveNumber);

    IdealOptions gamma_opts;
    add_ideal_options(app.add_subcommand("gamma", "linear relation graph"), gamma_opts);

    IdealOptions decompose_opts;
    std::size_t decompose_budget = 0;
    auto* decompose_cmd = app.add_subcommand("decompose", "irredundant irreducible decomposition");
    add_ideal_options(decompose_cmd, decompose_opts);
    decompose_cmd->add_option("--budget", decompose_budget, "decomposition node budget");

    IdealOptions localize_opts;
    std::string localize_vars;
    auto* localize_cmd = app.add_subcommand("localize", "monomial localization at a prime");
    add_ideal_options(localize_cmd, localize_opts);
    localize_cmd->add_option("--vars", localize_vars, "comma-separated 1-based variables generating the prime")
        ->required();

    IdealOptions power_opts;
    int power_t = 1;
    auto* power_cmd = app.add_subcommand("power", "minimalized power I^t");
    add_ideal_options(power_cmd, power_opts);
    power_cmd->add_option("-t,--power", power_t, "exponent")->required()->check(CLI::PositiveNumber);

    int ver_n = 0, ver_d = 0;
    std::string ver_caps;
    bool ver_json = false;
    auto* ver_cmd = app.add_subcommand("veronese", "ideal of Veronese type");
    ver_cmd->add_option("n", ver_n, "ring dimension")->required();
    ver_cmd->add_option("d", ver_d, "degree")->required();
    ver_cmd->add_option("--caps", ver_caps, "comma-separated exponent caps (ascending)");
    ver_cmd->add_flag("--json", ver_json, "emit JSON");

    int asfv_n = 0, asfv_d = 0;
    std::string asfv_omit;
    bool asfv_json = false;
    auto* asfv_cmd = app.add_subcommand("asfv", "almost square-free Veronese ideal");
    asfv_cmd->add_option("n", asfv_n, "ring dimension")->required();
    asfv_cmd->add_option("d", asfv_d, "degree")->required();
    asfv_cmd->add_option("--omit", asfv_omit, "square-free degree-d generator to omit");
    asfv_cmd->add_flag("--json", asfv_json, "emit JSON");

    int enum_n = 0, enum_d = 0, enum_count = 20;
    std::uint64_t enum_seed = 1;
    bool enum_random = false, enum_json = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "matroidal ideals, exhaustive or sampled");
    enum_cmd->add_option("n", enum_n, "ring dimension")->required();
    enum_cmd->add_option("d", enum_d, "degree")->required();
    enum_cmd->add_flag("--random", enum_random, "sample instead of exhaustive enumeration");
    enum_cmd->add_option("--seed", enum_seed, "sampler seed");
    enum_cmd->add_option("--count", enum_count, "number of sampled ideals")->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--json", enum_json, "emit JSON");

    std::string verify_checks;
    int verify_max = 10;
    bool verify_json = false;
    std::string verify_witness_dir;
    auto* verify_cmd = app.add_subcommand("verify", "run the structural check suite");
    verify_cmd->add_option("--checks", verify_checks, "comma-separated check ids to run");
    verify_cmd->add_option("--max-power", verify_max, "stability horizon")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", verify_json, "emit JSON");
    verify_cmd->add_option("--witness-dir", verify_witness_dir, "write failure witnesses here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("info")) return run_info(info_opts);
        if (app.got_subcommand("ass")) return run_ass(ass_opts, ass_t, ass_budget);
        if (app.got_subcommand("depth")) return run_depth(depth_opts, depth_t, depth_betti, depth_budget);
        if (app.got_subcommand("astab")) return run_stab(astab_opts, astab_max, true);
        if (app.got_subcommand("dstab")) return run_stab(dstab_opts, dstab_max, false);
        if (app.got_subcommand("gamma")) return run_gamma(gamma_opts);
        if (app.got_subcommand("decompose")) return run_decompose(decompose_opts, decompose_budget);
        if (app.got_subcommand("localize")) return run_localize(localize_opts, split_ints(localize_vars));
        if (app.got_subcommand("power")) return run_power(power_opts, power_t);
        if (app.got_subcommand("veronese")) {
            std::vector<int> caps = ver_caps.empty()
                                        ? std::vector<int>(static_cast<std::size_t>(ver_n), ver_d)
                                        : split_ints(ver_caps);
            emit_family({veronese_type(VeroneseSpec{ver_n, ver_d, caps})}, ver_json);
            return 0;
        }
        if (app.got_subcommand("asfv")) {
            std::optional<Monomial> omit;
            if (!asfv_omit.empty()) omit = parse_monomial(asfv_omit, asfv_n);
            emit_family({almost_squarefree_veronese(asfv_n, asfv_d, omit)}, asfv_json);
            return 0;
        }
        if (app.got_subcommand("enumerate")) {
            auto ideals = enum_random ? sample_matroidal(enum_n, enum_d, enum_seed, enum_count)
                                      : enumerate_matroidal(enum_n, enum_d);
            emit_family(ideals, enum_json);
            return 0;
        }
        if (app.got_subcommand("verify"))
            return run_verify(split_list(verify_checks), verify_max, verify_json, verify_witness_dir);
    } catch (const ParseError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": " << e.what()
                  << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
