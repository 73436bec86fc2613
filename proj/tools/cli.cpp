#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "racgk/acceptance/criteria.hpp"
#include "racgk/coxeter.hpp"
#include "racgk/elliott.hpp"
#include "racgk/error.hpp"
#include "racgk/graph.hpp"
#include "racgk/hecke.hpp"
#include "racgk/k_invariants.hpp"
#include "racgk/rational.hpp"

namespace racgk::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCapVariable = "RACGK_ELEMENT_CAP";

// A malformed invocation that CLI11 itself cannot detect.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read graph file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_graph(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

DeformationParameter parse_q(const Graph& g, const std::string& spec) {
    if (spec.find('=') == std::string::npos) return DeformationParameter::uniform(g, parse_rational(spec));
    std::map<std::string, Rational> values;
    std::stringstream items(spec);
    std::string item;
    while (std::getline(items, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("q entry '" + item + "' is not of the form label=value");
        const std::string label = item.substr(0, eq);
        if (!g.find(label)) throw ParseError("q names unknown vertex '" + label + "'");
        if (!values.emplace(label, parse_rational(item.substr(eq + 1))).second) {
            throw ParseError("q gives vertex '" + label + "' twice");
        }
    }
    return DeformationParameter::per_vertex(g, values);
}

std::size_t element_cap(const RunConfig& config) {
    if (config.element_cap) return *config.element_cap;
    if (const char* env = std::getenv(kCapVariable)) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (*env == '\0' || *end != '\0' || value == 0) {
            throw UsageError(std::string(kCapVariable) + " must be a positive integer, got '" + env + "'");
        }
        return static_cast<std::size_t>(value);
    }
    return kDefaultElementCap;
}

std::size_t require_radius(const RunConfig& config) {
    if (!config.radius) throw UsageError(config.command + " requires -L");
    return *config.radius;
}

Json labels_json(const Graph& g, const Clique& c) { return Json(clique_labels(g, c)); }

std::string clique_text(const Graph& g, const Clique& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + g.label(c.members[i]);
    return out + "}";
}

Json integer_json(const Integer& z) {
    if (!z.fits_slong_p()) throw Error("integer " + z.get_str() + " does not fit the JSON report");
    return z.get_si();
}

std::string format_double(double x) {
    std::ostringstream out;
    out << std::setprecision(6) << std::scientific << x;
    return out.str();
}

void emit(const RunConfig& config, std::ostream& out, const Json& report, const std::string& text) {
    if (config.format == Format::Json) {
        out << report.dump(2) << '\n';
    } else {
        out << text;
    }
}

int cmd_cliques(const RunConfig& config, std::ostream& out) {
    const Graph g = load_graph(config.graph_paths.at(0));
    const auto cliques = enumerate_cliques(g);
    Json report;
    report["count"] = cliques.size();
    report["recursive_count"] = clique_count_recursive(g);
    report["max_clique_size"] = max_clique_size(g);
    report["cliques"] = Json::array();
    for (const auto& c : cliques) report["cliques"].push_back(labels_json(g, c));

    std::ostringstream text;
    text << "cliques: " << cliques.size() << " (recursion: " << clique_count_recursive(g)
         << "), max size " << max_clique_size(g) << '\n';
    for (const auto& c : cliques) text << "  " << clique_text(g, c) << '\n';
    emit(config, out, report, text.str());
    return kExitOk;
}

int cmd_ktheory(const RunConfig& config, std::ostream& out) {
    const Graph g = load_graph(config.graph_paths.at(0));
    const auto q = parse_q(g, config.q);
    const auto inv = k_theory(g);
    const auto pairing = trace_pairing(g, q);
    const auto image = trace_image(pairing);

    Json report;
    report["rank"] = inv.k0_rank;
    report["k1"] = inv.k1_rank;
    report["basis"] = Json::array();
    for (const auto& c : inv.k0_basis) report["basis"].push_back(labels_json(g, c));
    report["pairing"] = Json::array();
    for (const auto& v : pairing.values) report["pairing"].push_back(to_string(v));
    report["trace_image"] = to_string(image.generator());

    std::ostringstream text;
    text << "K0 = Z^" << inv.k0_rank << ", K1 = 0, [1] = [p_{}]\n";
    std::size_t width = 6;
    for (const auto& c : inv.k0_basis) width = std::max(width, clique_text(g, c).size() + 6);
    text << std::left << std::setw(static_cast<int>(width)) << "class" << "pairing\n";
    for (std::size_t i = 0; i < inv.k0_basis.size(); ++i) {
        text << std::setw(static_cast<int>(width)) << "[p_" + clique_text(g, inv.k0_basis[i]) + "]"
             << to_string(pairing.values[i]) << '\n';
    }
    text << "trace image: (" << to_string(image.generator()) << ")Z\n";
    emit(config, out, report, text.str());
    return kExitOk;
}

int cmd_compare(const RunConfig& config, std::ostream& out) {
    if (config.graph_paths.size() != 2) throw UsageError("compare takes exactly two graph files");
    const Graph g1 = load_graph(config.graph_paths[0]);
    const Graph g2 = load_graph(config.graph_paths[1]);
    const auto q1 = parse_q(g1, config.q1.value_or(config.q));
    const auto q2 = parse_q(g2, config.q2.value_or(config.q));
    const auto result = compare_graph_invariants(g1, q1, g2, q2);

    Json report;
    report["verdict"] = to_string(result.verdict);
    report["reason"] = result.reason;
    report["rank1"] = k_theory(g1).k0_rank;
    report["rank2"] = k_theory(g2).k0_rank;
    report["trace_image1"] = to_string(trace_image(trace_pairing(g1, q1)).generator());
    report["trace_image2"] = to_string(trace_image(trace_pairing(g2, q2)).generator());

    std::ostringstream text;
    text << to_string(result.verdict) << ": " << result.reason << '\n';
    emit(config, out, report, text.str());
    return kExitOk;
}

int cmd_classify(const RunConfig& config, std::ostream& out) {
    if (!config.q1 || !config.q2) throw UsageError("classify requires --q1 and --q2");
    const auto c = classify_pair(config.n, parse_rational(*config.q1), parse_rational(*config.q2));

    Json report;
    report["regime1"] = to_string(c.regime1);
    report["regime2"] = to_string(c.regime2);
    report["order1"] = integer_json(c.order1);
    report["order2"] = integer_json(c.order2);
    report["verdict"] = to_string(c.verdict);

    std::ostringstream text;
    text << "regimes: " << to_string(c.regime1) << " / " << to_string(c.regime2) << '\n'
         << "orders of 1/(1+q) in Q/Z: " << c.order1.get_str() << " / " << c.order2.get_str() << '\n'
         << "verdict: " << to_string(c.verdict) << '\n';
    emit(config, out, report, text.str());
    return kExitOk;
}

int cmd_growth(const RunConfig& config, std::ostream& out) {
    const Graph g = load_graph(config.graph_paths.at(0));
    const std::size_t radius = require_radius(config);
    const auto growth = growth_sequence(g, radius, element_cap(config));

    Json report;
    report["radius"] = radius;
    report["growth"] = growth;

    std::ostringstream text;
    text << "k  s_k\n";
    for (std::size_t k = 0; k < growth.size(); ++k) text << k << "  " << growth[k] << '\n';
    emit(config, out, report, text.str());
    return kExitOk;
}

template <typename Scalar>
double to_double(const Scalar& x) {
    if constexpr (std::is_same_v<Scalar, double>) {
        return x;
    } else {
        return x.get_d();
    }
}

template <typename Scalar>
bool verify_operators(const TruncatedSpace& space, const DeformationParameter& q, double tol, Json& report,
                      std::ostringstream& text) {
    const Graph& g = space.graph();
    const auto relations = check_relations<Scalar>(space, q);
    report["relations"] = {{"involution", relations.involution},
                           {"unitarity", relations.unitarity},
                           {"symmetry", relations.symmetry},
                           {"commutation", relations.commutation},
                           {"passed", relations.passed(tol)}};
    text << "relations (max residual on interior columns)\n"
         << "  involution   " << format_double(relations.involution) << '\n'
         << "  unitarity    " << format_double(relations.unitarity) << '\n'
         << "  symmetry     " << format_double(relations.symmetry) << '\n'
         << "  commutation  " << format_double(relations.commutation) << '\n';

    bool passed = relations.passed(tol);
    report["traces"] = Json::array();
    text << "clique traces\n";
    for (const auto& c : enumerate_cliques(g)) {
        if (c.size() > space.radius()) continue;
        const Scalar computed = trace_of(clique_projection<Scalar>(space, q, c));
        const Rational target = clique_trace(c, q);
        double error = 0.0;
        if constexpr (std::is_same_v<Scalar, double>) {
            error = std::abs(computed - target.get_d());
        } else {
            error = Rational(abs(computed - target)).get_d();
        }
        const bool ok = error < tol || error == 0.0;
        passed = passed && ok;
        report["traces"].push_back({{"clique", labels_json(g, c)},
                                    {"computed", to_double(computed)},
                                    {"target", to_string(target)},
                                    {"error", error}});
        text << "  " << std::left << std::setw(14) << clique_text(g, c) << std::setw(10) << to_string(target)
             << format_double(error) << '\n';
    }
    return passed;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    const Graph g = load_graph(config.graph_paths.at(0));
    const auto q = parse_q(g, config.q);
    const std::size_t radius = config.radius.value_or(4);
    const TruncatedSpace space(g, radius, element_cap(config));
    const bool exact = exact_mode_available(q);

    Json report;
    report["radius"] = radius;
    report["dimension"] = space.dimension();
    report["exact"] = exact;
    report["tolerance"] = config.tolerance;
    std::ostringstream text;
    text << "ball radius " << radius << ", dimension " << space.dimension() << (exact ? ", exact arithmetic" : "")
         << '\n';
    bool passed = exact ? verify_operators<Rational>(space, q, config.tolerance, report, text)
                        : verify_operators<double>(space, q, config.tolerance, report, text);

    // Convergence table for the free product of n >= 3 copies of Z/2Z with a
    // uniform parameter below the critical value.
    report["series"] = nullptr;
    const int n = static_cast<int>(g.size());
    if (g.edge_count() == 0 && n >= 3 && q.is_uniform() && regime(n, q[0]) == Regime::NonSimple) {
        report["series"] = Json::array();
        text << "series for ||eta||^2 (closed form " << to_string(eta_norm_partial(n, q[0], 0).closed_form) << ")\n"
             << "  L   t error       t bound       phi error     phi bound\n";
        for (std::size_t l = 5; l <= 30; l += 5) {
            const auto r = free_product_trace_checks(n, q[0], l);
            passed = passed && r.within_bounds();
            report["series"].push_back({{"radius", l},
                                        {"partial_sum", to_string(r.series.partial_sum)},
                                        {"tail_bound", to_string(r.series.tail_bound)},
                                        {"closed_form", to_string(r.series.closed_form)},
                                        {"t_hat", to_string(r.t_hat)},
                                        {"t_error", to_string(r.t_error)},
                                        {"t_bound", to_string(r.t_bound)},
                                        {"phi_hat", to_string(r.phi_hat)},
                                        {"phi_error", to_string(r.phi_error)},
                                        {"phi_bound", to_string(r.phi_bound)},
                                        {"within_bounds", r.within_bounds()}});
            text << "  " << std::setw(4) << l << format_double(r.t_error.get_d()) << "  "
                 << format_double(r.t_bound.get_d()) << "  " << format_double(r.phi_error.get_d()) << "  "
                 << format_double(r.phi_bound.get_d()) << '\n';
        }
    }
    report["passed"] = passed;
    text << (passed ? "PASS" : "FAIL") << '\n';
    emit(config, out, report, text.str());
    return passed ? kExitOk : kExitDomain;
}

int cmd_reproduce(const RunConfig& config, std::ostream& out) {
    const auto results = acceptance::run_all();
    const bool passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });

    Json report;
    report["criteria"] = Json::array();
    std::ostringstream text;
    for (const auto& r : results) {
        report["criteria"].push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        text << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << std::left << std::setw(50) << r.title
             << r.detail << '\n';
    }
    report["passed"] = passed;
    emit(config, out, report, text.str());
    return passed ? kExitOk : kExitDomain;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "cliques") return cmd_cliques(config, out);
        if (config.command == "ktheory") return cmd_ktheory(config, out);
        if (config.command == "compare") return cmd_compare(config, out);
        if (config.command == "classify") return cmd_classify(config, out);
        if (config.command == "growth") return cmd_growth(config, out);
        if (config.command == "verify") return cmd_verify(config, out);
        if (config.command == "reproduce") return cmd_reproduce(config, out);
        err << "error: unknown command '" << config.command << "'\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"K-theory invariants of Hecke C*-algebras of right-angled Coxeter groups", "racgk"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "json";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cap", config.element_cap,
                   std::string("Maximum ball size (overrides ") + kCapVariable + ")")
        ->check(CLI::PositiveNumber);

    auto graph_arg = [&](CLI::App* sub, std::size_t count) {
        sub->add_option("graph", config.graph_paths, "Graph file")->required()->expected(static_cast<int>(count));
    };
    auto q_option = [&](CLI::App* sub) {
        sub->add_option("--q", config.q, "Uniform 'a/b' or per-vertex 'a=1/3,b=1/2'")->capture_default_str();
    };

    auto* cliques = app.add_subcommand("cliques", "Enumerate and count cliques");
    graph_arg(cliques, 1);

    auto* ktheory = app.add_subcommand("ktheory", "K-theory, trace pairing and trace image");
    graph_arg(ktheory, 1);
    q_option(ktheory);

    auto* compare = app.add_subcommand("compare", "Compare the K-theoretic invariants of two graphs");
    graph_arg(compare, 2);
    q_option(compare);
    compare->add_option("--q1", config.q1, "Parameter for the first graph (default --q)");
    compare->add_option("--q2", config.q2, "Parameter for the second graph (default --q)");

    auto* classify = app.add_subcommand("classify", "Compare two parameters for the free product of n copies of Z/2Z");
    classify->add_option("-n", config.n, "Number of free factors")->required();
    classify->add_option("--q1", config.q1, "First parameter")->required();
    classify->add_option("--q2", config.q2, "Second parameter")->required();

    auto* growth = app.add_subcommand("growth", "Growth sequence s_0 .. s_L");
    graph_arg(growth, 1);
    growth->add_option("-L,--radius", config.radius, "Radius")->required();

    auto* verify = app.add_subcommand("verify", "Truncated-operator verification report");
    graph_arg(verify, 1);
    q_option(verify);
    verify->add_option("-L,--radius", config.radius, "Ball radius (default 4)")->check(CLI::Range(2, 1000));
    verify->add_option("--tol", config.tolerance, "Residual tolerance")->check(CLI::PositiveNumber)->capture_default_str();

    app.add_subcommand("reproduce", "Run the acceptance suite");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }
    config.command = app.get_subcommands().front()->get_name();
    config.format = format == "text" ? Format::Text : Format::Json;
    return run(config, out, err);
}

}  // namespace racgk::cli
