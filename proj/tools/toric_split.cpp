// toric_split: toric ideals of graphs, Betti tables and splitting checks.

#include "toric/toric.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace toric;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_bound = 3;

struct Config {
    std::string order = "degrevlex";
    std::uint64_t seed = 1;
    std::string input;
    std::string format = "text";
    std::string backend = "divisor-complex";
    std::optional<int> max_degree;
    bool multigraded = false;
    bool all_strands = false;
    std::string theorem = "edge";
    std::size_t path_length = 1;
    std::string output;
    std::string corpus_kind = "edge";
    std::size_t count = 20;
};

BettiOptions betti_options(const Config& cfg) {
    BettiOptions o;
    o.backend = cfg.backend == "koszul" ? BettiBackend::koszul : BettiBackend::divisor_complex;
    o.max_degree = cfg.max_degree;
    o.all_strands = cfg.all_strands;
    return o;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

void print_certificate(std::ostream& out, const SplittingCertificate& c, const std::vector<std::string>& edge_names) {
    out << kind_name(c.kind);
    if (!c.separator.empty()) out << " along " << join(c.separator, "-");
    out << ": hypothesis " << yes_no(c.hypothesis) << ", decomposition " << (c.holds ? "holds" : "fails") << ", "
        << (c.verified ? "VERIFIED" : "NOT VERIFIED") << "\n";
    out << "  GB sizes: target " << c.target.size() << ", claimed " << c.claimed.size() << ", parts";
    for (const auto& p : c.parts) out << " " << p.gb.size();
    out << "\n";
    if (c.saturating_monomial) {
        std::vector<std::string> f;
        for (std::size_t i = 0; i < c.saturating_monomial->size(); ++i)
            if ((*c.saturating_monomial)[i] > 0) f.push_back(edge_names.empty() ? "e" + std::to_string(i + 1) : edge_names[i]);
        out << "  saturating monomial: " << (f.empty() ? "1" : join(f, "*")) << "\n";
    }
    if (c.extra) out << "  extra generator: " << binomial_to_string(*c.extra) << "\n";
    for (const auto& d : c.diagnostics) out << "  note: " << d << "\n";
}

std::vector<std::string> edge_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("e" + std::to_string(i));
    return v;
}

int report_certificates(const std::vector<SplittingCertificate>& certs, std::size_t nedges, const Config& cfg) {
    std::size_t ok = 0;
    for (const auto& c : certs) ok += c.verified;
    const bool pass = !certs.empty() && ok == certs.size();
    if (cfg.format == "json") {
        nlohmann::json j{{"certificates", nlohmann::json::array()}, {"verified", ok}, {"total", certs.size()},
                         {"pass", pass}};
        for (const auto& c : certs) j["certificates"].push_back(to_json(c));
        std::cout << j.dump(2) << "\n";
    } else {
        if (certs.empty()) std::cout << "no splitting found\n";
        for (const auto& c : certs) print_certificate(std::cout, c, edge_names(nedges));
        std::cout << "summary: " << ok << "/" << certs.size() << " verified -> " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------- commands

int cmd_ideal(const Config& cfg) {
    const Graph g = read_graph(cfg.input);
    const ToricIdeal I = toric_ideal_of_graph(g, order_from_name(cfg.order));
    if (cfg.format == "json") {
        nlohmann::json j = ideal_to_json(I.gb);
        j["graph"] = graph_to_json(g);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ideal_to_text(I.gb);
    }
    return exit_ok;
}

int cmd_betti(const Config& cfg) {
    const Graph g = read_graph(cfg.input);
    const ToricIdeal I = toric_ideal_of_graph(g, order_from_name(cfg.order));
    const BettiOptions opt = betti_options(cfg);
    try {
        if (cfg.multigraded) {
            const MultiBettiTable T = betti_multigraded(I, opt).table;
            if (cfg.format == "json") std::cout << to_json(T).dump(2) << "\n";
            else std::cout << to_csv(T);
            return exit_ok;
        }
        const GradedBettiTable T = betti_graded_table(I, opt);
        if (cfg.format == "json") std::cout << to_json(T).dump(2) << "\n";
        else if (cfg.format == "csv") std::cout << to_csv(T);
        else std::cout << format_betti(T);
        return exit_ok;
    } catch (const BoundTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << format_betti(betti_graded(e.partial(), 2L));
        return exit_bound;
    }
}

int cmd_verify(const Config& cfg) {
    const MonomialOrder order = order_from_name(cfg.order);
    const nlohmann::json doc = read_json_file(cfg.input);

    if (cfg.theorem == "cycle-fan" || cfg.theorem == "invariants") {
        if (!is_fan_spec(doc)) throw InputError("--theorem " + cfg.theorem + " expects a cycle fan specification");
        const FanSpec spec = fan_spec_from_json(doc);
        if (cfg.theorem == "cycle-fan") {
            const CycleFan fan = cycle_fan_glue(spec.cycle_length, spec.attachments, order);
            return report_certificates({fan.certificate}, fan.graph.num_edges(), cfg);
        }
        const CycleFanReport r = cycle_fan_check(spec.cycle_length, spec.attachments, betti_options(cfg));
        if (cfg.format == "json") {
            std::cout << nlohmann::json{{"splitting", to_json(r.fan.certificate)},
                                        {"direct", to_json(r.direct)},
                                        {"predicted", to_json(r.predicted)},
                                        {"h_polynomial", poly::to_string(r.hilbert.h_polynomial)},
                                        {"h_formula", poly::to_string(r.formula.h_polynomial)},
                                        {"regularity", {regularity(r.direct), r.formula.regularity}},
                                        {"projective_dimension", {proj_dim(r.direct), r.formula.proj_dim}},
                                        {"pass", r.all()}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "glued graph: " << r.fan.graph.num_vertices() << " vertices, " << r.fan.graph.num_edges()
                      << " edges, d = " << r.fan.half_length << "\n";
            std::cout << "splitting: " << (r.fan.certificate.verified ? "verified" : "NOT verified") << "\n";
            std::cout << "direct table:\n" << format_betti(r.direct);
            std::cout << "mapping cone table: " << (r.betti_match ? "equal" : "DIFFERENT") << "\n";
            std::cout << "h-polynomial: " << poly::to_string(r.hilbert.h_polynomial) << " (formula "
                      << poly::to_string(r.formula.h_polynomial) << ")\n";
            std::cout << "regularity: " << regularity(r.direct) << " (formula " << r.formula.regularity << ")\n";
            std::cout << "projective dimension: " << proj_dim(r.direct) << " (formula " << r.formula.proj_dim << ")\n";
            std::cout << "result: " << (r.all() ? "PASS" : "FAIL") << "\n";
        }
        return r.all() ? exit_ok : exit_failed;
    }

    if (is_glue_spec(doc)) {
        const GlueSpec spec = glue_spec_from_json(doc);
        const std::size_t n = glue(spec).graph.num_edges();
        if (cfg.theorem == "edge") return report_certificates({verify_edge_gluing(spec, order)}, n, cfg);
        if (cfg.theorem == "path") return report_certificates({verify_path_gluing(spec, order)}, n, cfg);
        throw InputError("--theorem " + cfg.theorem + " expects a graph file");
    }

    const Graph g = graph_from_json(doc);
    if (cfg.theorem == "edge") return report_certificates(edge_split_verify(g, order), g.num_edges(), cfg);
    if (cfg.theorem == "path")
        return report_certificates(path_split_verify(g, cfg.path_length, order), g.num_edges(), cfg);

    // tensor
    try {
        const TensorReport r = tensor_betti_check(g, betti_options(cfg));
        if (cfg.format == "json") {
            nlohmann::json j{{"direct", to_json(r.direct)}, {"splittings", nlohmann::json::array()}, {"pass", r.all_equal()}};
            for (const auto& e : r.splittings)
                j["splittings"].push_back({{"separator", e.separator}, {"convolution", to_json(e.convolution)}, {"equal", e.equal}});
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "direct table:\n" << format_betti(r.direct);
            for (const auto& e : r.splittings)
                std::cout << "splitting along " << join(e.separator, "-") << ": convolution "
                          << (e.equal ? "equal" : "DIFFERENT") << "\n";
            std::cout << "result: " << (r.all_equal() ? "PASS" : "FAIL") << "\n";
        }
        return r.all_equal() ? exit_ok : exit_failed;
    } catch (const NoEdgeSplitting& e) {
        const GradedBettiTable direct = betti_graded_table(toric_ideal_of_graph(g), betti_options(cfg));
        if (cfg.format == "json") {
            std::cout << nlohmann::json{{"direct", to_json(direct)}, {"error", e.what()}, {"pass", false}}.dump(2) << "\n";
        } else {
            std::cout << "direct table:\n" << format_betti(direct);
            std::cout << "no edge splitting with a bipartite side\nresult: FAIL\n";
        }
        return exit_failed;
    }
}

int cmd_glue(const Config& cfg) {
    const GlueResult r = glue(glue_spec_from_json(read_json_file(cfg.input)));
    const std::string text = cfg.format == "dot" ? to_dot(r.graph) : graph_to_json(r.graph).dump(2) + "\n";
    if (cfg.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.output);
        if (!out) throw InputError("cannot write '" + cfg.output + "'");
        out << text;
    }
    return exit_ok;
}

int cmd_split(const Config& cfg) {
    const Graph g = read_graph(cfg.input);
    const auto splittings = find_path_splittings(g, cfg.path_length);
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : splittings) {
            std::vector<std::string> sep;
            for (std::size_t v : s.separator) sep.push_back(g.label(v));
            arr.push_back({{"separator", sep},
                           {"side1", graph_to_json(s.side1.graph)},
                           {"side2", graph_to_json(s.side2.graph)},
                           {"side1_bipartite", is_bipartite(s.side1.graph).bipartite},
                           {"side2_bipartite", is_bipartite(s.side2.graph).bipartite},
                           {"components", s.component_count}});
        }
        std::cout << arr.dump(2) << "\n";
        return exit_ok;
    }
    if (splittings.empty()) std::cout << "no splitting found\n";
    for (const auto& s : splittings) {
        std::vector<std::string> sep;
        for (std::size_t v : s.separator) sep.push_back(g.label(v));
        std::cout << "along " << join(sep, "-") << ": side1 " << join(s.side1.graph.vertices(), ",") << " ("
                  << (is_bipartite(s.side1.graph).bipartite ? "bipartite" : "non-bipartite") << "), side2 "
                  << join(s.side2.graph.vertices(), ",") << " ("
                  << (is_bipartite(s.side2.graph).bipartite ? "bipartite" : "non-bipartite") << ")\n";
    }
    return exit_ok;
}

int cmd_corpus(const Config& cfg) {
    const MonomialOrder order = order_from_name(cfg.order);
    std::size_t ok = 0;
    if (cfg.corpus_kind == "pairs") {
        for (const auto& p : corpus::two_binomial_pairs(cfg.seed, cfg.count)) {
            const auto r = two_binomial_membership(p.alpha, p.beta);
            ok += r.criterion == r.oracle;
        }
    } else {
        const auto specs = cfg.corpus_kind == "edge" ? corpus::edge_gluings(cfg.seed, cfg.count)
                                                     : corpus::path_gluings(cfg.seed, cfg.count);
        for (const auto& s : specs) {
            const auto c = cfg.corpus_kind == "edge" ? verify_edge_gluing(s, order) : verify_path_gluing(s, order);
            ok += c.verified;
            if (!c.verified) std::cout << "failure: " << glue_spec_to_json(s).dump() << "\n";
        }
    }
    std::cout << cfg.corpus_kind << " corpus (seed " << cfg.seed << "): " << ok << "/" << cfg.count << " agree -> "
              << (ok == cfg.count ? "PASS" : "FAIL") << "\n";
    return ok == cfg.count ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric ideals of graphs, Betti tables and splitting checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--order", cfg.order, "Monomial order")->check(CLI::IsMember({"degrevlex", "lex"}))->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for random corpora")->capture_default_str();

    auto formats = [](std::initializer_list<std::string> f) { return CLI::IsMember(std::vector<std::string>(f)); };

    auto* ideal = app.add_subcommand("ideal", "Reduced Groebner basis of the toric ideal of a graph");
    ideal->add_option("graph", cfg.input, "Graph JSON file")->required();
    ideal->add_option("--format", cfg.format, "Output format")->check(formats({"text", "json"}));

    auto* betti = app.add_subcommand("betti", "Graded Betti table of R/I_G");
    betti->add_option("graph", cfg.input, "Graph JSON file")->required();
    betti->add_option("--backend", cfg.backend, "Betti backend")->check(formats({"divisor-complex", "koszul"}));
    betti->add_option("--max-degree", cfg.max_degree, "Largest strand degree to compute");
    betti->add_option("--format", cfg.format, "Output format")->check(formats({"text", "json", "csv"}));
    betti->add_flag("--multigraded", cfg.multigraded, "Print the multigraded table (csv or json)");
    betti->add_flag("--all-strands", cfg.all_strands, "Enumerate every semigroup degree up to the bound");

    auto* verify = app.add_subcommand("verify", "Check a splitting theorem on a graph, glue spec or fan spec");
    verify->add_option("input", cfg.input, "Graph, glue spec or cycle fan spec (JSON)")->required();
    verify->add_option("--theorem", cfg.theorem, "Which statement to check")
        ->check(formats({"edge", "path", "cycle-fan", "tensor", "invariants"}));
    verify->add_option("--path-length", cfg.path_length, "Path length for --theorem path")->check(CLI::PositiveNumber);
    verify->add_option("--backend", cfg.backend, "Betti backend")->check(formats({"divisor-complex", "koszul"}));
    verify->add_option("--format", cfg.format, "Output format")->check(formats({"text", "json"}));

    auto* gl = app.add_subcommand("glue", "Glue two graphs along isomorphic induced subgraphs");
    gl->add_option("spec", cfg.input, "Glue spec JSON file")->required();
    gl->add_option("--format", cfg.format, "Output format")->check(formats({"json", "dot"}));
    gl->add_option("-o,--output", cfg.output, "Write to a file instead of stdout");

    auto* split = app.add_subcommand("split", "List splittings of a graph along induced paths");
    split->add_option("graph", cfg.input, "Graph JSON file")->required();
    split->add_option("--path-length", cfg.path_length, "Number of edges of the separating path")->check(CLI::PositiveNumber);
    split->add_option("--format", cfg.format, "Output format")->check(formats({"text", "json"}));

    auto* corp = app.add_subcommand("corpus", "Run a seeded random corpus of splitting checks");
    corp->add_option("--kind", cfg.corpus_kind, "Corpus kind")->check(formats({"edge", "path", "pairs"}));
    corp->add_option("--count", cfg.count, "Number of instances")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }
    if (gl->parsed() && cfg.format == "text") cfg.format = "json";

    try {
        if (ideal->parsed()) return cmd_ideal(cfg);
        if (betti->parsed()) return cmd_betti(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (gl->parsed()) return cmd_glue(cfg);
        if (split->parsed()) return cmd_split(cfg);
        if (corp->parsed()) return cmd_corpus(cfg);
    } catch (const BoundTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bound;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const NotInducedIso& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const PreconditionViolated& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
