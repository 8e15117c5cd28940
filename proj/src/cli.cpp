#include "copwin/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "copwin/capture.hpp"
#include "copwin/errors.hpp"
#include "copwin/game.hpp"
#include "copwin/generators.hpp"
#include "copwin/graph.hpp"
#include "copwin/ordinal.hpp"
#include "copwin/symbolic.hpp"

namespace copwin {

namespace {

// Flag values that are syntactically wrong rather than semantically out of
// range; reported with exit code 2 like other usage mistakes.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_input(const std::string& file, const std::string& gen) {
    if (file.empty() == gen.empty())
        throw usage_error("provide exactly one of <file> or --gen <spec>");
    if (!gen.empty()) return generate(gen);
    std::ifstream in(file);
    if (!in) throw domain_error("cannot open graph file: " + file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string render_set(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ", ";
        out += labels[i];
    }
    out += "}";
    return out;
}

std::string render_matrix(const Graph& g, const std::vector<CaptureValue>& values) {
    const int n = g.order();
    auto cell = [&](int u, int v) {
        CaptureValue c = values[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                                static_cast<std::size_t>(v)];
        return c.is_never() ? std::string("-") : std::to_string(c.value());
    };

    std::size_t row_width = 0;
    for (int u = 0; u < n; ++u) row_width = std::max(row_width, g.label(u).size());
    std::vector<std::size_t> col_width(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::size_t w = g.label(v).size();
        for (int u = 0; u < n; ++u) w = std::max(w, cell(u, v).size());
        col_width[static_cast<std::size_t>(v)] = w;
    }

    auto pad = [](const std::string& s, std::size_t width) {
        return std::string(width - s.size(), ' ') + s;
    };

    std::string out = "eta matrix (rows robber, cols cop; - = never):\n";
    out += std::string(row_width, ' ');
    for (int v = 0; v < n; ++v)
        out += " " + pad(g.label(v), col_width[static_cast<std::size_t>(v)]);
    out += "\n";
    for (int u = 0; u < n; ++u) {
        out += pad(g.label(u), row_width);
        for (int v = 0; v < n; ++v)
            out += " " + pad(cell(u, v), col_width[static_cast<std::size_t>(v)]);
        out += "\n";
    }
    return out;
}

std::vector<CaptureValue> table_values(const CaptureTable& t) {
    const int n = t.order();
    std::vector<CaptureValue> values;
    values.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) values.push_back(t.eta(u, v));
    return values;
}

void cmd_generate(const std::string& spec, const std::string& output, std::ostream& out) {
    std::string text = serialize(generate(spec));
    if (output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output);
    if (!file) throw domain_error("cannot open output file: " + output);
    file << text;
}

void cmd_analyze(const Graph& g, bool with_matrix, bool as_json, std::ostream& out) {
    CaptureTable t = compute_capture_table(g);
    CaptureValue eta_g = t.eta_of_graph();
    if (as_json) {
        nlohmann::json j;
        j["vertices"] = g.labels();
        j["edges"] = g.edge_count();
        j["copwin"] = t.copwin();
        j["rho"] = t.rho();
        j["eta"] = eta_g.is_never() ? nlohmann::json() : nlohmann::json(eta_g.value());
        if (t.copwin()) j["theta"] = t.theta();
        if (with_matrix) {
            nlohmann::json rows = nlohmann::json::array();
            for (int u = 0; u < t.order(); ++u) {
                nlohmann::json row = nlohmann::json::array();
                for (int v = 0; v < t.order(); ++v) {
                    CaptureValue c = t.eta(u, v);
                    row.push_back(c.is_never() ? nlohmann::json() : nlohmann::json(c.value()));
                }
                rows.push_back(std::move(row));
            }
            j["matrix"] = std::move(rows);
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "vertices: " << g.order() << "\n";
    out << "edges: " << g.edge_count() << "\n";
    out << "copwin: " << (t.copwin() ? "true" : "false") << "\n";
    out << "rho: " << t.rho() << "\n";
    out << "eta: " << to_string(eta_g) << "\n";
    if (t.copwin()) out << "theta: " << render_set(t.theta()) << "\n";
    if (with_matrix) out << render_matrix(g, table_values(t));
}

RobberPolicy parse_policy(const std::string& text) {
    if (text == "optimal") return RobberPolicy::optimal();
    const std::string prefix = "random:";
    if (text.rfind(prefix, 0) == 0) {
        std::string_view digits(text);
        digits.remove_prefix(prefix.size());
        std::uint64_t seed = 0;
        auto res = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (res.ec == std::errc() && res.ptr == digits.data() + digits.size())
            return RobberPolicy::random(seed);
    }
    throw usage_error("--robber-policy expects 'optimal' or 'random:<seed>'");
}

void cmd_simulate(const Graph& g, const std::string& robber, const std::string& cop,
                  const std::string& policy_text, int max_rounds, std::ostream& out) {
    CaptureTable t = compute_capture_table(g);
    RobberPolicy policy = parse_policy(policy_text);
    if (max_rounds < 0) max_rounds = g.order() * (g.order() - 1) + 1;
    Trace trace = simulate(t, robber, cop, max_rounds, policy);
    out << render_trace(g, trace);
}

void cmd_oracle(const Graph& g, std::ostream& out) {
    out << render_matrix(g, brute_force_table(g));
}

void cmd_classify(const std::string& text, std::ostream& out) {
    Ordinal a = parse_ordinal(text);
    auto parts = split(a);
    out << "ordinal: " << to_string(a) << "\n";
    out << "is_limit: " << (a.is_limit() ? "true" : "false") << "\n";
    out << "is_successor: " << (a.is_successor() ? "true" : "false") << "\n";
    out << "split: limit=" << to_string(parts.limit_part) << " finite=" << parts.finite_part
        << "\n";
    out << "in_lambda_T: " << (in_lambda_T(a) ? "true" : "false") << "\n";
    out << "in_upsilon: " << (in_upsilon(a) ? "true" : "false") << "\n";
}

void print_report(const std::string& header, const FamilyReport& report, std::ostream& out) {
    out << "family: " << header << "\n";
    if (report.eta) out << "eta: " << to_string(*report.eta) << "\n";
    out << "rho: " << to_string(report.rho) << "\n";
    if (!report.theta_description.empty()) out << "theta: " << report.theta_description << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Capture relations, CR-ordinals, and optimal pursuit on finite graphs"};
    app.name("copwin");
    app.require_subcommand(1);
    app.footer(
        "Examples:\n"
        "  copwin analyze --gen spider:1,2,3 --matrix\n"
        "  copwin simulate --gen path:4 --robber p1 --cop p4\n"
        "  copwin classify w*2+3\n"
        "  copwin family s --alpha w+1\n");

    auto* cmd_gen = app.add_subcommand("generate", "Emit a generator graph in the text format");
    std::string gen_spec;
    std::string gen_output;
    cmd_gen->add_option("spec", gen_spec, "generator spec, e.g. spider:1,2,3")->required();
    cmd_gen->add_option("-o,--output", gen_output, "write to a file instead of stdout");

    auto* cmd_an = app.add_subcommand("analyze", "Compute the capture table of a graph");
    std::string an_file, an_gen;
    bool an_matrix = false, an_json = false;
    cmd_an->add_option("file", an_file, "graph file in the text format");
    cmd_an->add_option("--gen", an_gen, "generator spec instead of a file");
    cmd_an->add_flag("--matrix", an_matrix, "print the full eta matrix");
    cmd_an->add_flag("--json", an_json, "machine-readable output");

    auto* cmd_sim = app.add_subcommand("simulate", "Play out a pursuit with recorded moves");
    std::string sim_file, sim_gen, sim_robber, sim_cop;
    std::string sim_policy = "optimal";
    int sim_max_rounds = -1;
    cmd_sim->add_option("file", sim_file, "graph file in the text format");
    cmd_sim->add_option("--gen", sim_gen, "generator spec instead of a file");
    cmd_sim->add_option("--robber", sim_robber, "robber start vertex")->required();
    cmd_sim->add_option("--cop", sim_cop, "cop start vertex")->required();
    cmd_sim->add_option("--robber-policy", sim_policy, "optimal (default) or random:<seed>");
    cmd_sim->add_option("--max-rounds", sim_max_rounds,
                        "round limit (default n(n-1)+1)");

    auto* cmd_or = app.add_subcommand("oracle", "Brute-force game table for cross-checking");
    std::string or_file, or_gen;
    cmd_or->add_option("file", or_file, "graph file in the text format");
    cmd_or->add_option("--gen", or_gen, "generator spec instead of a file");

    auto* cmd_cl = app.add_subcommand("classify", "Classify an ordinal in CNF");
    std::string cl_ordinal;
    cmd_cl->add_option("ordinal", cl_ordinal, "ordinal text, e.g. w*2+3")->required();

    auto* cmd_fam = app.add_subcommand("family", "Symbolic report for an infinite family");
    cmd_fam->require_subcommand(1);
    auto* fam_s = cmd_fam->add_subcommand("s", "rooted tree S_alpha");
    std::string fam_alpha;
    fam_s->add_option("--alpha", fam_alpha, "family index as an ordinal")->required();
    auto* fam_tomega = cmd_fam->add_subcommand("tomega", "spider with one leg per length");
    auto* fam_polat = cmd_fam->add_subcommand("polat", "generalized Polat graph");
    std::uint64_t fam_i = 0, fam_j = 0;
    fam_polat->add_option("--i", fam_i, "tail parameter i >= 1")->required();
    fam_polat->add_option("--j", fam_j, "sum parameter j >= 1")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);

        if (*cmd_gen) {
            cmd_generate(gen_spec, gen_output, out);
        } else if (*cmd_an) {
            cmd_analyze(load_input(an_file, an_gen), an_matrix, an_json, out);
        } else if (*cmd_sim) {
            if (cmd_sim->count("--max-rounds") > 0 && sim_max_rounds < 1)
                throw usage_error("--max-rounds must be a positive integer");
            cmd_simulate(load_input(sim_file, sim_gen), sim_robber, sim_cop, sim_policy,
                         sim_max_rounds, out);
        } else if (*cmd_or) {
            cmd_oracle(load_input(or_file, or_gen), out);
        } else if (*cmd_cl) {
            cmd_classify(cl_ordinal, out);
        } else if (*cmd_fam) {
            if (*fam_s)
                print_report("s alpha=" + to_string(parse_ordinal(fam_alpha)),
                             s_report(parse_ordinal(fam_alpha)), out);
            else if (*fam_tomega)
                print_report("tomega", tomega_report(), out);
            else if (*fam_polat)
                print_report("polat i=" + std::to_string(fam_i) + " j=" + std::to_string(fam_j),
                             polat_report(fam_i, fam_j), out);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace copwin
