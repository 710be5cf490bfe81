// Command-line front end: build named instances, run analyses with
// certificates, verify certificates independently of the solvers.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "snark/certificate.hpp"
#include "snark/constructions.hpp"
#include "snark/matching.hpp"
#include "snark/multipole.hpp"
#include "snark/report.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// SNARKTOOL_OUTDIR, when set, prefixes relative output paths.
std::string out_path(const std::string& path) {
    const char* dir = std::getenv("SNARKTOOL_OUTDIR");
    if (!dir || path.empty() || path[0] == '/') return path;
    return std::string(dir) + "/" + path;
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(out_path(path), std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"snarktool: snark constructions and uncolorability measures"};
    app.require_subcommand(1);
    app.set_config("--config");

    // construct
    std::string construct_name, construct_out, construct_host, construct_cycles;
    bool construct_json = false;
    auto* cmd_construct = app.add_subcommand(
        "construct",
        "build a named graph, or 'blowup'/'semiblowup' from --host/--cycles");
    cmd_construct->add_option("name", construct_name,
                              "registry name, or blowup | semiblowup")
        ->required();
    cmd_construct->add_option("-o,--output", construct_out, "output file");
    cmd_construct->add_flag("--json", construct_json,
                            "emit multipole JSON even for plain graphs");
    cmd_construct->add_option("--host", construct_host,
                              "host graph: registry name or file");
    cmd_construct->add_option(
        "--cycles", construct_cycles,
        "cycle selection, e.g. \"0,1,2;3,4,5\" (semicolon-separated cycles)");

    // analyze
    std::string analyze_file, analyze_out, matchings_cache;
    double budget = 0;
    int threads = 1;
    bool all = false, w_tau = false, w_odd = false, w_r3 = false, w_rho = false,
         w_cdc = false, w_circ = false, w_cyc = false, w_chi = false;
    auto* cmd_analyze = app.add_subcommand("analyze", "run measure engines");
    cmd_analyze->add_option("file", analyze_file, "graph6 or multipole JSON file")
        ->required();
    cmd_analyze->add_flag("--all", all, "every measure");
    cmd_analyze->add_flag("--chi", w_chi, "3-edge-colorability decision");
    cmd_analyze->add_flag("--tau", w_tau, "perfect matching index");
    cmd_analyze->add_flag("--oddness", w_odd, "oddness");
    cmd_analyze->add_flag("--r3", w_r3, "resistance");
    cmd_analyze->add_flag("--rho", w_rho, "vertex resistance");
    cmd_analyze->add_flag("--cdc", w_cdc, "cycle double cover decision");
    cmd_analyze->add_flag("--circ", w_circ, "circumference");
    cmd_analyze->add_flag("--cyc-conn", w_cyc, "cyclic edge connectivity");
    cmd_analyze->add_option("--budget", budget, "per-stage time budget (s)");
    cmd_analyze->add_option("--threads", threads, "worker threads");
    cmd_analyze->add_option("-o,--output", analyze_out, "report file");
    cmd_analyze->add_option("--matchings-cache", matchings_cache,
                            "perfect-matching cache file (read/write)");

    // verify
    std::string verify_cert, verify_graph;
    auto* cmd_verify =
        app.add_subcommand("verify", "check certificates against a graph");
    cmd_verify->add_option("certificate", verify_cert,
                           "certificate or report JSON file")
        ->required();
    cmd_verify->add_option("graph", verify_graph, "graph file")->required();

    // list
    auto* cmd_list = app.add_subcommand("list", "list registry names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_list->parsed()) {
            for (const auto& name : snark::registry_names())
                std::cout << name << "\n";
            return 0;
        }

        if (cmd_construct->parsed()) {
            auto build = [&]() -> snark::Multipole {
                if (construct_name != "blowup" && construct_name != "semiblowup")
                    return snark::build_named(construct_name);
                if (construct_host.empty() || construct_cycles.empty())
                    throw std::runtime_error(
                        "blowup/semiblowup need --host and --cycles");
                snark::Multipole host = [&] {
                    std::ifstream probe(construct_host);
                    if (probe.good())
                        return snark::parse_graph_auto(slurp(construct_host));
                    return snark::build_named(construct_host);
                }();
                snark::CycleSelection sel;
                std::stringstream cycles(construct_cycles);
                std::string one;
                while (std::getline(cycles, one, ';')) {
                    std::vector<int> cycle;
                    std::stringstream vs(one);
                    std::string v;
                    while (std::getline(vs, v, ',')) cycle.push_back(std::stoi(v));
                    sel.cycles.push_back(std::move(cycle));
                }
                return construct_name == "blowup" ? snark::blowup(host, sel)
                                                  : snark::semiblowup(host, sel);
            };
            auto g = build();
            bool as_json = construct_json || !g.semiedges().empty() ||
                           ends_with(construct_out, ".json");
            std::string text =
                as_json ? snark::to_multipole_json(g) : snark::emit_graph6(g);
            if (construct_out.empty())
                std::cout << text << "\n";
            else
                spill(construct_out, text + "\n");
            return 0;
        }

        if (cmd_analyze->parsed()) {
            auto g = snark::parse_graph_auto(slurp(analyze_file));
            snark::AnalyzeOptions opt;
            if (all) opt = snark::AnalyzeOptions::all();
            opt.chromatic |= w_chi;
            opt.tau |= w_tau;
            opt.oddness |= w_odd;
            opt.r3 |= w_r3;
            opt.rho |= w_rho;
            opt.cdc |= w_cdc;
            opt.circumference |= w_circ;
            opt.cyclic_connectivity |= w_cyc;
            opt.budget_s = budget;
            opt.threads = threads;

            snark::PerfectMatchingSet cache;
            if (!matchings_cache.empty()) {
                std::ifstream probe(matchings_cache);
                if (probe.good()) {
                    cache = snark::matching_set_from_json(slurp(matchings_cache));
                    if (cache.subject == snark::subject_hash(g) && cache.complete)
                        opt.matching_cache = &cache;
                }
                if (!opt.matching_cache) {
                    cache = snark::enumerate_perfect_matchings(g);
                    spill(matchings_cache, snark::matching_set_to_json(cache));
                    opt.matching_cache = &cache;
                }
            }

            auto report = snark::analyze_graph(g, opt);
            if (analyze_out.empty())
                std::cout << report << "\n";
            else
                spill(analyze_out, report + "\n");
            return 0;
        }

        if (cmd_verify->parsed()) {
            auto g = snark::parse_graph_auto(slurp(verify_graph));
            auto doc = nlohmann::json::parse(slurp(verify_cert));
            std::vector<nlohmann::json> certs;
            if (doc.contains("certificates"))
                for (const auto& c : doc.at("certificates")) certs.push_back(c);
            else
                certs.push_back(doc);
            if (certs.empty()) {
                std::cerr << "no certificates found in input\n";
                return 2;
            }
            bool all_pass = true;
            for (const auto& c : certs) {
                auto outcome = snark::verify_certificate(c.dump(), g);
                std::cout << (outcome.pass ? "PASS" : "FAIL") << " "
                          << c.value("kind", "?");
                if (!outcome.pass) std::cout << ": " << outcome.reason;
                std::cout << "\n";
                all_pass &= outcome.pass;
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
