// Command-line front end: bootstrap runs, predictors, constructions,
// extremal search and the verification battery, all with JSON output.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cyclebp/constructions.hpp"
#include "cyclebp/graph6.hpp"
#include "cyclebp/numtheory.hpp"
#include "cyclebp/pattern.hpp"
#include "cyclebp/process.hpp"
#include "cyclebp/search.hpp"
#include "cyclebp/verify.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitSizeGuard = 3;

cyclebp::Graph parse_graph_spec(const std::string& spec) {
    if (spec.rfind("g6:", 0) == 0) return cyclebp::graph6_decode(spec.substr(3));
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw std::invalid_argument("cannot open graph file: " + spec.substr(5));
        std::string line;
        if (!std::getline(in, line)) throw std::invalid_argument("empty graph file: " + spec.substr(5));
        return cyclebp::graph6_decode(line);
    }
    return cyclebp::construct_from_spec(spec).graph;
}

std::string default_cache() {
    const char* env = std::getenv("CYCLEBP_CACHE");
    return env ? env : "";
}

void emit(const nlohmann::ordered_json& payload) { std::cout << payload.dump() << "\n"; }

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int run_verify_suite(const std::string& suite, int k, int r, int n, int nprime, int max_i,
                     const std::string& ks_csv, uint64_t seed, int samples,
                     const std::string& format) {
    using namespace cyclebp;
    std::vector<Report> reports;
    if (suite == "all") {
        reports = run_default_battery(seed);
    } else if (suite == "distance") {
        reports.push_back(check_distance_lemma(path(n).graph, k, max_i));
    } else if (suite == "union") {
        reports.push_back(
            check_union_decomposition({path(n).graph, cycle(k).graph}, Pattern::cycle(k)));
    } else if (suite == "bipartite") {
        reports.push_back(check_bipartite_preservation(path(n).graph, k));
    } else if (suite == "small") {
        reports.push_back(check_small_lemmas(k, seed, samples));
    } else if (suite == "path-lemmas") {
        reports.push_back(check_path_lemmas(nprime, k, max_i));
    } else if (suite == "path-props") {
        reports.push_back(check_path_props(nprime, k));
    } else if (suite == "pdelta-even") {
        reports.push_back(check_pdelta_even_edges(nprime, k, max_i));
    } else if (suite == "theorem-cycles") {
        reports.push_back(check_theorem_cycles(k, r, seed, samples));
    } else if (suite == "multiple-cycles") {
        reports.push_back(check_multiple_cycles(parse_int_list(ks_csv), n, seed, samples));
    } else {
        throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");
    }

    bool all_pass = true;
    for (const auto& rep : reports)
        if (rep.verdict == "fail") all_pass = false;
    if (format == "csv") {
        std::cout << "id,params,verdict,millis\n";
        for (const auto& rep : reports) std::cout << rep.csv_row() << "\n";
    } else if (format != "quiet") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["reports"] = nlohmann::ordered_json::array();
        for (const auto& rep : reports) j["reports"].push_back(rep.to_json());
        emit(j);
    }
    std::cerr << (all_pass ? "verify: all checks passed (" : "verify: FAILURES (")
              << reports.size() << " reports)\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bootstrap percolation toolkit for cycle patterns"};
    app.require_subcommand(1);

    std::string rule_spec = "cycle:3", graph_spec = "path:4", format = "json";
    long long max_rounds = -1;
    auto* cmd_run = app.add_subcommand("run", "run the process to stabilisation");
    cmd_run->add_option("--rule", rule_spec, "pattern, e.g. cycle:5, union:4,3, generic:<graph6>");
    cmd_run->add_option("--graph", graph_spec, "construction spec, g6:<code> or file:<path>");
    cmd_run->add_option("--max-rounds", max_rounds, "round budget, default n^2");
    cmd_run->add_option("--format", format, "json | quiet");

    long long pred_n = 0;
    int pred_k = 0;
    auto* cmd_predict = app.add_subcommand("predict", "closed-form round predictor");
    cmd_predict->add_option("--n", pred_n, "number of vertices")->required();
    cmd_predict->add_option("--k", pred_k, "cycle length")->required();

    long long fx = 0, fy = 0;
    auto* cmd_frob = app.add_subcommand("frobenius", "Frobenius number of two coprime integers");
    cmd_frob->add_option("x", fx)->required();
    cmd_frob->add_option("y", fy)->required();

    std::string cons_spec, cons_out;
    auto* cmd_construct = app.add_subcommand("construct", "emit a named construction as graph6");
    cmd_construct->add_option("spec", cons_spec, "e.g. pdelta:13, kbip_plus:5, unionwit:4,3,50")
        ->required();
    cmd_construct->add_option("--out", cons_out, "write the graph6 line to a file");

    int search_n = 0, workers = 0;
    long long sampled = 0;
    bool connected_only = false, dedup = false;
    uint64_t seed = 0;
    std::string cache_path = default_cache();
    std::string search_rule = "cycle:3";
    auto* cmd_search = app.add_subcommand("search", "maximum running time over starting graphs");
    cmd_search->add_option("--n", search_n, "number of vertices")->required();
    cmd_search->add_option("--rule", search_rule, "pattern spec");
    cmd_search->add_flag("--connected", connected_only, "restrict to connected graphs (sizes <= n)");
    cmd_search->add_flag("--dedup", dedup, "canonical representatives only");
    cmd_search->add_option("--sampled", sampled, "sample count; 0 = exhaustive");
    cmd_search->add_option("--seed", seed, "sampling seed");
    cmd_search->add_option("--workers", workers, "parallel scan width, default cores");
    cmd_search->add_option("--cache", cache_path, "JSON-lines result cache (env CYCLEBP_CACHE)");

    std::string suite = "all", ks_csv = "4,3";
    int vk = 3, vr = 3, vn = 20, vnprime = 30, vmax_i = 3, vsamples = 30;
    uint64_t vseed = 0;
    std::string vformat = "json";
    auto* cmd_verify = app.add_subcommand("verify", "instance-level checks with witness reports");
    cmd_verify->add_option("suite", suite,
                           "all | distance | union | bipartite | small | path-lemmas | "
                           "path-props | pdelta-even | theorem-cycles | multiple-cycles");
    cmd_verify->add_option("--k", vk);
    cmd_verify->add_option("--r", vr);
    cmd_verify->add_option("--n", vn);
    cmd_verify->add_option("--nprime", vnprime);
    cmd_verify->add_option("--max-i", vmax_i);
    cmd_verify->add_option("--ks", ks_csv, "cycle lengths, comma separated");
    cmd_verify->add_option("--seed", vseed);
    cmd_verify->add_option("--samples", vsamples);
    cmd_verify->add_option("--format", vformat, "json | csv | quiet");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*cmd_run) {
            cyclebp::Pattern rule = cyclebp::Pattern::parse(rule_spec);
            cyclebp::Graph g = parse_graph_spec(graph_spec);
            cyclebp::ProcessTrace trace = cyclebp::run(g, rule, max_rounds);
            if (format != "quiet") {
                nlohmann::ordered_json j;
                j["schema"] = 1;
                j.update(trace.to_json());
                emit(j);
            }
            std::cerr << "tau = " << trace.tau << "\n";
        } else if (*cmd_predict) {
            int r = cyclebp::predict_r(pred_n, pred_k);
            nlohmann::ordered_json j;
            j["schema"] = 1;
            j["n"] = pred_n;
            j["k"] = pred_k;
            j["r"] = r;
            j["M"] = cyclebp::predict_M(pred_n, pred_k);
            emit(j);
            std::cerr << "r(" << pred_n << ", " << pred_k << ") = " << r << "\n";
        } else if (*cmd_frob) {
            nlohmann::ordered_json j;
            j["schema"] = 1;
            j["x"] = fx;
            j["y"] = fy;
            j["frobenius"] = cyclebp::frobenius(fx, fy);
            emit(j);
            std::cerr << "F(" << fx << ", " << fy << ") = " << j["frobenius"] << "\n";
        } else if (*cmd_construct) {
            cyclebp::NamedGraph named = cyclebp::construct_from_spec(cons_spec);
            std::string code = cyclebp::graph6_encode(named.graph);
            if (!cons_out.empty()) {
                std::ofstream out(cons_out);
                if (!out) throw std::runtime_error("cannot open output file: " + cons_out);
                out << code << "\n";
            }
            nlohmann::ordered_json j;
            j["schema"] = 1;
            j["spec"] = cons_spec;
            j["n"] = named.graph.vertex_count();
            j["edges"] = named.graph.edge_count();
            j["graph6"] = code;
            j["labels"] = named.labels;
            emit(j);
            std::cerr << cons_spec << ": " << named.graph.vertex_count() << " vertices\n";
        } else if (*cmd_search) {
            cyclebp::Pattern rule = cyclebp::Pattern::parse(search_rule);
            cyclebp::SearchResult result =
                sampled > 0
                    ? cyclebp::max_tau_sampled(search_n, rule, sampled, seed)
                    : cyclebp::max_tau_exhaustive_cached(cache_path, search_n, rule,
                                                         connected_only, dedup, workers);
            nlohmann::ordered_json j;
            j["schema"] = 1;
            j.update(result.to_json());
            emit(j);
            std::cerr << "max tau = " << result.max_tau << " over " << result.enumerated
                      << " graphs\n";
        } else if (*cmd_verify) {
            return run_verify_suite(suite, vk, vr, vn, vnprime, vmax_i, ks_csv, vseed, vsamples,
                                    vformat);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return std::string(e.what()).find("size guard") != std::string::npos ? kExitSizeGuard
                                                                             : kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
