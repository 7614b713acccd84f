#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridprod/constructions.hpp"
#include "gridprod/graph.hpp"
#include "gridprod/minor_model.hpp"
#include "gridprod/oracle.hpp"
#include "gridprod/serialize.hpp"
#include "gridprod/tree_analysis.hpp"

using namespace gridprod;
using nlohmann::json;

namespace {

// Bad user input: exit 2. Anything else that throws is a real failure
// (a construction emitted an invalid certificate, I/O broke): exit 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int log_level() {
    const char* e = std::getenv("GM_LOG");
    if (!e) return 0;
    std::string s = e;
    if (s == "debug") return 2;
    if (s == "info") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[gridprod] " << msg << "\n";
}

Graph parse_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw UsageError("graph spec '" + spec + "': expected kind:arg");
    std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
    try {
        if (kind == "path") return make_path(std::stoi(arg));
        if (kind == "star") return make_star(std::stoi(arg));
        if (kind == "grid") return make_grid(std::stoi(arg));
        if (kind == "substar") {
            auto x = arg.find('x');
            if (x == std::string::npos) throw UsageError("substar spec wants LxP");
            return make_subdivided_star(std::stoi(arg.substr(0, x)),
                                        std::stoi(arg.substr(x + 1)));
        }
        if (kind == "file") {
            std::ifstream in(arg);
            if (!in) throw UsageError("cannot open graph file '" + arg + "'");
            json j;
            in >> j;
            return graph_from_json(j);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError("graph spec '" + spec + "': " + e.what());
    }
    throw UsageError("graph spec '" + spec + "': unknown kind '" + kind + "'");
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file '" + out + "'");
    f << text;
    log_info("wrote " + out);
}

std::string answer_str(Answer a) {
    switch (a) {
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
        default: return "budget-exhausted";
    }
}

// Validation clauses as named in the certificate docs: (i) branch sets
// nonempty and pairwise disjoint, (ii) each induces a connected
// subgraph, (iii) every pattern edge has a host edge between its sets.
std::string clause_of(ValidationReport::Kind k) {
    switch (k) {
        case ValidationReport::Kind::NotDisjoint: return "(i)";
        case ValidationReport::Kind::NotConnected: return "(ii)";
        case ValidationReport::Kind::EdgeUncovered: return "(iii)";
        default: return "malformed";
    }
}

// Two-color each component; throws on odd cycles.
std::pair<std::vector<Vertex>, std::vector<Vertex>> bipartition(const Graph& g) {
    std::vector<int> side(g.num_vertices(), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    throw UsageError("graph is not bipartite");
                }
            }
        }
    }
    std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        (side[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

// Spider with `legs` arms of order `len` hanging off vertex 0; the arms
// are certified pairwise completely unrelated vertical paths.
std::pair<RootedTree, VerticalPathSet> make_spider(int legs, int len) {
    std::vector<Edge> edges;
    std::vector<VerticalPath> ps;
    int next = 1;
    for (int a = 0; a < legs; ++a) {
        VerticalPath vp;
        int prev = 0;
        for (int j = 0; j < len; ++j) {
            edges.push_back({std::min(prev, next), std::max(prev, next)});
            vp.vertices.push_back(next);
            prev = next++;
        }
        ps.push_back(vp);
    }
    RootedTree t(Graph(next, edges), 0);
    auto certified = VerticalPathSet::certify(t, ps);
    return {t, certified};
}

json certificate_json(const std::string& lemma, const GridModelCertificate& cert) {
    json params = json::object();
    for (const auto& [key, val] : cert.parameters) params[key] = val;
    return json{{"lemma", lemma},     {"kind", "model"},
                {"k", cert.k},        {"provenance", cert.provenance},
                {"parameters", params}, {"model", model_to_json(cert.model)}};
}

// ---- sweep ----

Graph family_tree(const std::string& family, int n, std::uint64_t seed) {
    if (n < 1) throw UsageError("sweep sizes must be positive");
    if (family == "random-tree") return random_tree(n, seed);
    if (family == "path") return make_path(n);
    if (family == "star") return n == 1 ? make_path(1) : make_star(n - 1);
    if (family == "subdivided-star") {
        // Spider on exactly n vertices with near-equal arms.
        if (n <= 2) return make_path(n);
        int legs = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n - 1))));
        std::vector<Edge> edges;
        int next = 1;
        for (int a = 0; a < legs; ++a) {
            int len = (n - 1) / legs + (a < (n - 1) % legs ? 1 : 0);
            int prev = 0;
            for (int j = 0; j < len; ++j) {
                edges.push_back({std::min(prev, next), std::max(prev, next)});
                prev = next++;
            }
        }
        return Graph(next, edges);
    }
    if (family == "caterpillar") {
        if (n <= 3) return make_path(n);
        std::mt19937_64 rng(seed);
        int spine = std::uniform_int_distribution<int>((n + 1) / 2, n - 1)(rng);
        std::vector<Edge> edges;
        for (int v = 1; v < spine; ++v) edges.push_back({v - 1, v});
        for (int v = spine; v < n; ++v) {
            int at = std::uniform_int_distribution<int>(0, spine - 1)(rng);
            edges.push_back({at, v});
        }
        return Graph(n, edges);
    }
    throw UsageError("unknown family '" + family + "'");
}

struct SweepRow {
    std::string family;
    int n;
    std::uint64_t seed;
    int k_achieved;
    double sqrt_n, ratio;
    bool validated;
    long long elapsed_ms;
};

SweepRow sweep_one(const std::string& family, const std::string& construction, int n,
                   std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    int k = 0;
    bool valid = false;
    if (construction == "lower-bound") {
        Graph g1 = family_tree(family, n, seed);
        Graph g2 = family_tree(family, n, seed ^ 0x9e3779b97f4a7c15ULL);
        auto cert = omega_sqrt_n_grid(g1, g2);
        k = cert.k;
        valid = validate_model(cert.model).ok();
    } else if (construction == "star-tree-cart") {
        auto cert = grid_in_star_tree_cartesian(family_tree(family, n, seed), make_star(n + 1));
        k = cert.k;
        valid = validate_model(cert.model).ok();
    } else if (construction == "star-path-strong") {
        auto cert = grid_in_star_path_strong(n);
        k = cert.k;
        valid = validate_model(cert.model).ok();
    } else if (construction == "lex-embed") {
        auto e = grid_subgraph_in_P3_lex_path(n);
        k = static_cast<int>(std::sqrt(3.0 * n - 2));
        valid = validate_embedding(e).ok();
    } else {
        throw UsageError("unknown construction '" + construction + "'");
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    double sq = std::sqrt(static_cast<double>(n));
    return {family, n, seed, k, sq, k / sq, valid, ms};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid minors in graph products: constructions, certificates, exact oracles"};
    app.require_subcommand(1);

    std::string out, format = "json";
    app.add_option("--out", out, "write output to this file instead of stdout");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "csv"}));
    long long budget_nodes = SearchBudget{}.max_nodes;
    double budget_secs = SearchBudget{}.time_limit_s;
    app.add_option("--budget-nodes,--max-nodes", budget_nodes, "search node budget");
    app.add_option("--budget-secs,--time-limit-s", budget_secs, "search time budget (s)");

    // product
    auto* product = app.add_subcommand("product", "emit a graph product");
    std::string f1, f2, kind = "cartesian";
    product->add_option("factor1", f1, "first factor spec")->required();
    product->add_option("factor2", f2, "second factor spec")->required();
    product->add_option("--kind", kind, "product kind")
        ->check(CLI::IsMember({"cartesian", "strong", "lex"}));

    // construct
    auto* construct = app.add_subcommand("construct", "run a construction, emit a certificate");
    std::string lemma, c_graph, c_g1, c_g2, c_star, c_tree;
    int c_n = 0, c_s = 2, c_p = 1;
    construct->add_option("lemma", lemma, "construction name")
        ->required()
        ->check(CLI::IsMember({"clique", "star-times-star", "lower-bound", "bipartite",
                               "star-tree-cart", "star-path-strong", "lex-embed", "bramble"}));
    construct->add_option("--n", c_n, "size parameter");
    construct->add_option("--s", c_s, "grid block count parameter");
    construct->add_option("--p", c_p, "grid block side parameter");
    construct->add_option("--graph", c_graph, "input graph spec");
    construct->add_option("--g1", c_g1, "first factor spec");
    construct->add_option("--g2", c_g2, "second factor spec");
    construct->add_option("--star", c_star, "star factor spec override");
    construct->add_option("--tree", c_tree, "tree factor spec override");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a certificate from scratch");
    std::string cert_file;
    verify->add_option("file", cert_file, "certificate JSON file")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "run an exact solver");
    std::string task, o_graph, o_host, o_pattern, o_bramble;
    oracle->add_option("task", task, "oracle task")
        ->required()
        ->check(CLI::IsMember({"gm", "tw", "minor", "fvs", "bramble-order"}));
    oracle->add_option("--graph", o_graph, "input graph spec (gm/tw/fvs)");
    oracle->add_option("--host", o_host, "host graph spec (minor)");
    oracle->add_option("--pattern", o_pattern, "pattern graph spec (minor)");
    oracle->add_option("--bramble", o_bramble, "bramble JSON file (bramble-order)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "experiment sweep, CSV output");
    std::string family = "random-tree", construction = "lower-bound";
    std::vector<int> sizes;
    std::vector<std::uint64_t> seeds{1};
    sweep->add_option("--family", family, "tree family")
        ->check(CLI::IsMember(
            {"random-tree", "path", "star", "subdivided-star", "caterpillar"}));
    sweep->add_option("--sizes", sizes, "tree orders")->required();
    sweep->add_option("--seeds,--seed", seeds, "random seeds");
    sweep->add_option("--construction", construction, "construction to sweep")
        ->check(CLI::IsMember(
            {"lower-bound", "star-tree-cart", "star-path-strong", "lex-embed"}));

    // Global flags (--out, --format, budgets) may follow the subcommand.
    for (CLI::App* sub : {product, construct, verify, oracle, sweep}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        SearchBudget budget;
        budget.max_nodes = budget_nodes;
        budget.time_limit_s = budget_secs;

        if (*product) {
            Graph a = parse_graph_spec(f1), b = parse_graph_spec(f2);
            Graph g = kind == "cartesian" ? cartesian_product(a, b)
                      : kind == "strong"  ? strong_product(a, b)
                                          : lexicographic_product(a, b);
            log_info("product has " + std::to_string(g.num_vertices()) + " vertices");
            if (format == "dot")
                emit(graph_to_dot(g, b.num_vertices()), out);
            else
                emit(graph_to_json(g).dump(2) + "\n", out);
            return 0;
        }

        if (*construct) {
            json cert;
            ValidationReport report = ValidationReport::good();
            if (lemma == "clique") {
                if (c_graph.empty()) throw UsageError("clique needs --graph");
                MinorModel m = clique_in_product(parse_graph_spec(c_graph));
                report = validate_model(m);
                cert = {{"lemma", lemma}, {"kind", "model"}, {"model", model_to_json(m)}};
            } else if (lemma == "star-times-star") {
                auto [tree, paths] = make_spider(c_s * c_s, 6 * c_p);
                auto c = grid_in_tree_star_product(tree, paths, c_s, c_p);
                report = validate_model(c.model);
                cert = certificate_json(lemma, c);
            } else if (lemma == "lower-bound") {
                if (c_g1.empty() || c_g2.empty()) throw UsageError("lower-bound needs --g1 --g2");
                auto c = omega_sqrt_n_grid(parse_graph_spec(c_g1), parse_graph_spec(c_g2));
                report = validate_model(c.model);
                cert = certificate_json(lemma, c);
            } else if (lemma == "bipartite") {
                if (c_graph.empty()) throw UsageError("bipartite needs --graph");
                Graph g = parse_graph_spec(c_graph);
                auto [pa, pb] = bipartition(g);
                Graph star = c_star.empty() ? make_star(std::max<int>(1, pa.size()))
                                            : parse_graph_spec(c_star);
                Graph tree = c_tree.empty() ? make_path(std::max<int>(1, pb.size()))
                                            : parse_graph_spec(c_tree);
                MinorModel m = bipartite_in_star_tree(g, pa, pb, star, tree);
                report = validate_model(m);
                cert = {{"lemma", lemma}, {"kind", "model"}, {"model", model_to_json(m)}};
            } else if (lemma == "star-tree-cart") {
                if (c_n < 1 && c_tree.empty()) throw UsageError("star-tree-cart needs --n");
                Graph tree = c_tree.empty() ? make_path(c_n) : parse_graph_spec(c_tree);
                Graph star = c_star.empty() ? make_star(tree.num_vertices() + 1)
                                            : parse_graph_spec(c_star);
                auto c = grid_in_star_tree_cartesian(tree, star);
                report = validate_model(c.model);
                cert = certificate_json(lemma, c);
            } else if (lemma == "star-path-strong") {
                if (c_n < 1) throw UsageError("star-path-strong needs --n");
                auto c = grid_in_star_path_strong(c_n);
                report = validate_model(c.model);
                cert = certificate_json(lemma, c);
            } else if (lemma == "lex-embed") {
                if (c_n < 1) throw UsageError("lex-embed needs --n");
                SubgraphEmbedding e = grid_subgraph_in_P3_lex_path(c_n);
                report = validate_embedding(e);
                int k = static_cast<int>(std::sqrt(3.0 * c_n - 2));
                cert = {{"lemma", lemma},
                        {"kind", "embedding"},
                        {"k", k},
                        {"parameters", {{"n", c_n}}},
                        {"embedding", embedding_to_json(e)}};
            } else {  // bramble
                if (c_g1.empty() || c_g2.empty()) throw UsageError("bramble needs --g1 --g2");
                Graph g1 = parse_graph_spec(c_g1), g2 = parse_graph_spec(c_g2);
                Bramble b = product_bramble(g1, g2);
                report = validate_bramble(b);
                cert = {{"lemma", lemma}, {"kind", "bramble"}, {"bramble", bramble_to_json(b)}};
            }
            if (!report.ok()) {
                std::cerr << "construction produced an invalid certificate: " << report.message
                          << "\n";
                return 1;
            }
            emit(cert.dump(2) + "\n", out);
            return 0;
        }

        if (*verify) {
            std::ifstream in(cert_file);
            if (!in) throw UsageError("cannot open '" + cert_file + "'");
            json j;
            try {
                in >> j;
            } catch (const std::exception& e) {
                std::cerr << "malformed JSON: " << e.what() << "\n";
                return 2;
            }
            // Accept both bare objects and {"kind", ...} certificates.
            std::string kind_field;
            json payload = j;
            if (j.contains("kind")) {
                kind_field = j.at("kind").get<std::string>();
                payload = j.at(kind_field == "model"       ? "model"
                               : kind_field == "embedding" ? "embedding"
                                                           : "bramble");
            } else if (j.contains("branch_sets")) {
                kind_field = "model";
            } else if (j.contains("map")) {
                kind_field = "embedding";
            } else if (j.contains("sets")) {
                kind_field = "bramble";
            } else {
                std::cerr << "malformed certificate: unrecognized shape\n";
                return 2;
            }
            ValidationReport report = ValidationReport::good();
            try {
                if (kind_field == "model") {
                    MinorModel m = model_from_json(payload);
                    report = validate_model(m);
                    if (report.ok() && j.contains("k") &&
                        m.pattern != make_grid(j.at("k").get<int>()))
                        report = {ValidationReport::Kind::Malformed,
                                  "pattern is not the grid of the claimed side"};
                } else if (kind_field == "embedding") {
                    SubgraphEmbedding e = embedding_from_json(payload);
                    report = validate_embedding(e);
                    if (report.ok() && j.contains("k") &&
                        e.pattern != make_grid(j.at("k").get<int>()))
                        report = {ValidationReport::Kind::Malformed,
                                  "pattern is not the grid of the claimed side"};
                } else {
                    report = validate_bramble(bramble_from_json(payload));
                }
            } catch (const std::exception& e) {
                std::cerr << "malformed certificate: " << e.what() << "\n";
                return 2;
            }
            json result{{"kind", kind_field},
                        {"valid", report.ok()},
                        {"message", report.ok() ? "ok" : report.message}};
            if (!report.ok()) result["clause"] = clause_of(report.kind);
            emit(result.dump(2) + "\n", out);
            return report.ok() ? 0 : 1;
        }

        if (*oracle) {
            json result{{"task", task}};
            if (task == "gm") {
                if (o_graph.empty()) throw UsageError("gm needs --graph");
                GmResult r = gm_exact(parse_graph_spec(o_graph), budget);
                result["lower"] = r.lower;
                result["upper"] = r.upper;
                result["exact"] = r.exact;
                result["status"] = r.exact ? "ok" : "budget-exhausted";
                result["nodes"] = r.nodes;
                result["elapsed_s"] = r.elapsed_s;
                if (r.witness) result["witness"] = model_to_json(*r.witness);
            } else if (task == "tw") {
                if (o_graph.empty()) throw UsageError("tw needs --graph");
                TreewidthResult r = treewidth_exact(parse_graph_spec(o_graph), budget);
                result["status"] = r.answer == Answer::Yes ? "ok" : "budget-exhausted";
                if (r.answer == Answer::Yes) {
                    result["width"] = r.width;
                    result["elimination_order"] = r.elimination_order;
                }
            } else if (task == "minor") {
                if (o_host.empty() || o_pattern.empty())
                    throw UsageError("minor needs --host --pattern");
                Graph host = parse_graph_spec(o_host), pattern = parse_graph_spec(o_pattern);
                if (pattern.num_vertices() > host.num_vertices())
                    throw UsageError("pattern larger than host");
                MinorResult r = has_minor(host, pattern, budget);
                result["answer"] = answer_str(r.answer);
                result["status"] = r.answer == Answer::BudgetExhausted ? "budget-exhausted" : "ok";
                result["nodes"] = r.nodes;
                result["elapsed_s"] = r.elapsed_s;
                if (r.model) result["witness"] = model_to_json(*r.model);
            } else if (task == "fvs") {
                if (o_graph.empty()) throw UsageError("fvs needs --graph");
                FvsResult r = min_fvs(parse_graph_spec(o_graph), budget);
                result["status"] = r.answer == Answer::Yes ? "ok" : "budget-exhausted";
                if (r.answer == Answer::Yes) {
                    result["size"] = r.size;
                    result["witness"] = r.witness;
                }
            } else {  // bramble-order
                if (o_bramble.empty()) throw UsageError("bramble-order needs --bramble");
                std::ifstream in(o_bramble);
                if (!in) throw UsageError("cannot open '" + o_bramble + "'");
                json bj;
                in >> bj;
                BrambleOrderResult r = bramble_order(bramble_from_json(bj), budget);
                result["status"] = r.answer == Answer::Yes ? "ok" : "budget-exhausted";
                if (r.answer == Answer::Yes) {
                    result["order"] = r.order;
                    result["hitting_set"] = r.hitting_set;
                }
            }
            emit(result.dump(2) + "\n", out);
            return 0;
        }

        if (*sweep) {
            if (sizes.empty()) throw UsageError("sweep needs a nonempty --sizes list");
            std::vector<SweepRow> rows;
            for (int n : sizes)
                for (std::uint64_t seed : seeds) {
                    log_info("sweep " + family + " n=" + std::to_string(n) +
                             " seed=" + std::to_string(seed));
                    rows.push_back(sweep_one(family, construction, n, seed));
                }
            std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
                return std::tie(a.family, a.n, a.seed) < std::tie(b.family, b.n, b.seed);
            });
            std::ostringstream csv;
            csv << "family,n,seed,k_achieved,sqrt_n,ratio,validated,elapsed_ms\n";
            bool all_valid = true;
            for (const auto& r : rows) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.6f,%.6f", r.sqrt_n, r.ratio);
                csv << r.family << ',' << r.n << ',' << r.seed << ',' << r.k_achieved << ','
                    << buf << ',' << (r.validated ? "true" : "false") << ',' << r.elapsed_ms
                    << '\n';
                all_valid = all_valid && r.validated;
            }
            emit(csv.str(), out);
            if (!all_valid) {
                std::cerr << "sweep aborted: some certificate failed validation\n";
                return 1;
            }
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
