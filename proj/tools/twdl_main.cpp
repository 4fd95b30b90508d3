#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twdl/bounds.hpp"
#include "twdl/extraction.hpp"
#include "twdl/generators.hpp"
#include "twdl/graph.hpp"
#include "twdl/interval.hpp"
#include "twdl/io.hpp"
#include "twdl/oracles.hpp"
#include "twdl/rational.hpp"
#include "twdl/verify.hpp"

namespace {

using nlohmann::json;
using namespace twdl;

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(std::stoll(text));
        }
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("expected an integer or p/q fraction, got '" + text + "'");
    }
}

DegreeProfile parse_profile(const std::string& text) {
    // "1:4,3:2" means four vertices of degree 1 and two of degree 3.
    DegreeProfile profile;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("profile entries must look like degree:count");
        }
        try {
            int degree = std::stoi(item.substr(0, colon));
            long long count = std::stoll(item.substr(colon + 1));
            profile.counts[degree] += count;
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad profile entry '" + item + "'");
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (profile.counts.empty()) {
        throw std::invalid_argument("empty degree profile");
    }
    return profile;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        write_text_file(out_path, text);
    }
}

json bound_json(const BoundValue& b) {
    json j;
    j["value"] = b.value.str();
    j["value_num"] = b.value.num();
    j["value_den"] = b.value.den();
    j["applicable"] = b.applicable;
    if (!b.reason.empty()) {
        j["reason"] = b.reason;
    }
    return j;
}

struct GenOptions {
    std::string family;
    std::string out;
    int n = 0;
    int k = 1;
    int d = 0;
    int s = 0;
    int n0 = 0;
    std::uint64_t seed = 0;
};

int run_gen(const GenOptions& opt) {
    if (opt.family == "interval-path-power" || opt.family == "interval-random") {
        IntervalModel model = opt.family == "interval-path-power"
                                  ? gen_interval_path_power(opt.n, opt.k)
                                  : gen_interval_random(opt.n, opt.k, opt.seed);
        write_interval_model_file(opt.out, model);
        Graph g = intersection_graph(model);
        std::cout << opt.family << ": " << model.size() << " intervals, clique number "
                  << clique_number_interval(model) << ", " << g.edge_count()
                  << " intersection edges -> " << opt.out << "\n";
        return 0;
    }

    Graph g;
    std::string detail;
    if (opt.family == "path-power") {
        g = gen_path_power(opt.n, opt.k);
    } else if (opt.family == "kset") {
        g = gen_kset_extremal(opt.k, opt.d, opt.s);
        detail = ", |V_d| = " + std::to_string(vd_set(g, opt.d).size());
    } else if (opt.family == "block") {
        BlockParams params = block_ktree_params(opt.k, opt.d, opt.n0);
        g = gen_block_ktree(opt.k, opt.d, opt.n0);
        detail = ", r = " + std::to_string(params.r)
               + ", |V_d| = " + std::to_string(vd_set(g, opt.d).size());
    } else if (opt.family == "outerplanar") {
        g = gen_outerplanar_extremal(opt.d, opt.n0);
        detail = ", |V_d| = " + std::to_string(vd_set(g, opt.d).size());
    } else if (opt.family == "subdivided-tree") {
        if (opt.s < 1) {
            throw std::invalid_argument("subdivided-tree needs --s >= 1 internal vertices");
        }
        std::vector<int> parents(static_cast<std::size_t>(opt.s - 1));
        for (int i = 1; i < opt.s; ++i) {
            parents[static_cast<std::size_t>(i - 1)] = i - 1;
        }
        Graph shape = regular_tree_from_internal(opt.d, parents);
        g = gen_subdivided_regular_tree(opt.d, shape);
        detail = ", shape vertices = " + std::to_string(shape.vertex_count());
    } else if (opt.family == "random-ktree") {
        g = gen_random_ktree(opt.k, opt.n, opt.seed);
    } else {
        throw std::invalid_argument("unknown family: " + opt.family);
    }
    write_edge_list_file(opt.out, g);
    std::cout << opt.family << ": " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges" << detail << " -> " << opt.out << "\n";
    return 0;
}

struct ExtractOptions {
    std::string input;
    std::string out;
    int k = 0;
    int t = -1;
    int d = -1;
    bool interval = false;
    bool as_json = false;
};

int run_extract(const ExtractOptions& opt) {
    if (opt.interval) {
        IntervalModel model = read_interval_model_file(opt.input);
        Graph g = intersection_graph(model);
        std::vector<int> mis = interval_bounded_degree_mis(model, opt.k);
        std::sort(mis.begin(), mis.end());
        int max_degree = 0;
        for (int v : mis) {
            max_degree = std::max(max_degree, g.degree(v));
        }
        if (opt.as_json) {
            json j;
            j["mode"] = "interval";
            j["n"] = model.size();
            j["k"] = opt.k;
            j["size"] = mis.size();
            j["max_degree"] = max_degree;
            j["degree_cap"] = 2 * opt.k;
            j["vertices"] = mis;
            emit(j, opt.out);
        } else {
            std::cout << "independent set of size " << mis.size() << " (degrees <= "
                      << max_degree << "):";
            for (int v : mis) {
                std::cout << ' ' << v;
            }
            std::cout << "\n";
            if (!opt.out.empty()) {
                json j;
                j["vertices"] = mis;
                write_text_file(opt.out, j.dump(2) + "\n");
            }
        }
        return 0;
    }

    Graph g = read_edge_list_file(opt.input);
    int t = opt.t < 0 ? opt.k : opt.t;
    std::vector<int> vertices;
    int witness_width = 0;
    BoundValue bound;
    bool bound_applicable = true;
    if (opt.d >= 0) {
        DegreeTSetResult r = extract_degree_d_tset(g, opt.k, t, opt.d);
        vertices = r.tset.vertices;
        witness_width = r.tset.witness.width;
        bound = bound_dtset_lower(g.vertex_count(), opt.k, t, opt.d);
        bound_applicable = r.bound_applicable && bound.applicable;
    } else {
        TSetResult r = extract_tset(g, opt.k, t);
        vertices = r.vertices;
        witness_width = r.witness.width;
        bound = bound_tset(g.vertex_count(), opt.k, t);
    }
    std::sort(vertices.begin(), vertices.end());

    if (opt.as_json) {
        json j;
        j["mode"] = opt.d >= 0 ? "degree-bounded" : "treewidth-only";
        j["n"] = g.vertex_count();
        j["k"] = opt.k;
        j["t"] = t;
        if (opt.d >= 0) {
            j["d"] = opt.d;
        }
        j["size"] = vertices.size();
        j["witness_width"] = witness_width;
        j["bound"] = bound.value.str();
        j["bound_num"] = bound.value.num();
        j["bound_den"] = bound.value.den();
        j["bound_applicable"] = bound_applicable;
        j["vertices"] = vertices;
        emit(j, opt.out);
    } else {
        std::cout << "induced subgraph on " << vertices.size() << " of " << g.vertex_count()
                  << " vertices, elimination width " << witness_width << " (guarantee "
                  << bound.value.str() << "):";
        for (int v : vertices) {
            std::cout << ' ' << v;
        }
        std::cout << "\n";
        if (!opt.out.empty()) {
            json j;
            j["vertices"] = vertices;
            write_text_file(opt.out, j.dump(2) + "\n");
        }
    }
    return 0;
}

struct BoundsOptions {
    std::string formula;
    long long n = 0;
    int k = 0;
    int t = 0;
    int d = 0;
    int delta = 0;
    std::string avg;
    std::string epsilon;
    std::string profile;
    std::string out;
};

int run_bounds(const BoundsOptions& opt) {
    json j;
    j["formula"] = opt.formula;
    json params;
    BoundValue b;
    if (opt.formula == "tset") {
        params = {{"n", opt.n}, {"k", opt.k}, {"t", opt.t}};
        b = bound_tset(opt.n, opt.k, opt.t);
    } else if (opt.formula == "kset-lower") {
        params = {{"n", opt.n}, {"k", opt.k}, {"d", opt.d}};
        b = bound_kset_lower(opt.n, opt.k, opt.d);
    } else if (opt.formula == "kset-upper") {
        params = {{"n", opt.n}, {"k", opt.k}, {"d", opt.d}};
        b = bound_kset_upper(opt.n, opt.k, opt.d);
    } else if (opt.formula == "vd-lower") {
        if (opt.avg.empty()) {
            throw std::invalid_argument("vd-lower needs --avg (average degree, integer or p/q)");
        }
        Rational avg = parse_rational(opt.avg);
        params = {{"n", opt.n}, {"delta", opt.delta}, {"avg", avg.str()}, {"d", opt.d}};
        b = bound_vd_lower(opt.n, opt.delta, avg, opt.d);
    } else if (opt.formula == "dtset-lower") {
        params = {{"n", opt.n}, {"k", opt.k}, {"t", opt.t}, {"d", opt.d}};
        b = bound_dtset_lower(opt.n, opt.k, opt.t, opt.d);
    } else if (opt.formula == "dtset-lower-sharp") {
        params = {{"n", opt.n}, {"k", opt.k}, {"t", opt.t}, {"d", opt.d}};
        b = BoundValue{bound_dtset_lower_sharp(opt.n, opt.k, opt.t, opt.d), true, ""};
    } else if (opt.formula == "dtset-upper") {
        params = {{"n", opt.n}, {"k", opt.k}, {"t", opt.t}, {"d", opt.d}};
        BlockUpperBound ub = bound_dtset_upper(opt.n, opt.k, opt.t, opt.d);
        b = ub.bound;
        j["r"] = ub.r;
        j["n0"] = ub.n0;
        j["count"] = ub.count;
    } else if (opt.formula == "tree") {
        params = {{"n", opt.n}, {"d", opt.d}};
        TreeBound tb = bound_tree(opt.n, opt.d);
        b = tb.bound;
        j["extremal_exists"] = tb.extremal_exists;
    } else if (opt.formula == "indset-trees") {
        if (opt.profile.empty()) {
            throw std::invalid_argument("indset-trees needs --profile (degree:count,...)");
        }
        DegreeProfile profile = parse_profile(opt.profile);
        params = {{"profile", opt.profile}, {"d", opt.d}};
        b = bound_indset_trees(profile, opt.d);
    } else if (opt.formula == "regular-tree-leaves") {
        params = {{"n", opt.n}, {"d", opt.d}};
        b = regular_tree_leaves(opt.n, opt.d);
    } else if (opt.formula == "outerplanar-lower") {
        params = {{"n", opt.n}, {"d", opt.d}};
        b = bound_outerplanar_lower(opt.n, opt.d);
    } else if (opt.formula == "outerplanar-upper") {
        params = {{"n", opt.n}, {"d", opt.d}};
        b = bound_outerplanar_upper(opt.n, opt.d);
    } else if (opt.formula == "epsilon-degree") {
        if (opt.epsilon.empty()) {
            throw std::invalid_argument("epsilon-degree needs --epsilon (p/q in (0,1))");
        }
        Rational eps = parse_rational(opt.epsilon);
        params = {{"epsilon", eps.str()}, {"k", opt.k}, {"t", opt.t}};
        b = BoundValue{epsilon_degree_threshold(eps, opt.k, opt.t), true, ""};
    } else {
        throw std::invalid_argument("unknown formula: " + opt.formula);
    }
    j["params"] = params;
    json bj = bound_json(b);
    j.update(bj);
    emit(j, opt.out);
    return 0;
}

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 0;
    double budget = -1;
    std::string out;
    bool as_json = false;
    std::string oracle_file;
    int t = -1;
    int d = -1;
};

int run_verify(const VerifyOptions& opt) {
    if (!opt.oracle_file.empty()) {
        Graph g = read_edge_list_file(opt.oracle_file);
        OracleResult r;
        std::string mode;
        if (opt.d >= 0) {
            r = oracle_alpha_d_t(g, opt.d, opt.t < 0 ? 0 : opt.t);
            mode = "alpha_d_t";
        } else if (opt.t >= 0) {
            r = oracle_alpha_t(g, opt.t);
            mode = "alpha_t";
        } else {
            r = oracle_alpha(g);
            mode = "alpha";
        }
        std::sort(r.witness.begin(), r.witness.end());
        json j;
        j["mode"] = mode;
        j["n"] = g.vertex_count();
        if (opt.t >= 0 || opt.d >= 0) {
            j["t"] = opt.d >= 0 && opt.t < 0 ? 0 : opt.t;
        }
        if (opt.d >= 0) {
            j["d"] = opt.d;
        }
        j["value"] = r.value;
        j["witness"] = r.witness;
        j["explored"] = r.explored;
        emit(j, opt.out);
        return 0;
    }

    VerifyReport report = run_suite(opt.suite, opt.seed, opt.budget);
    if (!opt.out.empty()) {
        write_text_file(opt.out, report_to_json(report));
    }
    if (opt.as_json) {
        std::cout << report_to_json(report);
    } else {
        std::cout << "suite " << report.suite << " seed " << report.seed << ": "
                  << report.pass_count() << " pass, " << report.fail_count() << " fail, "
                  << report.skip_count() << " skip (" << report.records.size()
                  << " checks)\n";
        for (const VerifyRecord& r : report.records) {
            if (r.status == "fail") {
                std::cout << "FAIL " << r.theorem << " [" << r.instance << "] expected "
                          << r.expected << ", observed " << r.observed;
                if (!r.note.empty()) {
                    std::cout << " (" << r.note << ")";
                }
                std::cout << "\n";
            }
        }
    }
    if (report.fail_count() > 0) {
        return 1;
    }
    if (report.skip_count() > 0) {
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"treewidth/degree-bounded induced subgraph toolkit"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate a graph or interval family");
    gen->add_option("--family", gen_opt.family, "family name")
        ->required()
        ->check(CLI::IsMember({"path-power", "kset", "block", "outerplanar", "subdivided-tree",
                               "random-ktree", "interval-path-power", "interval-random"}));
    gen->add_option("--n", gen_opt.n, "vertex or interval count");
    gen->add_option("--k", gen_opt.k, "clique/backbone parameter");
    gen->add_option("--d", gen_opt.d, "degree threshold");
    gen->add_option("--s", gen_opt.s, "family size parameter");
    gen->add_option("--n0", gen_opt.n0, "blocks per strip");
    gen->add_option("--seed", gen_opt.seed, "random seed");
    gen->add_option("--out", gen_opt.out, "output file")->required();

    ExtractOptions ex_opt;
    CLI::App* extract = app.add_subcommand("extract", "extract a bounded-width induced subgraph");
    extract->add_option("input", ex_opt.input, "edge list or interval file")->required();
    extract->add_option("--k", ex_opt.k, "treewidth of the input (k-tree parameter)")->required();
    extract->add_option("--t", ex_opt.t, "target treewidth (default: k)");
    extract->add_option("--d", ex_opt.d, "degree cap (omit for no cap)");
    extract->add_flag("--interval", ex_opt.interval, "treat input as an interval model");
    extract->add_flag("--json", ex_opt.as_json, "print a JSON record");
    extract->add_option("--out", ex_opt.out, "also write the result here");

    BoundsOptions b_opt;
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate a closed-form bound exactly");
    bounds->add_option("--formula", b_opt.formula, "which bound")
        ->required()
        ->check(CLI::IsMember({"tset", "kset-lower", "kset-upper", "vd-lower", "dtset-lower",
                               "dtset-lower-sharp", "dtset-upper", "tree", "indset-trees",
                               "regular-tree-leaves", "outerplanar-lower", "outerplanar-upper",
                               "epsilon-degree"}));
    bounds->add_option("--n", b_opt.n, "vertex count");
    bounds->add_option("--k", b_opt.k, "clique/backbone parameter");
    bounds->add_option("--t", b_opt.t, "target treewidth");
    bounds->add_option("--d", b_opt.d, "degree threshold");
    bounds->add_option("--delta", b_opt.delta, "minimum degree (vd-lower)");
    bounds->add_option("--avg", b_opt.avg, "average degree, integer or p/q (vd-lower)");
    bounds->add_option("--epsilon", b_opt.epsilon, "loss fraction p/q (epsilon-degree)");
    bounds->add_option("--profile", b_opt.profile, "degree:count,... (indset-trees)");
    bounds->add_option("--out", b_opt.out, "also write the JSON here");

    VerifyOptions v_opt;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite or an oracle");
    verify->add_option("--suite", v_opt.suite,
                       "all, tset, kset, clique-degrees, bounded-treewidth, dtset, trees, "
                       "outerplanar, interval");
    verify->add_option("--seed", v_opt.seed, "master seed for randomized instances");
    verify->add_option("--budget", v_opt.budget, "wall-clock budget in seconds");
    verify->add_option("--out", v_opt.out, "write the JSON report here");
    verify->add_flag("--json", v_opt.as_json, "print the JSON report to stdout");
    verify->add_option("--oracle", v_opt.oracle_file, "run the exact oracle on this edge list");
    verify->add_option("--t", v_opt.t, "treewidth cap for the oracle");
    verify->add_option("--d", v_opt.d, "degree cap for the oracle");

    int exit_code = 0;
    gen->callback([&] { exit_code = run_gen(gen_opt); });
    extract->callback([&] { exit_code = run_extract(ex_opt); });
    bounds->callback([&] { exit_code = run_bounds(b_opt); });
    verify->callback([&] { exit_code = run_verify(v_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
