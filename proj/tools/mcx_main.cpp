// mcx command line: generators, exact homology, certified reduction, closed
// forms, and cross-checked verification runs. Talks to the engine through
// the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcx.h"

namespace {

using nlohmann::json;

struct GlobalOpts {
    std::string format = "text";
    long long seed = 0;
    bool has_seed = false;
    std::size_t budget = 0; // 0 = library default
};

[[noreturn]] void die(mcx_status status, const std::string& message) {
    json err{{"error",
              {{"code", static_cast<int>(status)},
               {"name", mcx_status_name(status)},
               {"message", message}}}};
    std::cerr << err.dump() << "\n";
    std::exit(2);
}

void check(mcx_status status) {
    if (status != MCX_OK) die(status, mcx_last_error());
}

std::string take_string(char* s) {
    if (!s) die(MCX_ERROR_INTERNAL, "missing string result");
    std::string out = s;
    mcx_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) die(MCX_ERROR_INVALID_ARGUMENT, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) die(MCX_ERROR_INVALID_ARGUMENT, "cannot write '" + out_path + "'");
    out << text << "\n";
}

// Input selection shared by the graph-consuming subcommands: either a graph
// file or a generated family.
struct SpecOpts {
    std::string in_file;
    std::string spec_file;
    std::string family;
    int t = std::numeric_limits<int>::min();
    int n = std::numeric_limits<int>::min();
    int k = 0;
    int l = 0;
    std::vector<int> s;
    std::vector<int> offsets;

    void attach(CLI::App* cmd, bool with_in) {
        if (with_in) cmd->add_option("--in", in_file, "graph JSON file ('-' for stdin)");
        cmd->add_option("--spec", spec_file, "tiling spec JSON file");
        cmd->add_option("--family", family,
                        "triangular|pentagonal|pentagonal_pendant|extended|path|cycle");
        cmd->add_option("--t", t, "tiling size for the regular families");
        cmd->add_option("--n", n, "vertex count for path/cycle");
        cmd->add_option("--s", s, "cycle lengths for extended tilings")->delimiter(',');
        cmd->add_option("--k", k, "first pendant path length");
        cmd->add_option("--l", l, "second pendant path length");
        cmd->add_option("--offsets", offsets, "glue offsets (one per cycle but the last)")
            ->delimiter(',');
    }

    bool has_generator() const { return !family.empty() || !spec_file.empty(); }

    json spec_json() const {
        if (!spec_file.empty()) {
            json j = json::parse(read_file(spec_file), nullptr, false);
            if (j.is_discarded()) die(MCX_ERROR_PARSE, "invalid JSON in '" + spec_file + "'");
            return j;
        }
        json j{{"family", family}};
        if (family == "extended") {
            j["s"] = s;
            j["k"] = k;
            j["l"] = l;
            if (!offsets.empty()) j["offsets"] = offsets;
        } else if (family == "path" || family == "cycle") {
            j["n"] = n;
        } else {
            j["t"] = t;
        }
        return j;
    }
};

using GraphHandle = std::unique_ptr<mcx_graph, decltype(&mcx_graph_free)>;

GraphHandle load_graph(const SpecOpts& opts) {
    mcx_graph* g = nullptr;
    if (!opts.in_file.empty()) {
        check(mcx_graph_from_json(read_file(opts.in_file).c_str(), &g));
    } else if (opts.has_generator()) {
        check(mcx_graph_generate(opts.spec_json().dump().c_str(), &g));
    } else {
        die(MCX_ERROR_INVALID_ARGUMENT, "need --in, --spec, or --family");
    }
    return GraphHandle(g, mcx_graph_free);
}

std::string homology_text(const json& report) {
    std::ostringstream os;
    os << "betti:";
    if (report.at("betti").empty()) os << " (all zero)";
    for (const auto& [d, b] : report.at("betti").items()) os << " b_" << d << "=" << b.dump();
    os << "\ntorsion:";
    if (report.at("torsion").empty()) os << " none";
    for (const auto& [d, list] : report.at("torsion").items())
        os << " dim " << d << ": " << list.dump();
    os << "\nreduced euler: " << report.at("euler").dump();
    return os.str();
}

int cmd_gen(const GlobalOpts&, const SpecOpts& spec, const std::string& out_path) {
    GraphHandle g = load_graph(spec);
    write_output(take_string(mcx_graph_to_json(g.get())), out_path);
    return 0;
}

int cmd_homology(const GlobalOpts& global, const SpecOpts& spec) {
    GraphHandle g = load_graph(spec);
    char* out = nullptr;
    check(mcx_graph_homology_json(g.get(), &out));
    std::string report = take_string(out);
    if (global.format == "json")
        std::cout << report << "\n";
    else
        std::cout << homology_text(json::parse(report)) << "\n";
    return 0;
}

int cmd_reduce(const GlobalOpts& global, const SpecOpts& spec, const std::string& strategy,
               const std::string& cert_path) {
    mcx_reduce_result* result = nullptr;
    if (spec.in_file.empty() && spec.has_generator()) {
        check(mcx_reduce_spec(spec.spec_json().dump().c_str(), strategy.c_str(), global.budget,
                              &result));
    } else {
        GraphHandle g = load_graph(spec);
        check(mcx_reduce(g.get(), strategy.c_str(), global.budget, &result));
    }
    std::unique_ptr<mcx_reduce_result, decltype(&mcx_reduce_result_free)> holder(
        result, mcx_reduce_result_free);

    if (mcx_reduce_result_is_partial(result)) {
        bool budget = mcx_reduce_result_budget_exhausted(result);
        die(budget ? MCX_ERROR_BUDGET : MCX_ERROR_PRECONDITION,
            budget ? "reduction budget exhausted" : "no applicable rule; reduction stuck");
    }

    mcx_homotopy* cls = mcx_reduce_result_class(result);
    std::unique_ptr<mcx_homotopy, decltype(&mcx_homotopy_free)> cls_holder(cls,
                                                                           mcx_homotopy_free);
    mcx_certificate* cert = mcx_reduce_result_certificate(result);
    std::unique_ptr<mcx_certificate, decltype(&mcx_certificate_free)> cert_holder(
        cert, mcx_certificate_free);

    int verified = 0;
    check(mcx_certificate_verify(cert, &verified));
    if (!cert_path.empty()) write_output(take_string(mcx_certificate_to_json(cert)), cert_path);

    if (global.format == "json") {
        json j{{"class", json::parse(take_string(mcx_homotopy_to_json(cls)))},
               {"class_text", take_string(mcx_homotopy_to_text(cls))},
               {"certificate_verified", verified == 1},
               {"nodes", mcx_reduce_result_nodes(result)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << take_string(mcx_homotopy_to_text(cls))
                  << (verified ? "  [certified-by-trace]" : "  [UNVERIFIED]") << "\n";
    }
    return verified ? 0 : 1;
}

int cmd_predict(const GlobalOpts& global, const std::string& family, int t_min, int t_max) {
    json rows = json::array();
    for (int t = t_min; t <= t_max; ++t) {
        mcx_homotopy* cls = nullptr;
        if (family == "triangular")
            check(mcx_triangle_homotopy(t, &cls));
        else if (family == "pentagonal")
            check(mcx_pentagon_homotopy(t, &cls));
        else if (family == "pentagonal_pendant")
            check(mcx_pendant_pentagon_homotopy(t, &cls));
        else
            die(MCX_ERROR_INVALID_ARGUMENT, "no closed form for family '" + family + "'");
        std::unique_ptr<mcx_homotopy, decltype(&mcx_homotopy_free)> holder(cls,
                                                                           mcx_homotopy_free);
        json row{{"t", t},
                 {"class", json::parse(take_string(mcx_homotopy_to_json(cls)))},
                 {"class_text", take_string(mcx_homotopy_to_text(cls))}};
        if (family == "triangular" && t >= 2) {
            int lo = 0, hi = 0;
            check(mcx_dim_interval(t, &lo, &hi));
            row["dims"] = {{"lo", lo}, {"hi", hi}};
        }
        rows.push_back(row);
    }
    if (global.format == "json") {
        std::cout << rows.dump() << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << "t=" << row.at("t").get<int>() << "  "
                      << row.at("class_text").get<std::string>();
            if (row.contains("dims"))
                std::cout << "  dims [" << row.at("dims").at("lo").get<int>() << ", "
                          << row.at("dims").at("hi").get<int>() << "]";
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_verify(const GlobalOpts& global, const SpecOpts& spec, const std::string& channels,
               int t_min, int t_max) {
    std::vector<json> specs;
    if (t_min != std::numeric_limits<int>::min()) {
        for (int t = t_min; t <= t_max; ++t) {
            json j = spec.spec_json();
            j["t"] = t;
            specs.push_back(j);
        }
    } else {
        specs.push_back(spec.spec_json());
    }

    bool all = true;
    json reports = json::array();
    for (const auto& s : specs) {
        char* report = nullptr;
        int agree = 0;
        check(mcx_verify_run_json(s.dump().c_str(), channels.c_str(), global.budget, global.seed,
                                  global.has_seed ? 1 : 0, &report, &agree));
        json r = json::parse(take_string(report));
        all = all && agree == 1;
        if (global.format == "json") {
            reports.push_back(r);
        } else {
            std::cout << s.dump() << "  ";
            for (const auto& [name, ch] : r.at("channels").items()) {
                std::cout << name << "=";
                if (ch.contains("class"))
                    std::cout << "'" << ch.at("class").get<std::string>() << "' ";
                else
                    std::cout << "(" << ch.at("reason").get<std::string>() << ") ";
            }
            std::cout << (agree ? "AGREE" : "MISMATCH") << "\n";
        }
    }
    if (global.format == "json") std::cout << reports.dump() << "\n";
    return all ? 0 : 1;
}

int cmd_table(const GlobalOpts& global, int t_max) {
    char* out = nullptr;
    check(mcx_triangle_table_json(t_max, &out));
    json table = json::parse(take_string(out));
    if (global.format == "json") {
        std::cout << table.dump() << "\n";
    } else {
        std::printf("%4s  %-24s %-14s %s\n", "t", "class", "routes", "golden");
        for (const auto& row : table.at("rows")) {
            std::string golden = row.contains("golden_match")
                                     ? (row.at("golden_match").get<bool>() ? "match" : "MISMATCH")
                                     : "-";
            std::printf("%4d  %-24s %-14s %s\n", row.at("t").get<int>(),
                        row.at("class").get<std::string>().c_str(),
                        row.at("routes_agree").get<bool>() ? "agree" : "DISAGREE",
                        golden.c_str());
        }
    }
    return table.at("mismatch").get<bool>() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching complexes of polygonal line tilings"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    auto* seed_opt = app.add_option("--seed", global.seed, "seed recorded in reports");
    app.add_option("--budget", global.budget, "reduction node budget (0 = default)");

    SpecOpts gen_spec, hom_spec, red_spec, ver_spec;
    std::string out_path, strategy = "auto", cert_path, channels = "homology,engine,formula";
    std::string predict_family = "triangular";
    int predict_t = std::numeric_limits<int>::min();
    int t_min = std::numeric_limits<int>::min();
    int t_max = std::numeric_limits<int>::min();
    int table_t_max = 13;

    CLI::App* gen = app.add_subcommand("gen", "generate a tiling graph");
    gen_spec.attach(gen, false);
    gen->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* hom = app.add_subcommand("homology", "exact reduced homology of M(G)");
    hom_spec.attach(hom, true);

    CLI::App* red = app.add_subcommand("reduce", "certified reduction to a homotopy type");
    red_spec.attach(red, true);
    red->add_option("--strategy", strategy,
                    "auto|scripted_triangle|scripted_pentagon|scripted_extended");
    red->add_option("--emit-cert", cert_path, "write the certificate JSON here");

    CLI::App* pre = app.add_subcommand("predict", "closed-form homotopy types");
    pre->add_option("--family", predict_family, "triangular|pentagonal|pentagonal_pendant");
    pre->add_option("--t", predict_t, "single t");
    pre->add_option("--t-min", t_min, "range start");
    pre->add_option("--t-max", t_max, "range end");

    CLI::App* ver = app.add_subcommand("verify", "cross-check channels; exit 0 iff they agree");
    ver_spec.attach(ver, false);
    ver->add_option("--channels", channels, "comma-separated: homology,engine,formula");
    ver->add_option("--t-min", t_min, "verify a range of t");
    ver->add_option("--t-max", t_max, "verify a range of t");

    CLI::App* tab = app.add_subcommand("table", "sphere-count table with golden checks");
    tab->add_option("--t-max", table_t_max, "last row");

    // global flags may follow the subcommand name
    for (CLI::App* sub : {gen, hom, red, pre, ver, tab}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    global.has_seed = seed_opt->count() > 0;

    try {
        if (gen->parsed()) return cmd_gen(global, gen_spec, out_path);
        if (hom->parsed()) return cmd_homology(global, hom_spec);
        if (red->parsed()) return cmd_reduce(global, red_spec, strategy, cert_path);
        if (pre->parsed()) {
            int lo = predict_t != std::numeric_limits<int>::min() ? predict_t : t_min;
            int hi = predict_t != std::numeric_limits<int>::min() ? predict_t : t_max;
            if (lo == std::numeric_limits<int>::min())
                die(MCX_ERROR_INVALID_ARGUMENT, "need --t or --t-min/--t-max");
            if (hi == std::numeric_limits<int>::min()) hi = lo;
            return cmd_predict(global, predict_family, lo, hi);
        }
        if (ver->parsed()) {
            if (t_min != std::numeric_limits<int>::min() &&
                t_max == std::numeric_limits<int>::min())
                t_max = t_min;
            return cmd_verify(global, ver_spec, channels, t_min, t_max);
        }
        if (tab->parsed()) return cmd_table(global, table_t_max);
    } catch (const std::exception& e) {
        die(MCX_ERROR_INTERNAL, e.what());
    }
    return 0;
}
