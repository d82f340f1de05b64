#ifndef CYCLOGRAPH_CLI_HPP
#define CYCLOGRAPH_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "decomposition.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "hermitian.hpp"
#include "io.hpp"
#include "matrixtree.hpp"

namespace cyclograph::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kPrecondition = 2, kGuardrail = 3 };

struct RunConfig {
    std::string command;
    std::string input;                    // path, or "-" for stdin
    std::vector<std::string> params;      // shorthands; empty means "1"
    std::optional<std::vector<VertexId>> vset;
    std::optional<std::vector<std::pair<VertexId, VertexId>>> eset;
    std::optional<VertexId> vertex;
    std::string output = "json";
    bool verify = false;
    bool force = false;
    long long p = 0;
    unsigned threads = 1;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"minor",     "expand", "census", "count-ab", "count-galois",
                                                "triangles", "count4", "spanning-trees"};
    return names;
}

/// "1", "-1", "i", "wN", "wN^Q" or "N/Q" (ω = e^{2πiQ/N}).
inline RootParam parse_param(const std::string& text) {
    auto number = [&](const std::string& s) -> long long {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size() || !(std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '-'))
            throw Error(ErrorCode::InvalidArgument, "bad parameter '" + text + "'");
        return v;
    };
    if (text == "1") return RootParam(1, 0);
    if (text == "-1") return RootParam(2, 1);
    if (text == "i") return RootParam(4, 1);
    if (!text.empty() && text.front() == 'w') {
        const std::string body = text.substr(1);
        const auto caret = body.find('^');
        const long long n = number(body.substr(0, caret));
        const long long q = caret == std::string::npos ? 1 : number(body.substr(caret + 1));
        if (n < 1) throw Error(ErrorCode::InvalidArgument, "bad parameter '" + text + "'");
        return RootParam(n, q);
    }
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const long long n = number(text.substr(0, slash)), q = number(text.substr(slash + 1));
        if (n < 1) throw Error(ErrorCode::InvalidArgument, "bad parameter '" + text + "'");
        return RootParam(n, q);
    }
    throw Error(ErrorCode::InvalidArgument, "bad parameter '" + text + "' (use 1, -1, i, wN, wN^Q or N/Q)");
}

/// Worker count: hardware concurrency, capped by CYCLOGRAPH_THREADS when set.
inline unsigned default_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CYCLOGRAPH_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

inline int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidGraph:
        case ErrorCode::UnknownVertex:
        case ErrorCode::InvalidArgument:
        case ErrorCode::SizeMismatch:
            return kInputError;
        case ErrorCode::GuardrailExceeded:
            return kGuardrail;
        default:
            return kPrecondition;
    }
}

namespace detail {

inline std::vector<RootParam> resolve_params(const RunConfig& cfg) {
    std::vector<RootParam> out;
    for (const auto& s : cfg.params) out.push_back(parse_param(s));
    if (out.empty()) out.push_back(RootParam(1, 0));
    return out;
}

inline std::vector<std::size_t> resolve_vset(const RunConfig& cfg, const OrientedGraph& g) {
    return cfg.vset ? g.indices_of(*cfg.vset) : g.all_vertices();
}

inline Substructure resolve_substructure(const RunConfig& cfg, const OrientedGraph& g) {
    const std::vector<VertexId> vs = cfg.vset ? *cfg.vset : g.vertex_ids();
    if (!cfg.eset) return Substructure(g, g.indices_of(vs), g.all_edges());
    return Substructure::from_ids(g, vs, *cfg.eset);
}

inline Json ids_json(const OrientedGraph& g, const std::vector<std::size_t>& idx) {
    Json a = Json::array();
    for (std::size_t v : idx) a.push_back(g.vertex_id(v));
    return a;
}

inline Json edges_json(const OrientedGraph& g, const std::vector<std::size_t>& idx) {
    Json a = Json::array();
    for (std::size_t e : idx) a.push_back(Json::array({g.vertex_id(g.edge(e).tail), g.vertex_id(g.edge(e).head)}));
    return a;
}

inline bool is_cyclo(const Json& j) { return j.is_object() && j.contains("coeffs") && j.contains("approx"); }

// Human rendering: nested keys indented, exact values as "text ≈ approx".
inline void render_text(const Json& j, std::ostream& out, int indent, const std::string& label) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string head = label.empty() ? pad : pad + label + ":";
    if (is_cyclo(j)) {
        out << head << (label.empty() ? "" : " ") << j["text"].get<std::string>() << "  (~" << j["approx"].get<std::string>()
            << ")\n";
    } else if (j.is_object()) {
        if (!label.empty()) out << head << "\n";
        for (const auto& [k, v] : j.items()) render_text(v, out, label.empty() ? indent : indent + 1, k);
    } else if (j.is_array()) {
        const bool scalar = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive() || x.is_array(); });
        if (scalar) {
            out << head << (label.empty() ? "" : " ") << j.dump() << "\n";
        } else {
            if (!label.empty()) out << head << "\n";
            for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], out, indent + 1, "[" + std::to_string(i) + "]");
        }
    } else {
        out << head << (label.empty() ? "" : " ") << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

inline Json run_minor(const RunConfig& cfg, const OrientedGraph& g) {
    const auto vset = resolve_vset(cfg, g);
    const auto params = resolve_params(cfg);
    Json r{{"command", "minor"}, {"vset", ids_json(g, vset)}};
    // The per-class breakdown needs the subset enumeration; it is skipped beyond the guardrail.
    std::optional<std::vector<CensusEntry>> tally;
    if (cfg.force || binomial(g.edge_count(), vset.size()) <= kMaxSubsets) tally = census(g, vset, {cfg.force, cfg.threads});
    Json results = Json::array();
    for (const auto& p : params) {
        Json item{{"parameter", to_json(p)}, {"value", to_json(laplacian_minor(g, p, vset))}};
        if (tally) {
            Json parts = Json::array();
            for (const auto& e : *tally) {
                Json part = to_json(e.key);
                part["count"] = e.count;
                part["contribution"] = to_json(contribution(e.key, p));
                parts.push_back(std::move(part));
            }
            item["breakdown"] = std::move(parts);
        } else {
            item["breakdown"] = nullptr;
        }
        results.push_back(std::move(item));
    }
    r["results"] = std::move(results);
    return r;
}

inline Json run_expand(const RunConfig& cfg, const OrientedGraph& g) {
    const auto vset = resolve_vset(cfg, g);
    Json r{{"command", "expand"}, {"vset", ids_json(g, vset)}, {"subsets", binomial(g.edge_count(), vset.size())}};
    Json results = Json::array();
    for (const auto& p : resolve_params(cfg)) {
        const CycloNum expanded = cauchy_binet_expand(g, p, vset, {cfg.force, cfg.threads});
        const CycloNum minor = laplacian_minor(g, p, vset);
        results.push_back(Json{{"parameter", to_json(p)},
                               {"expansion", to_json(expanded)},
                               {"minor", to_json(minor)},
                               {"agrees", expanded == minor}});
    }
    r["results"] = std::move(results);
    return r;
}

inline Json run_census(const RunConfig& cfg, const OrientedGraph& g) {
    const auto vset = resolve_vset(cfg, g);
    const auto params = resolve_params(cfg);
    const auto entries = census(g, vset, {cfg.force, cfg.threads});
    std::uint64_t total = 0;
    for (const auto& e : entries) total += e.count;
    Json sums = Json::object();
    for (const auto& p : params) sums[p.to_string()] = to_json(census_sum(entries, p));
    return Json{{"command", "census"},      {"vset", ids_json(g, vset)}, {"all_regular", total},
                {"entries", census_to_json(entries, params)}, {"sum", std::move(sums)}};
}

inline Json substructure_json(const OrientedGraph& g, const Substructure& sub) {
    return Json{{"vset", ids_json(g, sub.vertices)}, {"eset", edges_json(g, sub.edges)}};
}

inline Json run_count_ab(const RunConfig& cfg, const OrientedGraph& g) {
    const Substructure sub = resolve_substructure(cfg, g);
    const UnicyclicCounts c = count_alpha_beta(sub);
    return Json{{"command", "count-ab"},
                {"substructure", substructure_json(g, sub)},
                {"n_alpha", c.n_alpha},
                {"n_beta", c.n_beta},
                {"n_star", c.n_star},
                {"det_w5", to_json(structural_determinant(sub, RootParam(5, 1)))},
                {"det_w5^2", to_json(structural_determinant(sub, RootParam(5, 2)))}};
}

inline Json run_count_galois(const RunConfig& cfg, const OrientedGraph& g) {
    if (cfg.p == 0) throw Error(ErrorCode::InvalidArgument, "count-galois needs --p");
    const Substructure sub = resolve_substructure(cfg, g);
    const UnicyclicCounts c = galois_count(sub, cfg.p);
    Json dets = Json::array();
    for (long long q = 1; q <= (cfg.p - 1) / 2; ++q) {
        const RootParam param(cfg.p, q);
        dets.push_back(Json{{"parameter", to_json(param)}, {"value", to_json(structural_determinant(sub, param))}});
    }
    return Json{{"command", "count-galois"}, {"p", cfg.p},           {"substructure", substructure_json(g, sub)},
                {"n_star", c.n_star},        {"determinants", dets}};
}

inline Json run_triangles(const RunConfig& cfg, const OrientedGraph& g) {
    if (!cfg.vset) throw Error(ErrorCode::InvalidArgument, "triangles needs --vset with 3 vertices");
    const auto vset = resolve_vset(cfg, g);
    const TriangleCounts t = triangle_count(g, vset, cfg.verify);
    return Json{{"command", "triangles"},       {"vset", ids_json(g, vset)},
                {"triangles", t.triangles},     {"rootless_trees", t.rootless_trees},
                {"minor_-1", to_json(t.minor_w2)}, {"minor_i", to_json(t.minor_w4)},
                {"verified", t.verified}};
}

inline Json run_count4(const RunConfig& cfg, const OrientedGraph& g) {
    if (!cfg.vset) throw Error(ErrorCode::InvalidArgument, "count4 needs --vset with 4 vertices");
    const auto vset = resolve_vset(cfg, g);
    const FourVertexCounts c = four_vertex_count(g, vset, cfg.verify);
    Json dets = Json::array();
    for (std::size_t i = 0; i < c.determinants.size(); ++i)
        dets.push_back(Json{{"parameter", to_json(four_vertex_params()[i])}, {"value", to_json(c.determinants[i])}});
    return Json{{"command", "count4"}, {"vset", ids_json(g, vset)}, {"c440", c.c440},    {"c441", c.c441},
                {"tu330", c.tu330},    {"tu331", c.tu331},          {"f4", c.f4},        {"determinants", dets},
                {"verified", c.verified}};
}

inline Json run_spanning_trees(const RunConfig& cfg, const OrientedGraph& g, bool& violated) {
    std::vector<std::size_t> targets;
    if (cfg.vertex) targets.push_back(g.require_index(*cfg.vertex));
    else targets = g.all_vertices();
    if (g.vertex_count() == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
    Json reports = Json::array();
    for (const auto& p : resolve_params(cfg)) {
        for (std::size_t v : targets) {
            const SpanningTreeReport rep = spanning_trees_via_cofactor(g, p, v);
            violated = violated || !rep.condition_holds;
            Json j{{"parameter", to_json(p)}, {"deleted_vertex", rep.deleted_vertex}, {"condition_holds", rep.condition_holds}};
            if (rep.count) j["count"] = rep.count->get_str();
            else j["count"] = nullptr;
            j["cofactor"] = to_json(rep.minor);
            reports.push_back(std::move(j));
        }
    }
    Json r{{"command", "spanning-trees"}, {"reports", std::move(reports)}};
    if (cfg.verify) r["brute_force"] = brute_force_spanning_trees(g, cfg.force);
    return r;
}

inline OrientedGraph read_input(const RunConfig& cfg, std::istream& in) {
    if (cfg.input.empty()) throw Error(ErrorCode::InvalidArgument, "no input graph given");
    if (cfg.input == "-") {
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph(ss.str());
    }
    return load_graph(cfg.input);
}

}  // namespace detail

/// Runs one command; the report goes to `out`, diagnostics to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
    try {
        if (cfg.output != "json" && cfg.output != "text")
            throw Error(ErrorCode::InvalidArgument, "--output must be json or text");
        const OrientedGraph g = detail::read_input(cfg, in);
        bool violated = false;
        Json report;
        if (cfg.command == "minor") report = detail::run_minor(cfg, g);
        else if (cfg.command == "expand") report = detail::run_expand(cfg, g);
        else if (cfg.command == "census") report = detail::run_census(cfg, g);
        else if (cfg.command == "count-ab") report = detail::run_count_ab(cfg, g);
        else if (cfg.command == "count-galois") report = detail::run_count_galois(cfg, g);
        else if (cfg.command == "triangles") report = detail::run_triangles(cfg, g);
        else if (cfg.command == "count4") report = detail::run_count4(cfg, g);
        else if (cfg.command == "spanning-trees") report = detail::run_spanning_trees(cfg, g, violated);
        else throw Error(ErrorCode::InvalidArgument, "unknown command '" + cfg.command + "'");

        if (cfg.output == "json") out << report.dump(2) << "\n";
        else detail::render_text(report, out, 0, "");
        if (violated) {
            err << "error: " << Error(ErrorCode::ConditionViolated,
                                      "some cycle does not vanish at the parameter; cofactors are not tree counts")
                                    .what()
                << "\n";
            return kPrecondition;
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace cyclograph::cli

#endif  // CYCLOGRAPH_CLI_HPP
