#ifndef CYCLOGRAPH_IO_HPP
#define CYCLOGRAPH_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyclotomic.hpp"
#include "decomposition.hpp"
#include "graph.hpp"
#include "matrix.hpp"

namespace cyclograph {

using Json = nlohmann::ordered_json;

namespace detail {

inline VertexId parse_vertex_token(const std::string& tok, std::size_t line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || tok.empty())
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": '" + tok + "' is not an integer vertex id");
    return v;
}

}  // namespace detail

/*
 * Text graph format: one arc "u v" (u → v) per line, '#' starts a comment,
 * blank lines are ignored and a line holding a single id declares an
 * isolated vertex.
 */
inline OrientedGraph parse_graph_text(std::istream& in) {
    OrientedGraph g;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() > 2)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected 'u v', got " +
                                                   std::to_string(toks.size()) + " fields");
        const VertexId u = detail::parse_vertex_token(toks[0], line);
        if (toks.size() == 1) {
            g.add_vertex(u);
            continue;
        }
        const VertexId v = detail::parse_vertex_token(toks[1], line);
        try {
            g.add_edge(u, v);
        } catch (const Error& e) {
            throw Error(e.code(), "line " + std::to_string(line) + ": " + e.detail());
        }
    }
    return g;
}

/// {"vertices": [ids...], "edges": [[u, v], ...]}; "vertices" is optional.
inline OrientedGraph parse_graph_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "graph JSON must be an object");
    OrientedGraph g;
    auto as_id = [](const Json& j, const std::string& where) -> VertexId {
        if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, where + " is not an integer vertex id");
        return j.get<VertexId>();
    };
    if (doc.contains("vertices")) {
        const Json& vs = doc["vertices"];
        if (!vs.is_array()) throw Error(ErrorCode::ParseError, "\"vertices\" must be an array");
        for (std::size_t i = 0; i < vs.size(); ++i) g.add_vertex(as_id(vs[i], "vertices[" + std::to_string(i) + "]"));
    }
    if (!doc.contains("edges")) throw Error(ErrorCode::ParseError, "missing \"edges\" array");
    const Json& es = doc["edges"];
    if (!es.is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!es[i].is_array() || es[i].size() != 2) throw Error(ErrorCode::ParseError, where + " must be a [u, v] pair");
        const VertexId u = as_id(es[i][0], where + "[0]"), v = as_id(es[i][1], where + "[1]");
        try {
            g.add_edge(u, v);
        } catch (const Error& e) {
            throw Error(e.code(), where + ": " + e.detail());
        }
    }
    return g;
}

/// Parses either format; JSON is recognized by a leading '{'.
inline OrientedGraph parse_graph(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    std::istringstream in(text);
    return parse_graph_text(in);
}

inline OrientedGraph load_graph(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

/// Exact form {"order", "coeffs"} plus a display string and a decimal preview.
inline Json to_json(const CycloNum& x) {
    Json j;
    j["order"] = x.order();
    Json coeffs = Json::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(c.to_string());
    j["coeffs"] = std::move(coeffs);
    j["text"] = to_display_string(x);
    j["approx"] = approx_string(x);
    return j;
}

/// Inverse of to_json; reads only "order" and "coeffs".
inline CycloNum cyclo_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") || !j["order"].is_number_unsigned() ||
        !j["coeffs"].is_array())
        throw Error(ErrorCode::ParseError, "expected {\"order\": n, \"coeffs\": [...]}");
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw Error(ErrorCode::ParseError, "coefficients must be rational strings");
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    return CycloNum::from_powers(j["order"].get<unsigned>(), coeffs);
}

inline Json to_json(const RootParam& p) {
    return Json{{"name", p.to_string()}, {"order", p.order}, {"power", p.power}};
}

inline Json to_json(const Matrix<CycloNum>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Decimal grid of a matrix, one row per line.
inline std::string preview_grid(const Matrix<CycloNum>& m, int digits = 4) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += "  ";
            out += approx_string(m(i, j), digits);
        }
        out += '\n';
    }
    return out;
}

inline Json to_json(const CensusKey& key) {
    Json j;
    j["class"] = to_string(key.cls());
    j["n"] = key.order();
    if (key.cycles.size() == 1) {
        j["k"] = key.cycles.front().k;
        j["g"] = key.cycles.front().g;
    } else {
        j["k"] = nullptr;
        j["g"] = nullptr;
    }
    j["forest_order"] = key.forest_order;
    Json cycles = Json::array();
    for (const auto& c : key.cycles) cycles.push_back(Json{{"n", c.n}, {"k", c.k}, {"g", c.g}});
    j["cycles"] = std::move(cycles);
    return j;
}

inline Json census_to_json(const std::vector<CensusEntry>& entries, const std::vector<RootParam>& params) {
    Json out = Json::array();
    for (const auto& e : entries) {
        Json j = to_json(e.key);
        j["count"] = e.count;
        Json contrib = Json::object();
        for (const auto& p : params) contrib[p.to_string()] = to_json(contribution(e.key, p));
        j["contribution"] = std::move(contrib);
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_IO_HPP
