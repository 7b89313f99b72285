#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "congruence.hpp"
#include "construct.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "order.hpp"
#include "triples.hpp"

namespace princ {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

inline Json json_from_string(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
}

inline Json json_from_file(const std::string& path) {
    return json_from_string(read_file(path));
}

namespace detail {

inline void require_schema(const Json& j, const std::string& what) {
    if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
    if (!j.contains("schema") || !j["schema"].is_number_integer() ||
        j["schema"].get<int>() != kSchemaVersion)
        throw ParseError(what + ": missing or unsupported schema version (want " +
                         std::to_string(kSchemaVersion) + ")");
}

inline std::vector<NamePair> pair_list(const Json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected an array of pairs");
    std::vector<NamePair> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError(what + ": each entry must be a pair of element names");
        out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return out;
}

}  // namespace detail

/// Reads {"schema":1,"elements":[...],"leq":[[a,b],...]} into a validated
/// bounded order. Structural defects of the document and defects of the
/// described order (duplicates, cycles, missing bounds) both surface as
/// ParseError.
inline BoundedOrder order_from_json(const Json& j) {
    detail::require_schema(j, "poset document");
    if (!j.contains("elements") || !j["elements"].is_array())
        throw ParseError("poset document: missing 'elements' array");
    std::vector<std::string> elements;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw ParseError("poset document: element names must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<NamePair> leq;
    if (j.contains("leq")) leq = detail::pair_list(j["leq"], "poset document 'leq'");
    try {
        return BoundedOrder(std::move(elements), leq);
    } catch (const std::exception& e) {
        // only the order validator throws in here; anything it reports is a
        // defect of the document
        throw ParseError(std::string("poset document: ") + e.what());
    }
}

/// Canonical document: elements in index order, relation as the sorted
/// cover list (parsing closes it back up, so print-then-parse is identity).
inline Json to_json(const BoundedOrder& o) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["elements"] = o.names();
    Json leq = Json::array();
    for (const auto& [i, k] : o.covers()) leq.push_back({o.name(i), o.name(k)});
    j["leq"] = std::move(leq);
    return j;
}

/// Reads {"schema":1,"p":{...},"q":{...},"psi":[[x,y],...]} into an order
/// triple; psi lists the image of every element of p by name.
inline OrderTriple triple_from_json(const Json& j) {
    detail::require_schema(j, "triple document");
    if (!j.contains("p") || !j.contains("q"))
        throw ParseError("triple document: missing 'p' or 'q'");
    BoundedOrder p = order_from_json(j["p"]);
    BoundedOrder q = order_from_json(j["q"]);
    if (!j.contains("psi")) throw ParseError("triple document: missing 'psi'");
    std::vector<NamePair> graph = detail::pair_list(j["psi"], "triple document 'psi'");
    try {
        IsotoneMap psi(p, q, graph);
        return OrderTriple(std::move(p), std::move(q), std::move(psi));
    } catch (const std::exception& e) {
        throw ParseError(std::string("triple document: ") + e.what());
    }
}

inline Json to_json(const OrderTriple& t) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["p"] = to_json(t.p);
    j["q"] = to_json(t.q);
    Json psi = Json::array();
    for (int i = 0; i < t.p.size(); ++i) psi.push_back({t.p.name(i), t.q.name(t.psi.apply(i))});
    j["psi"] = std::move(psi);
    return j;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace detail

/// Hasse diagram in DOT form: one node per element, one edge per covering
/// pair, drawn bottom-up. Node and edge order follow element indices, so
/// output is stable for equal inputs.
inline std::string to_dot(const BoundedOrder& o, const std::string& title) {
    std::string out = "digraph \"" + detail::dot_escape(title) + "\" {\n  rankdir=BT;\n";
    out += "  node [shape=plaintext];\n";
    for (int i = 0; i < o.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + detail::dot_escape(o.name(i)) + "\"];\n";
    for (const auto& [i, j] : o.covers())
        out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

// ----------------------------------------------------------------- catalog

inline GadgetCatalog catalog_from_json(const Json& j) {
    detail::require_schema(j, "gadget catalog");
    if (!j.contains("kinds") || !j["kinds"].is_object())
        throw ParseError("gadget catalog: missing 'kinds' object");
    GadgetCatalog out;
    for (const auto& [name, spec] : j["kinds"].items()) {
        GadgetSpec g;
        if (!spec.contains("nominal") || !spec["nominal"].is_number_integer())
            throw ParseError("gadget catalog: kind '" + name + "' lacks a nominal size");
        g.nominal = spec["nominal"].get<int>();
        if (!spec.contains("internals") || !spec["internals"].is_array())
            throw ParseError("gadget catalog: kind '" + name + "' lacks internals");
        for (const auto& e : spec["internals"]) {
            if (!e.is_string() || e.get<std::string>().empty() ||
                e.get<std::string>().front() != '$')
                throw ParseError("gadget catalog: internals must be $-placeholders");
            g.internals.push_back(e.get<std::string>());
        }
        g.covers = detail::pair_list(spec["covers"], "gadget catalog kind '" + name + "'");
        out.kinds[name] = std::move(g);
    }
    return out;
}

inline Json to_json(const GadgetCatalog& c) {
    Json kinds = Json::object();
    for (const auto& [name, spec] : c.kinds) {
        Json k;
        k["nominal"] = spec.nominal;
        k["internals"] = spec.internals;
        Json covers = Json::array();
        for (const auto& [a, b] : spec.covers) covers.push_back({a, b});
        k["covers"] = std::move(covers);
        kinds[name] = std::move(k);
    }
    Json j;
    j["schema"] = kSchemaVersion;
    j["kinds"] = std::move(kinds);
    return j;
}

inline GadgetCatalog load_catalog(const std::string& path) {
    return catalog_from_json(json_from_file(path));
}

/// Catalog selected by the PRINC_CATALOG environment variable, falling back
/// to the built-in one.
inline const GadgetCatalog& active_catalog() {
    static const GadgetCatalog cat = [] {
        const char* env = std::getenv("PRINC_CATALOG");
        if (env && *env) return load_catalog(env);
        return GadgetCatalog::builtin();
    }();
    return cat;
}

// ----------------------------------------------------------------- reports

inline Json to_json(const ConstructionReport& r) {
    Json j;
    j["variant"] = r.variant;
    j["base_size"] = r.base_size;
    j["result_size"] = r.result_size;
    j["n_p"] = r.n_p;
    j["c_p"] = r.c_p;
    j["c_q"] = r.c_q;
    j["top_collapses"] = r.top_collapses;
    j["added"] = r.added;
    j["formula_nominal"] = r.formula_nominal;
    j["catalog_expected"] = r.catalog_expected;
    j["deviates_from_nominal"] = r.deviates;
    j["actual_coefficients"] = r.actual_coefficients;
    return j;
}

inline Json to_json(const RepresentationReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["catalog_hash"] = r.catalog_hash;
    j["sizes"] = {{"k", r.k_size}, {"m", r.m_size}, {"l", r.l_size}};
    j["construction"] = to_json(r.construction);
    Json clauses = Json::array();
    for (const auto& c : r.clauses) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        clauses.push_back(std::move(e));
    }
    j["clauses"] = std::move(clauses);
    j["pass"] = r.all_pass();
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

inline Json to_json(const std::vector<SuiteResult>& suites, const GadgetCatalog& catalog) {
    Json arr = Json::array();
    bool all = true;
    for (const auto& s : suites) {
        Json e;
        e["name"] = s.name;
        e["pass"] = s.pass;
        e["detail"] = s.detail;
        e["cases"] = s.cases;
        e["elapsed_seconds"] = s.seconds;
        arr.push_back(std::move(e));
        all = all && s.pass;
    }
    Json j;
    j["schema"] = kSchemaVersion;
    j["catalog_hash"] = catalog.hash();
    j["suites"] = std::move(arr);
    j["pass"] = all;
    return j;
}

}  // namespace princ
