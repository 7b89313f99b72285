#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "order.hpp"

namespace princ {

enum class Variant { reduced, original };

inline const char* variant_name(Variant v) {
    return v == Variant::original ? "original" : "reduced";
}

inline Variant variant_of(const std::string& s) {
    if (s == "original") return Variant::original;
    if (s == "reduced") return Variant::reduced;
    throw std::invalid_argument("unknown variant '" + s + "'");
}

/// One gadget shape: internal elements are the placeholders "$1", "$2", ...
/// and covers relate placeholders, the port tokens "a:p" / "b:p" / "a:q" /
/// "b:q", and the bound tokens "0" / "1". The nominal size records how many
/// elements the textbook shape of this gadget carries; the shipped shapes
/// are smaller and the difference is reported, never hidden.
struct GadgetSpec {
    int nominal = 0;
    std::vector<std::string> internals;
    std::vector<NamePair> covers;

    int actual() const { return static_cast<int>(internals.size()); }
};

struct GadgetCatalog {
    std::map<std::string, GadgetSpec> kinds;

    const GadgetSpec& at(const std::string& kind) const {
        auto it = kinds.find(kind);
        if (it == kinds.end())
            throw std::invalid_argument("catalog has no gadget kind '" + kind + "'");
        return it->second;
    }

    /// Stable one-line-per-kind serialization used for hashing.
    std::string canonical_text() const {
        std::string out;
        for (const auto& [name, spec] : kinds) {
            out += name + " nominal=" + std::to_string(spec.nominal) + " internals=";
            for (size_t i = 0; i < spec.internals.size(); ++i) {
                if (i) out += ",";
                out += spec.internals[i];
            }
            out += " covers=";
            for (size_t i = 0; i < spec.covers.size(); ++i) {
                if (i) out += ";";
                out += spec.covers[i].first + "<" + spec.covers[i].second;
            }
            out += "\n";
        }
        return out;
    }

    std::string hash() const {
        uint64_t h = 1469598103934665603ull;
        for (unsigned char c : canonical_text()) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char buf[17];
        for (int i = 15; i >= 0; --i) {
            buf[i] = "0123456789abcdef"[h & 0xf];
            h >>= 4;
        }
        buf[16] = '\0';
        return std::string(buf);
    }

    static const GadgetCatalog& builtin() {
        static const GadgetCatalog c = make_builtin();
        return c;
    }

private:
    static GadgetCatalog make_builtin() {
        GadgetCatalog c;
        std::vector<NamePair> cell = {{"a:p", "$1"}, {"a:q", "$1"}, {"$1", "$2"}, {"b:p", "$2"},
                                      {"$2", "$3"},  {"b:q", "$3"}, {"$3", "1"}};
        c.kinds["G"] = GadgetSpec{7, {"$1", "$2", "$3"}, cell};
        c.kinds["GExt"] = GadgetSpec{15, {"$1", "$2", "$3"}, cell};
        c.kinds["Equi"] = GadgetSpec{4,
                                     {"$1", "$2"},
                                     {{"a:p", "$1"},
                                      {"a:q", "$1"},
                                      {"$1", "$2"},
                                      {"b:p", "$2"},
                                      {"b:q", "$2"},
                                      {"$2", "1"}}};
        c.kinds["EquiChain"] = GadgetSpec{30,
                                          {"$1", "$2", "$3", "$4", "$5", "$6"},
                                          {{"a:p", "$1"},
                                           {"a:q", "$1"},
                                           {"$1", "$2"},
                                           {"b:p", "$2"},
                                           {"$2", "$3"},
                                           {"b:q", "$3"},
                                           {"$1", "$4"},
                                           {"$6", "$4"},
                                           {"$4", "$5"},
                                           {"$3", "$5"},
                                           {"$5", "1"},
                                           {"0", "$6"}}};
        c.kinds["TopCollapse"] = GadgetSpec{1, {"$1"}, {{"0", "$1"}, {"$1", "b:p"}}};
        return c;
    }
};

namespace detail {

struct Draft {
    std::vector<std::string> elems;
    std::vector<NamePair> pairs;
    std::set<std::string> seen;

    void add(const std::string& n) {
        if (!seen.insert(n).second)
            throw std::invalid_argument("generated name '" + n + "' already taken");
        elems.push_back(n);
    }

    void relate(const std::string& a, const std::string& b) { pairs.emplace_back(a, b); }

    bool has(const std::string& n) const { return seen.count(n) != 0; }

    void absorb(const FiniteLattice& l) {
        for (const auto& n : l.order().names()) add(n);
        for (const auto& [i, j] : l.order().covers()) relate(l.order().name(i), l.order().name(j));
    }
};

/// Interior chains of the union of P and Q with the bounds amalgamated;
/// Q interiors are primed until fresh.
struct UnionParts {
    std::vector<std::string> names;
    std::vector<NamePair> pairs;
    std::map<int, std::string> q_rename;
};

inline UnionParts union_parts(const BoundedOrder& p, const BoundedOrder& q) {
    UnionParts u;
    u.names = p.names();
    std::set<std::string> used(u.names.begin(), u.names.end());
    u.q_rename[q.bottom()] = p.name(p.bottom());
    u.q_rename[q.top()] = p.name(p.top());
    for (int m : q.mids()) {
        std::string n = q.name(m);
        while (used.count(n)) n += "'";
        used.insert(n);
        u.names.push_back(n);
        u.q_rename[m] = n;
    }
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (p.lt(i, j)) u.pairs.emplace_back(p.name(i), p.name(j));
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            if (q.lt(i, j)) u.pairs.emplace_back(u.q_rename.at(i), u.q_rename.at(j));
    return u;
}

}  // namespace detail

/// Base lattice for the constructions: a two-element chain a:p < b:p per
/// interior element of P, one atom-coatom per extra identifier, and, as soon
/// as anything lives strictly between the bounds, the two complements w:1
/// and w:2 that pin the bounds into singleton congruence blocks.
inline FiniteLattice frame(const BoundedOrder& p, const std::vector<std::string>& extra) {
    detail::Draft d;
    d.add("0");
    d.add("1");
    d.relate("0", "1");
    for (int m : p.mids()) {
        const std::string& nm = p.name(m);
        d.add("a:" + nm);
        d.add("b:" + nm);
        d.relate("0", "a:" + nm);
        d.relate("a:" + nm, "b:" + nm);
        d.relate("b:" + nm, "1");
    }
    for (const auto& xf : extra) {
        d.add(xf);
        d.relate("0", xf);
        d.relate(xf, "1");
    }
    if (!p.mids().empty() || !extra.empty()) {
        d.add("w:1");
        d.add("w:2");
        d.relate("0", "w:1");
        d.relate("w:1", "1");
        d.relate("0", "w:2");
        d.relate("w:2", "1");
    }
    FiniteLattice l{BoundedOrder(d.elems, d.pairs)};
    for (int m : p.mids()) {
        l.set_label("a:" + p.name(m), l.index("a:" + p.name(m)));
        l.set_label("b:" + p.name(m), l.index("b:" + p.name(m)));
    }
    return l;
}

namespace detail {

inline FiniteLattice instantiate_gadget(const FiniteLattice& l, const GadgetSpec& spec,
                                        const std::map<std::string, std::string>& ports,
                                        const std::string& prefix) {
    Draft d;
    d.absorb(l);
    auto resolve = [&](const std::string& tok) -> std::string {
        if (!tok.empty() && tok.front() == '$') return prefix + ":" + tok.substr(1);
        auto it = ports.find(tok);
        if (it == ports.end())
            throw std::invalid_argument("catalog token '" + tok + "' has no port");
        return it->second;
    };
    for (const auto& internal : spec.internals) d.add(resolve(internal));
    for (const auto& [a, b] : spec.covers) d.relate(resolve(a), resolve(b));
    FiniteLattice out{BoundedOrder(d.elems, d.pairs)};
    for (const auto& [tag, idx] : l.labels()) out.set_label(tag, out.index(l.name(idx)));
    return out;
}

inline std::map<std::string, std::string> chain_ports(const FiniteLattice& l,
                                                      const std::string& p,
                                                      const std::string& q) {
    std::map<std::string, std::string> ports;
    ports["0"] = l.name(l.bottom());
    ports["1"] = l.name(l.top());
    ports["a:p"] = l.name(l.label_or_throw("a:" + p));
    ports["b:p"] = l.name(l.label_or_throw("b:" + p));
    if (!q.empty()) {
        ports["a:q"] = l.name(l.label_or_throw("a:" + q));
        ports["b:q"] = l.name(l.label_or_throw("b:" + q));
    }
    return ports;
}

}  // namespace detail

/// Splices one gadget over the labelled chains of p and q. For the
/// single-chain kinds q is ignored and may be empty.
inline FiniteLattice insert_gadget(const FiniteLattice& l, const std::string& p,
                                   const std::string& q, const std::string& kind,
                                   const GadgetCatalog& catalog = GadgetCatalog::builtin()) {
    const GadgetSpec& spec = catalog.at(kind);
    bool single = kind == "TopCollapse";
    std::string prefix = "g:" + p + "<" + (single ? "1" : q);
    return detail::instantiate_gadget(l, spec, detail::chain_ports(l, p, single ? "" : q), prefix);
}

/// Frame of P (plus extra complements) with one comparability cell spliced
/// over every pair of comparable interior elements.
inline FiniteLattice lat_of(const BoundedOrder& p, const std::vector<std::string>& extra,
                            const std::string& kind = "G",
                            const GadgetCatalog& catalog = GadgetCatalog::builtin()) {
    if (kind != "G" && kind != "GExt")
        throw std::invalid_argument("cell kind must be G or GExt");
    FiniteLattice l = frame(p, extra);
    for (int i : p.mids())
        for (int j : p.mids())
            if (p.lt(i, j)) l = insert_gadget(l, p.name(i), p.name(j), kind, catalog);
    return l;
}

/// Indices of the smallest subuniverse containing the generators.
inline std::vector<int> generated_sublattice(const FiniteLattice& l, const std::vector<int>& gens) {
    std::set<int> s(gens.begin(), gens.end());
    s.insert(l.bottom());
    s.insert(l.top());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i; j < cur.size(); ++j) {
                if (s.insert(l.meet(cur[i], cur[j])).second) grew = true;
                if (s.insert(l.join(cur[i], cur[j])).second) grew = true;
            }
    }
    return std::vector<int>(s.begin(), s.end());
}

/// Restriction of L to an operation-closed member set containing the
/// bounds, with labels carried over where they survive. The restricted
/// tables are cross-checked against the ambient ones.
inline FiniteLattice sublattice(const FiniteLattice& l, const std::vector<int>& members) {
    std::set<int> s(members.begin(), members.end());
    if (!s.count(l.bottom()) || !s.count(l.top()))
        throw std::invalid_argument("member set misses a bound");
    for (int a : members)
        for (int b : members)
            if (!s.count(l.meet(a, b)) || !s.count(l.join(a, b)))
                throw std::invalid_argument("member set is not operation-closed");
    std::vector<std::string> names;
    std::map<int, int> pos;
    for (int m : members) {
        pos[m] = static_cast<int>(names.size());
        names.push_back(l.name(m));
    }
    std::vector<NamePair> pairs;
    for (int a : members)
        for (int b : members)
            if (a != b && l.leq(a, b)) pairs.emplace_back(l.name(a), l.name(b));
    FiniteLattice out{BoundedOrder(names, pairs)};
    for (int a : members)
        for (int b : members) {
            if (out.meet(pos[a], pos[b]) != pos[l.meet(a, b)] ||
                out.join(pos[a], pos[b]) != pos[l.join(a, b)])
                throw WellDefinednessViolation("sublattice operations disagree with ambient ones");
        }
    for (const auto& [tag, idx] : l.labels())
        if (s.count(idx)) out.set_label(tag, pos[idx]);
    return out;
}

/// Nominal growth of the two-sided construction over its frame, by the
/// textbook gadget sizes. The shipped catalog is leaner; reports carry the
/// measured numbers next to this figure.
inline long added_element_count(Variant v, long n_p, long c_p, long c_q) {
    if (v == Variant::original) return 15 * (c_p + c_q) + 30 * n_p;
    return 7 * (c_p + c_q) + 4 * n_p;
}

struct ConstructionReport {
    std::string variant;
    int base_size = 0;
    int result_size = 0;
    int n_p = 0;
    int c_p = 0;
    int c_q = 0;
    int top_collapses = 0;
    long added = 0;
    long formula_nominal = 0;
    long catalog_expected = 0;
    bool deviates = false;
    std::map<std::string, int> actual_coefficients;
};

struct CzedliResult {
    FiniteLattice m;
    FiniteLattice l;
    std::vector<int> embedding;
    std::map<std::string, std::string> q_names;
    ConstructionReport report;
};

/// Two-sided construction: frame over the amalgamated union of P and Q,
/// comparability cells on each side, and one coupling gadget per interior
/// element of P tying its chain to the chain of its image (or collapsing it
/// outright when the image is the top). M is the subuniverse generated by
/// the P side.
inline CzedliResult czedli_construct(const BoundedOrder& p, const BoundedOrder& q,
                                     const IsotoneMap& beta, Variant variant,
                                     const GadgetCatalog& catalog = GadgetCatalog::builtin()) {
    if (!(beta.source() == p) || !(beta.target() == q))
        throw std::invalid_argument("map endpoints do not match the stated orders");
    if (!is_zero_separating(beta))
        throw NotZeroSeparating("an interior element maps to the bottom");

    detail::UnionParts u = detail::union_parts(p, q);
    BoundedOrder r(u.names, u.pairs);
    FiniteLattice l = frame(r, {});
    const std::string cell = variant == Variant::original ? "GExt" : "G";
    const std::string attach = variant == Variant::original ? "EquiChain" : "Equi";

    ConstructionReport rep;
    rep.variant = variant_name(variant);
    rep.base_size = l.size();
    for (int i : p.mids())
        for (int j : p.mids())
            if (p.lt(i, j)) {
                l = insert_gadget(l, p.name(i), p.name(j), cell, catalog);
                ++rep.c_p;
            }
    for (int i : q.mids())
        for (int j : q.mids())
            if (q.lt(i, j)) {
                l = insert_gadget(l, u.q_rename.at(i), u.q_rename.at(j), cell, catalog);
                ++rep.c_q;
            }
    for (int i : p.mids()) {
        ++rep.n_p;
        int im = beta.apply(i);
        if (im == q.top()) {
            l = insert_gadget(l, p.name(i), "", "TopCollapse", catalog);
            ++rep.top_collapses;
        } else {
            l = insert_gadget(l, p.name(i), u.q_rename.at(im), attach, catalog);
        }
    }
    rep.result_size = l.size();
    rep.added = rep.result_size - rep.base_size;
    rep.formula_nominal =
        added_element_count(variant, rep.n_p, rep.c_p, rep.c_q);
    rep.actual_coefficients = {{"cell", catalog.at(cell).actual()},
                               {"attachment", catalog.at(attach).actual()},
                               {"top_collapse", catalog.at("TopCollapse").actual()}};
    rep.catalog_expected = static_cast<long>(catalog.at(cell).actual()) * (rep.c_p + rep.c_q) +
                           static_cast<long>(catalog.at(attach).actual()) *
                               (rep.n_p - rep.top_collapses) +
                           static_cast<long>(catalog.at("TopCollapse").actual()) * rep.top_collapses;
    rep.deviates = rep.added != rep.formula_nominal;

    std::vector<int> gens{l.bottom(), l.top()};
    if (!p.mids().empty()) {
        for (int m : p.mids()) {
            gens.push_back(l.label_or_throw("a:" + p.name(m)));
            gens.push_back(l.label_or_throw("b:" + p.name(m)));
        }
        gens.push_back(l.index("w:1"));
        gens.push_back(l.index("w:2"));
    }
    std::vector<int> members = generated_sublattice(l, gens);
    FiniteLattice m = sublattice(l, members);

    std::map<std::string, std::string> q_names;
    for (int qm : q.mids()) q_names[q.name(qm)] = u.q_rename.at(qm);

    return CzedliResult{std::move(m), std::move(l), std::move(members), std::move(q_names),
                        std::move(rep)};
}

}  // namespace princ
