#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "construct.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "order.hpp"

namespace princ {

/// Two lattices with a bound-preserving homomorphism between them.
struct LatticeTriple {
    FiniteLattice k;
    FiniteLattice l;
    LatticeHom phi;

    LatticeTriple(FiniteLattice k_, FiniteLattice l_, LatticeHom phi_)
        : k(std::move(k_)), l(std::move(l_)), phi(std::move(phi_)) {
        if (!(phi.source().order() == k.order()) || !(phi.target().order() == l.order()))
            throw std::invalid_argument("homomorphism endpoints do not match the lattices");
    }
};

inline bool is_surjective_triple(const OrderTriple& t) { return t.psi.is_surjective(); }
inline bool is_surjective_triple(const LatticeTriple& t) { return t.phi.is_surjective(); }

/// The order triple a lattice triple induces on principal congruences.
inline OrderTriple ordc(const LatticeTriple& t) {
    PrincOrder pk = princ_order(t.k);
    PrincOrder pl = princ_order(t.l);
    IsotoneMap induced = induced_hom_map(t.phi, pk, pl);
    return OrderTriple(pk.order, pl.order, std::move(induced));
}

/// Checks that element-of-P -> con(a:p, b:p) (bounds to the diagonal and the
/// full relation) is an order isomorphism onto all principal congruences.
/// rename translates order elements to the label suffixes used in l.
inline bool princ_matches_order(const FiniteLattice& l, const BoundedOrder& p,
                                const std::map<std::string, std::string>& rename,
                                std::string* why = nullptr) {
    PrincOrder pr = princ_order(l);
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (pr.order.size() != p.size())
        return fail("expected " + std::to_string(p.size()) + " principal congruences, found " +
                    std::to_string(pr.order.size()));
    std::vector<int> to_princ(static_cast<size_t>(p.size()));
    std::vector<char> hit(static_cast<size_t>(p.size()), 0);
    for (int x = 0; x < p.size(); ++x) {
        Congruence c = Congruence::delta(l.size());
        if (x == p.top()) {
            c = Congruence::nabla(l.size());
        } else if (x != p.bottom()) {
            std::string tag = p.name(x);
            auto it = rename.find(tag);
            if (it != rename.end()) tag = it->second;
            c = principal_congruence(l, l.label_or_throw("a:" + tag), l.label_or_throw("b:" + tag));
        }
        int at = -1;
        for (size_t i = 0; i < pr.congruences.size(); ++i)
            if (pr.congruences[i] == c) {
                at = static_cast<int>(i);
                break;
            }
        if (at < 0) return fail("congruence of '" + p.name(x) + "' is not principal");
        if (hit[static_cast<size_t>(at)]) return fail("two elements share a principal congruence");
        hit[static_cast<size_t>(at)] = 1;
        to_princ[static_cast<size_t>(x)] = at;
    }
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            bool below = pr.congruences[static_cast<size_t>(to_princ[static_cast<size_t>(x)])]
                             .refines(pr.congruences[static_cast<size_t>(to_princ[static_cast<size_t>(y)])]);
            if (p.leq(x, y) != below)
                return fail("order mismatch between '" + p.name(x) + "' and '" + p.name(y) + "'");
        }
    return true;
}

struct RepresentResult {
    LatticeTriple triple;
    FiniteLattice m;
    Congruence alpha;
    std::vector<int> embedding;
    std::map<std::string, std::string> q_names;
    ConstructionReport report;
};

/// Realizes an order triple by lattices: K is the one-sided construction
/// over P, the interior elements sent to the bottom are collapsed away by a
/// congruence quotient M, and M is extended in place by chains, cells and
/// coupling gadgets for Q. The homomorphism is quotient-then-include.
inline RepresentResult represent_full(const OrderTriple& t, Variant variant = Variant::reduced,
                                      const GadgetCatalog& catalog = GadgetCatalog::builtin()) {
    const BoundedOrder& p = t.p;
    const BoundedOrder& q = t.q;
    const std::string cell = variant == Variant::original ? "GExt" : "G";
    const std::string attach = variant == Variant::original ? "EquiChain" : "Equi";

    FiniteLattice k = lat_of(p, {}, cell, catalog);

    std::vector<std::pair<int, int>> dead_pairs;
    std::vector<int> live, dead;
    for (int m : p.mids()) {
        if (t.psi.apply(m) == q.bottom()) {
            dead.push_back(m);
            dead_pairs.emplace_back(k.label_or_throw("a:" + p.name(m)),
                                    k.label_or_throw("b:" + p.name(m)));
        } else {
            live.push_back(m);
        }
    }
    Congruence alpha = dead_pairs.empty() ? Congruence::delta(k.size())
                                          : congruence_closure(k, dead_pairs);
    auto [m, onto_m] = quotient(k, alpha);

    ConstructionReport rep;
    rep.variant = variant_name(variant);
    rep.base_size = m.size();

    detail::Draft d;
    d.absorb(m);
    std::map<std::string, std::string> q_names;
    bool fresh_residents = false;
    if (!q.mids().empty()) {
        if (!d.has("w:1") && !d.has("w:2")) {
            fresh_residents = true;
            d.add("w:1");
            d.add("w:2");
            d.relate("0", "w:1");
            d.relate("w:1", "1");
            d.relate("0", "w:2");
            d.relate("w:2", "1");
        }
        for (int u : q.mids()) {
            std::string n = q.name(u);
            while (d.has("a:" + n) || d.has("b:" + n) || q_names.count(n)) n += "'";
            q_names[q.name(u)] = n;
            d.add("a:" + n);
            d.add("b:" + n);
            d.relate("0", "a:" + n);
            d.relate("a:" + n, "b:" + n);
            d.relate("b:" + n, "1");
        }
    }
    FiniteLattice l{BoundedOrder(d.elems, d.pairs)};
    for (const auto& [tag, idx] : m.labels()) l.set_label(tag, l.index(m.name(idx)));
    for (const auto& [orig, ren] : q_names) {
        l.set_label("a:" + ren, l.index("a:" + ren));
        l.set_label("b:" + ren, l.index("b:" + ren));
    }
    (void)fresh_residents;

    for (int i : q.mids())
        for (int j : q.mids())
            if (q.lt(i, j)) {
                l = insert_gadget(l, q_names.at(q.name(i)), q_names.at(q.name(j)), cell, catalog);
                ++rep.c_q;
            }
    for (int pm : live) {
        ++rep.n_p;
        int im = t.psi.apply(pm);
        if (im == q.top()) {
            l = insert_gadget(l, p.name(pm), "", "TopCollapse", catalog);
            ++rep.top_collapses;
        } else {
            l = insert_gadget(l, p.name(pm), q_names.at(q.name(im)), attach, catalog);
        }
    }

    rep.result_size = l.size();
    rep.added = rep.result_size - rep.base_size;
    rep.formula_nominal = added_element_count(variant, rep.n_p, rep.c_p, rep.c_q);
    rep.actual_coefficients = {{"cell", catalog.at(cell).actual()},
                               {"attachment", catalog.at(attach).actual()},
                               {"top_collapse", catalog.at("TopCollapse").actual()}};
    rep.catalog_expected =
        static_cast<long>(catalog.at(cell).actual()) * (rep.c_p + rep.c_q) +
        static_cast<long>(catalog.at(attach).actual()) * (rep.n_p - rep.top_collapses) +
        static_cast<long>(catalog.at("TopCollapse").actual()) * rep.top_collapses +
        (fresh_residents ? 2 : 0) + 2 * static_cast<long>(q.mids().size());
    rep.deviates = rep.added != rep.formula_nominal;

    std::vector<int> embedding;
    for (int i = 0; i < m.size(); ++i) embedding.push_back(l.index(m.name(i)));
    std::vector<int> assignment;
    for (int i = 0; i < k.size(); ++i)
        assignment.push_back(embedding[static_cast<size_t>(onto_m.apply(i))]);
    LatticeHom phi(k, l, assignment);

    return RepresentResult{LatticeTriple(std::move(k), l, std::move(phi)),
                           std::move(m),
                           std::move(alpha),
                           std::move(embedding),
                           std::move(q_names),
                           std::move(rep)};
}

inline LatticeTriple represent(const OrderTriple& t, Variant variant = Variant::reduced,
                               const GadgetCatalog& catalog = GadgetCatalog::builtin()) {
    return represent_full(t, variant, catalog).triple;
}

struct SurjectiveResult {
    LatticeTriple triple;
    bool latx_form = false;
    bool dead_has_comparability = false;
};

/// Quotient-only realization for surjective maps that restrict to an order
/// isomorphism on the elements not sent to the bottom. The latx_form flag
/// reports whether the quotient is isomorphic to the one-sided construction
/// over Q padded with one complement per collapsed element; this is known to
/// fail exactly when a collapsed element is comparable to another interior
/// element, and is advisory only.
inline SurjectiveResult represent_surjective(const OrderTriple& t,
                                             const GadgetCatalog& catalog = GadgetCatalog::builtin()) {
    const BoundedOrder& p = t.p;
    const BoundedOrder& q = t.q;
    if (!t.psi.is_surjective()) throw HypothesisViolated("map is not surjective");
    std::vector<int> live{p.bottom()}, dead;
    for (int m : p.mids())
        (t.psi.apply(m) == q.bottom() ? dead : live).push_back(m);
    live.push_back(p.top());
    if (live.size() != static_cast<size_t>(q.size()))
        throw HypothesisViolated("live part does not match the target in size");
    std::vector<char> seen(static_cast<size_t>(q.size()), 0);
    for (int x : live) {
        int im = t.psi.apply(x);
        if (seen[static_cast<size_t>(im)])
            throw HypothesisViolated("two live elements share an image");
        seen[static_cast<size_t>(im)] = 1;
    }
    for (int x : live)
        for (int y : live)
            if (p.leq(x, y) != q.leq(t.psi.apply(x), t.psi.apply(y)))
                throw HypothesisViolated("live part is not mapped order-isomorphically");

    FiniteLattice k = lat_of(p, {}, "G", catalog);
    std::vector<std::pair<int, int>> dead_pairs;
    for (int m : dead)
        dead_pairs.emplace_back(k.label_or_throw("a:" + p.name(m)),
                                k.label_or_throw("b:" + p.name(m)));
    Congruence alpha = dead_pairs.empty() ? Congruence::delta(k.size())
                                          : congruence_closure(k, dead_pairs);
    auto [l, phi] = quotient(k, alpha);

    SurjectiveResult out{LatticeTriple(std::move(k), std::move(l), std::move(phi)), false, false};
    for (int x : dead)
        for (int m : p.mids())
            if (m != x && (p.leq(x, m) || p.leq(m, x))) out.dead_has_comparability = true;

    std::vector<std::string> live_names;
    for (int x : live) live_names.push_back(p.name(x));
    std::vector<NamePair> live_pairs;
    for (int x : live)
        for (int y : live)
            if (p.lt(x, y)) live_pairs.emplace_back(p.name(x), p.name(y));
    BoundedOrder top_part(live_names, live_pairs);
    std::vector<std::string> extra;
    for (size_t i = 0; i < dead.size(); ++i) extra.push_back("x:" + std::to_string(i));
    FiniteLattice reference = lat_of(top_part, extra, "G", catalog);
    if (out.triple.l.size() <= 24 && reference.size() <= 24)
        out.latx_form = order_isomorphism(out.triple.l.order(), reference.order()).has_value();
    return out;
}

struct ClauseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RepresentationReport {
    std::vector<ClauseResult> clauses;
    int k_size = 0;
    int m_size = 0;
    int l_size = 0;
    ConstructionReport construction;
    std::string catalog_hash;
    double elapsed_seconds = 0.0;

    bool all_pass() const {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }
};

/// Builds the realization and checks every clause of its contract, including
/// the round trip back to the input triple. Oracle cross-checks run when the
/// result is small enough for exhaustive partition search.
inline RepresentationReport verify_representation(const OrderTriple& t,
                                                  Variant variant = Variant::reduced,
                                                  const GadgetCatalog& catalog = GadgetCatalog::builtin(),
                                                  int oracle_limit = 10) {
    auto t0 = std::chrono::steady_clock::now();
    RepresentationReport out;
    out.catalog_hash = catalog.hash();
    RepresentResult r = represent_full(t, variant, catalog);
    const FiniteLattice& k = r.triple.k;
    const FiniteLattice& l = r.triple.l;
    out.k_size = k.size();
    out.m_size = r.m.size();
    out.l_size = l.size();
    out.construction = r.report;

    auto clause = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.clauses.push_back(ClauseResult{name, pass, detail});
    };

    clause("m-embeds", is_01_sublattice(r.m, l, r.embedding));

    std::string why;
    clause("princ-k", princ_matches_order(k, t.p, {}, &why), why);
    why.clear();
    clause("princ-l", princ_matches_order(l, t.q, r.q_names, &why), why);

    auto congs = all_congruences(l);
    int expected = down_set_order(t.q, false).size() + 1;
    clause("con-l-count",
           static_cast<int>(congs.size()) == expected,
           "found " + std::to_string(congs.size()) + ", expected " + std::to_string(expected));

    if (l.size() <= oracle_limit) {
        auto ocongs = oracle_all_congruences(l, oracle_limit);
        clause("oracle", congs == ocongs);
    }

    bool wish = true;
    std::string wish_why;
    for (int pm : t.p.mids()) {
        int a = l.index(r.triple.phi.apply(k.name(k.label_or_throw("a:" + t.p.name(pm)))));
        int b = l.index(r.triple.phi.apply(k.name(k.label_or_throw("b:" + t.p.name(pm)))));
        int im = t.psi.apply(pm);
        Congruence got = principal_congruence(l, a, b);
        Congruence want = Congruence::delta(l.size());
        if (im == t.q.top()) {
            want = Congruence::nabla(l.size());
        } else if (im != t.q.bottom()) {
            want = principal_congruence(l, l.label_or_throw("a:" + r.q_names.at(t.q.name(im))),
                                        l.label_or_throw("b:" + r.q_names.at(t.q.name(im))));
        }
        if (!(got == want)) {
            wish = false;
            wish_why = "forcing fails at '" + t.p.name(pm) + "'";
            break;
        }
    }
    clause("wish-forcing", wish, wish_why);

    try {
        OrderTriple back = ordc(r.triple);
        clause("round-trip", triple_isomorphism(back, t).has_value());

        bool square = true;
        std::string square_why;
        PrincOrder pk = princ_order(k);
        PrincOrder pl = princ_order(l);
        IsotoneMap induced = induced_hom_map(r.triple.phi, pk, pl);
        for (int x = 0; x < t.p.size(); ++x) {
            Congruence cx = Congruence::delta(k.size());
            if (x == t.p.top())
                cx = Congruence::nabla(k.size());
            else if (x != t.p.bottom())
                cx = principal_congruence(k, k.label_or_throw("a:" + t.p.name(x)),
                                          k.label_or_throw("b:" + t.p.name(x)));
            int im = t.psi.apply(x);
            Congruence cy = Congruence::delta(l.size());
            if (im == t.q.top())
                cy = Congruence::nabla(l.size());
            else if (im != t.q.bottom())
                cy = principal_congruence(l, l.label_or_throw("a:" + r.q_names.at(t.q.name(im))),
                                          l.label_or_throw("b:" + r.q_names.at(t.q.name(im))));
            if (!(pl.congruences[static_cast<size_t>(induced.apply(pk.find(cx)))] == cy)) {
                square = false;
                square_why = "square fails at '" + t.p.name(x) + "'";
                break;
            }
        }
        clause("square-commutes", square, square_why);
    } catch (const WellDefinednessViolation& e) {
        clause("round-trip", false, e.what());
        clause("square-commutes", false, "induced map is not well defined");
    }

    clause("counts", r.report.added == r.report.catalog_expected,
           "added " + std::to_string(r.report.added) + ", accounted " +
               std::to_string(r.report.catalog_expected));

    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace princ
