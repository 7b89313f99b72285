#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "construct.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "order.hpp"
#include "triples.hpp"

namespace princ {

using Rng = std::mt19937_64;

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::string detail;
    long cases = 0;
    double seconds = 0.0;
};

struct CheckResult {
    bool pass = true;
    std::string detail;

    void fail(const std::string& msg) {
        if (pass) {
            pass = false;
            detail = msg;
        }
    }
};

// ---------------------------------------------------------------- fixtures

inline BoundedOrder chain_order(const std::vector<std::string>& names) {
    std::vector<NamePair> pairs;
    for (size_t i = 0; i + 1 < names.size(); ++i) pairs.emplace_back(names[i], names[i + 1]);
    return BoundedOrder(names, pairs);
}

inline BoundedOrder b2_order() {
    return BoundedOrder({"o", "a", "b", "i"}, {{"o", "a"}, {"o", "b"}, {"a", "i"}, {"b", "i"}});
}

inline BoundedOrder n5_order() {
    return BoundedOrder({"o", "a", "b", "c", "i"},
                        {{"o", "a"}, {"a", "b"}, {"b", "i"}, {"o", "c"}, {"c", "i"}});
}

inline BoundedOrder m3_order() {
    return BoundedOrder({"o", "a", "b", "c", "i"},
                        {{"o", "a"}, {"o", "b"}, {"o", "c"}, {"a", "i"}, {"b", "i"}, {"c", "i"}});
}

inline std::vector<FiniteLattice> fixture_lattices() {
    std::vector<FiniteLattice> out;
    out.emplace_back(chain_order({"o", "i"}));
    out.emplace_back(chain_order({"o", "m", "i"}));
    out.emplace_back(chain_order({"o", "a", "b", "i"}));
    out.emplace_back(chain_order({"o", "a", "b", "c", "i"}));
    out.emplace_back(b2_order());
    out.emplace_back(n5_order());
    out.emplace_back(m3_order());
    return out;
}

// ------------------------------------------------------------- enumeration

namespace detail {

inline std::set<DownSet> all_down_sets(const BoundedOrder& p) {
    std::vector<int> mids = p.mids();
    const int m = static_cast<int>(mids.size());
    std::set<DownSet> out;
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool closed = true;
        for (int i = 0; i < m && closed; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = 0; j < m; ++j)
                if (p.leq(mids[static_cast<size_t>(j)], mids[static_cast<size_t>(i)]) &&
                    !(mask & (1u << j))) {
                    closed = false;
                    break;
                }
        }
        if (!closed) continue;
        DownSet d;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) d.insert(p.name(mids[static_cast<size_t>(i)]));
        out.insert(std::move(d));
    }
    return out;
}

}  // namespace detail

/// All bounded orders with at most max_size elements, one per isomorphism
/// class. Interior elements are named m0, m1, ...
inline std::vector<BoundedOrder> all_bounded_orders(int max_size) {
    std::vector<BoundedOrder> out;
    for (int n = 2; n <= max_size; ++n) {
        const int m = n - 2;
        std::vector<std::string> names{"0"};
        for (int i = 0; i < m; ++i) names.push_back("m" + std::to_string(i));
        names.push_back("1");
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j) slots.emplace_back(i, j);
        for (uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
            std::vector<NamePair> pairs;
            for (int i = 0; i < m; ++i) {
                pairs.emplace_back("0", "m" + std::to_string(i));
                pairs.emplace_back("m" + std::to_string(i), "1");
            }
            if (m == 0) pairs.emplace_back("0", "1");
            for (size_t s = 0; s < slots.size(); ++s)
                if (mask & (1u << s))
                    pairs.emplace_back("m" + std::to_string(slots[s].first),
                                       "m" + std::to_string(slots[s].second));
            try {
                BoundedOrder cand(names, pairs);
                bool fresh = true;
                for (const auto& seen : out)
                    if (seen.size() == cand.size() && order_isomorphism(seen, cand)) {
                        fresh = false;
                        break;
                    }
                if (fresh) out.push_back(std::move(cand));
            } catch (const CycleDetected&) {
            }
        }
    }
    return out;
}

/// All isotone bound-preserving maps from P to Q, in a stable order.
inline std::vector<IsotoneMap> isotone_maps(const BoundedOrder& p, const BoundedOrder& q,
                                            bool zero_separating_only = false) {
    std::vector<IsotoneMap> out;
    std::vector<int> mids = p.mids();
    std::vector<int> pick(mids.size(), 0);
    while (true) {
        std::vector<int> assignment(static_cast<size_t>(p.size()), -1);
        assignment[static_cast<size_t>(p.bottom())] = q.bottom();
        assignment[static_cast<size_t>(p.top())] = q.top();
        for (size_t i = 0; i < mids.size(); ++i)
            assignment[static_cast<size_t>(mids[i])] = pick[i];
        bool ok = true;
        for (size_t i = 0; i < mids.size() && ok; ++i) {
            if (zero_separating_only && pick[i] == q.bottom()) ok = false;
            for (size_t j = 0; j < mids.size() && ok; ++j)
                if (p.leq(mids[i], mids[j]) && !q.leq(pick[i], pick[j])) ok = false;
        }
        if (ok) out.emplace_back(p, q, assignment);
        size_t k = 0;
        for (; k < pick.size(); ++k) {
            if (++pick[k] < q.size()) break;
            pick[k] = 0;
        }
        if (k == pick.size()) break;
    }
    return out;
}

// ------------------------------------------------------------------ random

inline BoundedOrder random_order(Rng& rng, int n) {
    const int m = n - 2;
    std::vector<std::string> names{"0"};
    for (int i = 0; i < m; ++i) names.push_back("m" + std::to_string(i));
    names.push_back("1");
    std::vector<NamePair> pairs;
    for (int i = 0; i < m; ++i) {
        pairs.emplace_back("0", "m" + std::to_string(i));
        pairs.emplace_back("m" + std::to_string(i), "1");
    }
    if (m == 0) pairs.emplace_back("0", "1");
    std::uniform_int_distribution<int> coin(0, 2);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (coin(rng) == 0)
                pairs.emplace_back("m" + std::to_string(i), "m" + std::to_string(j));
    return BoundedOrder(names, pairs);
}

/// Backtracking search for bound-preserving homomorphisms K -> L. Candidate
/// images are tried in a shuffled order, monotonicity prunes the branches,
/// and each leaf is validated in full before being kept.
inline std::vector<LatticeHom> hom_search(const FiniteLattice& k, const FiniteLattice& l,
                                          Rng& rng, int cap) {
    std::vector<LatticeHom> out;
    std::vector<int> img(static_cast<size_t>(k.size()), -1);
    std::vector<int> shuffled(static_cast<size_t>(l.size()));
    std::iota(shuffled.begin(), shuffled.end(), 0);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    long budget = 500000;

    std::function<void(int)> go = [&](int e) {
        if (static_cast<int>(out.size()) >= cap || budget-- <= 0) return;
        if (e == k.size()) {
            try {
                out.emplace_back(k, l, img);
            } catch (const std::invalid_argument&) {
            }
            return;
        }
        auto try_one = [&](int cand) {
            for (int f = 0; f < e; ++f) {
                if (k.leq(f, e) && !l.leq(img[static_cast<size_t>(f)], cand)) return;
                if (k.leq(e, f) && !l.leq(cand, img[static_cast<size_t>(f)])) return;
            }
            for (int f = 0; f < e; ++f)
                for (int g = 0; g <= f; ++g) {
                    int mv = k.meet(f, g), jv = k.join(f, g);
                    int fm = l.meet(img[static_cast<size_t>(f)], img[static_cast<size_t>(g)]);
                    int fj = l.join(img[static_cast<size_t>(f)], img[static_cast<size_t>(g)]);
                    if (mv == e && fm != cand) return;
                    if (jv == e && fj != cand) return;
                }
            img[static_cast<size_t>(e)] = cand;
            go(e + 1);
            img[static_cast<size_t>(e)] = -1;
        };
        if (e == k.bottom()) {
            try_one(l.bottom());
        } else if (e == k.top()) {
            try_one(l.top());
        } else {
            for (int cand : shuffled) try_one(cand);
        }
    };
    go(0);
    return out;
}

// --------------------------------------------------------- contract checks

/// Full contract of the one-sided construction: the principal congruences
/// mirror P with the extra identifiers acting as universal complements, the
/// whole congruence lattice mirrors the down-sets of the interior of P with
/// collapse bases as the bijection, and everything agrees with the oracle
/// when small enough.
inline CheckResult check_frame_contract(const BoundedOrder& p, const std::vector<std::string>& extra,
                                        const std::string& kind,
                                        const GadgetCatalog& catalog = GadgetCatalog::builtin(),
                                        int oracle_limit = 10) {
    CheckResult r;
    FiniteLattice l = lat_of(p, extra, kind, catalog);

    std::string why;
    if (!princ_matches_order(l, p, {}, &why)) {
        r.fail("principal square: " + why);
        return r;
    }
    for (const auto& x : extra)
        if (!is_universal_complement(l, x)) {
            r.fail("'" + x + "' is not a universal complement");
            return r;
        }

    auto congs = all_congruences(l);
    std::vector<std::pair<Congruence, DownSet>> based;
    based.emplace_back(Congruence::delta(l.size()), DownSet{});
    int nabla_count = 0;
    for (const auto& th : congs) {
        if (th.is_delta()) continue;
        if (th.is_nabla()) {
            ++nabla_count;
            continue;
        }
        if (!is_01_isolating(l, th)) {
            r.fail("congruence " + th.to_string(l.order()) + " is neither isolating nor a bound");
            return r;
        }
        based.emplace_back(th, base_of(l, th, p));
    }
    if (nabla_count != 1) {
        r.fail("expected exactly one full congruence");
        return r;
    }
    std::set<DownSet> bases;
    for (const auto& [th, d] : based) bases.insert(d);
    if (bases.size() != based.size()) {
        r.fail("two congruences share a collapse base");
        return r;
    }
    if (bases != detail::all_down_sets(p)) {
        r.fail("collapse bases do not match the down-sets of the interior");
        return r;
    }
    for (const auto& [t1, d1] : based)
        for (const auto& [t2, d2] : based) {
            bool below = std::includes(d2.begin(), d2.end(), d1.begin(), d1.end());
            if (t1.refines(t2) != below) {
                r.fail("collapse bases are not ordered like their congruences");
                return r;
            }
        }

    PrincOrder pr = princ_order(l);
    for (const auto& [th, d] : based) {
        bool is_principal = false;
        for (const auto& c : pr.congruences)
            if (c == th) {
                is_principal = true;
                break;
            }
        bool principal_base =
            d.empty() || (d.size() == 1 && d == principal_down_set(p, *d.begin()));
        if (d.size() > 1) {
            principal_base = false;
            for (const auto& nm : d)
                if (d == principal_down_set(p, nm)) principal_base = true;
        }
        if (is_principal != principal_base) {
            r.fail("principal congruences do not line up with principal down-sets");
            return r;
        }
    }
    for (int m : p.mids()) {
        Congruence c = principal_congruence(l, l.label_or_throw("a:" + p.name(m)),
                                            l.label_or_throw("b:" + p.name(m)));
        if (!(base_of(l, c, p) == principal_down_set(p, p.name(m)))) {
            r.fail("chain congruence of '" + p.name(m) + "' has the wrong base");
            return r;
        }
    }

    if (l.size() <= oracle_limit) {
        if (!(congs == oracle_all_congruences(l, oracle_limit))) {
            r.fail("closure-based congruence list disagrees with the oracle");
            return r;
        }
    }
    return r;
}

/// Full contract of the two-sided construction for a zero-separating map.
inline CheckResult check_czedli_contract(const BoundedOrder& p, const BoundedOrder& q,
                                         const IsotoneMap& beta, Variant variant,
                                         const GadgetCatalog& catalog = GadgetCatalog::builtin(),
                                         int oracle_limit = 10) {
    CheckResult r;
    CzedliResult cz = czedli_construct(p, q, beta, variant, catalog);
    const FiniteLattice& m = cz.m;
    const FiniteLattice& l = cz.l;

    std::string why;
    if (!princ_matches_order(m, p, {}, &why)) {
        r.fail("side square: " + why);
        return r;
    }
    if (!princ_matches_order(l, q, cz.q_names, &why)) {
        r.fail("whole square: " + why);
        return r;
    }
    if (!is_01_sublattice(m, l, cz.embedding)) {
        r.fail("generated part is not a bound-preserving sublattice");
        return r;
    }
    const std::string cell = variant == Variant::original ? "GExt" : "G";
    FiniteLattice reference = lat_of(p, {}, cell, catalog);
    if (m.size() <= 24 && reference.size() <= 24 &&
        !order_isomorphism(m.order(), reference.order())) {
        r.fail("generated part is not the one-sided construction");
        return r;
    }

    auto congs = all_congruences(l);
    size_t expected = detail::all_down_sets(q).size() + 1;
    if (congs.size() != expected) {
        r.fail("expected " + std::to_string(expected) + " congruences, found " +
               std::to_string(congs.size()));
        return r;
    }
    if (l.size() <= oracle_limit && !(congs == oracle_all_congruences(l, oracle_limit))) {
        r.fail("closure-based congruence list disagrees with the oracle");
        return r;
    }

    PrincOrder pm = princ_order(m);
    PrincOrder pl = princ_order(l);
    IsotoneMap induced = induced_sub_map(m, l, cz.embedding, pm, pl);
    for (int x = 0; x < p.size(); ++x) {
        Congruence cx = Congruence::delta(m.size());
        if (x == p.top())
            cx = Congruence::nabla(m.size());
        else if (x != p.bottom())
            cx = principal_congruence(m, m.label_or_throw("a:" + p.name(x)),
                                      m.label_or_throw("b:" + p.name(x)));
        int im = beta.apply(x);
        Congruence cy = Congruence::delta(l.size());
        if (im == q.top())
            cy = Congruence::nabla(l.size());
        else if (im != q.bottom())
            cy = principal_congruence(l, l.label_or_throw("a:" + cz.q_names.at(q.name(im))),
                                      l.label_or_throw("b:" + cz.q_names.at(q.name(im))));
        if (!(pl.congruences[static_cast<size_t>(induced.apply(pm.find(cx)))] == cy)) {
            r.fail("square fails at '" + p.name(x) + "'");
            return r;
        }
    }

    for (int pm_ : p.mids()) {
        int im = beta.apply(pm_);
        Congruence got = principal_congruence(l, l.label_or_throw("a:" + p.name(pm_)),
                                              l.label_or_throw("b:" + p.name(pm_)));
        Congruence want = Congruence::nabla(l.size());
        if (im != q.top())
            want = principal_congruence(l, l.label_or_throw("a:" + cz.q_names.at(q.name(im))),
                                        l.label_or_throw("b:" + cz.q_names.at(q.name(im))));
        if (!(got == want)) {
            r.fail("coupling fails to force the image congruence at '" + p.name(pm_) + "'");
            return r;
        }
    }

    if (cz.report.added != cz.report.catalog_expected) {
        r.fail("size accounting mismatch: added " + std::to_string(cz.report.added) +
               ", accounted " + std::to_string(cz.report.catalog_expected));
        return r;
    }
    return r;
}

// ------------------------------------------------------------------ suites

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

inline std::vector<FiniteLattice> lattice_pool(Rng& rng, int want, int max_size) {
    std::vector<FiniteLattice> pool = fixture_lattices();
    std::uniform_int_distribution<int> size_dist(3, max_size);
    int attempts = 0;
    while (static_cast<int>(pool.size()) < want && attempts < want * 60) {
        ++attempts;
        try {
            pool.emplace_back(random_order(rng, size_dist(rng)));
        } catch (const NotALattice&) {
        }
    }
    return pool;
}

}  // namespace detail

inline SuiteResult suite_oracle_equivalence(uint64_t seed, int samples = 200, int max_size = 8) {
    detail::Stopwatch sw;
    SuiteResult out;
    out.name = "oracle-equivalence";
    Rng rng(seed);
    long lattices = 0;

    auto check_one = [&](const FiniteLattice& l) {
        ++lattices;
        auto congs = all_congruences(l);
        auto truth = oracle_all_congruences(l, 2 * max_size);
        if (!(congs == truth)) {
            out.pass = false;
            out.detail = "congruence lists disagree on a lattice of size " +
                         std::to_string(l.size());
            return;
        }
        for (int i = 0; i < l.size() && out.pass; ++i)
            for (int j = i + 1; j < l.size(); ++j) {
                Congruence fast = principal_congruence(l, i, j);
                std::optional<Congruence> best;
                for (const auto& c : truth) {
                    if (!c.same(i, j)) continue;
                    if (!best || c.refines(*best)) best = c;
                }
                if (!(fast == *best)) {
                    out.pass = false;
                    out.detail = "principal congruence of ('" + l.name(i) + "','" + l.name(j) +
                                 "') disagrees with the oracle";
                    break;
                }
            }
    };

    for (const auto& l : fixture_lattices()) {
        if (!out.pass) break;
        check_one(l);
    }
    std::uniform_int_distribution<int> size_dist(3, max_size);
    for (int s = 0; s < samples && out.pass; ++s) {
        ++out.cases;
        try {
            FiniteLattice l{random_order(rng, size_dist(rng))};
            check_one(l);
        } catch (const NotALattice&) {
        }
    }
    if (out.pass) out.detail = std::to_string(lattices) + " lattices cross-checked";
    out.seconds = sw.elapsed();
    return out;
}

inline SuiteResult suite_projectivity_coherence() {
    detail::Stopwatch sw;
    SuiteResult out;
    out.name = "projectivity-coherence";
    for (const auto& l : fixture_lattices()) {
        std::vector<Interval> intervals;
        for (int a = 0; a < l.size(); ++a)
            for (int b = 0; b < l.size(); ++b)
                if (l.leq(a, b)) intervals.push_back({a, b});
        for (const auto& src : intervals) {
            Congruence c = principal_congruence(l, src.low, src.high);
            for (const auto& dst : intervals) {
                ++out.cases;
                std::optional<std::vector<int>> w;
                try {
                    w = is_cong_projective(l, src, dst);
                } catch (const WellDefinednessViolation& e) {
                    out.pass = false;
                    out.detail = e.what();
                    return out;
                }
                if (w && !c.same(dst.low, dst.high)) {
                    out.pass = false;
                    out.detail = "a reachable interval escapes the generated congruence";
                    return out;
                }
                if (c.same(dst.low, dst.high)) {
                    try {
                        if (!spreading_chain(l, src, dst)) {
                            out.pass = false;
                            out.detail = "collapsed interval lacks a spreading chain";
                            return out;
                        }
                    } catch (const WellDefinednessViolation& e) {
                        out.pass = false;
                        out.detail = e.what();
                        return out;
                    }
                }
            }
        }
    }
    out.detail = std::to_string(out.cases) + " interval pairs examined";
    out.seconds = sw.elapsed();
    return out;
}

inline SuiteResult suite_hom_transport(uint64_t seed, int min_homs = 500, int max_size = 8) {
    detail::Stopwatch sw;
    SuiteResult out;
    out.name = "hom-transport";
    Rng rng(seed);
    auto pool = detail::lattice_pool(rng, 40, max_size);
    std::vector<PrincOrder> princs;
    princs.reserve(pool.size());
    for (const auto& l : pool) princs.push_back(princ_order(l));

    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    long homs = 0;
    int rounds = 0;
    while (homs < min_homs && rounds < min_homs * 4) {
        ++rounds;
        size_t ki = pick(rng), li = pick(rng);
        const FiniteLattice& k = pool[ki];
        const FiniteLattice& l = pool[li];
        for (const auto& f : hom_search(k, l, rng, 8)) {
            ++homs;
            ++out.cases;
            std::uniform_int_distribution<int> ke(0, k.size() - 1);

            for (int tries = 0; tries < 4; ++tries) {
                int a = ke(rng), b = ke(rng), c = ke(rng), d = ke(rng);
                if (!k.leq(a, b)) std::swap(a, b);
                if (!k.leq(a, b)) continue;
                if (!k.leq(c, d)) std::swap(c, d);
                if (!k.leq(c, d)) continue;
                auto w = is_cong_projective(k, {a, b}, {c, d});
                if (!w) continue;
                std::vector<int> fw;
                for (int s : *w) fw.push_back(f.apply(s));
                if (eval_alternating_term(l, f.apply(a), fw) != f.apply(c) ||
                    eval_alternating_term(l, f.apply(b), fw) != f.apply(d)) {
                    out.pass = false;
                    out.detail = "a projectivity witness fails after mapping";
                    return out;
                }
            }

            int a = ke(rng), b = ke(rng);
            Congruence ck = principal_congruence(k, a, b);
            Congruence cl = principal_congruence(l, f.apply(a), f.apply(b));
            for (int x = 0; x < k.size(); ++x)
                for (int y = x + 1; y < k.size(); ++y)
                    if (ck.same(x, y) && !cl.same(f.apply(x), f.apply(y))) {
                        out.pass = false;
                        out.detail = "a collapsed pair separates after mapping";
                        return out;
                    }

            for (int tries = 0; tries < 4; ++tries) {
                int c = ke(rng), d = ke(rng);
                Congruence ck2 = principal_congruence(k, c, d);
                if (!ck2.refines(ck)) continue;
                Congruence cl2 = principal_congruence(l, f.apply(c), f.apply(d));
                if (!cl2.refines(cl)) {
                    out.pass = false;
                    out.detail = "congruence comparison is not preserved";
                    return out;
                }
            }

            try {
                induced_hom_map(f, princs[ki], princs[li]);
            } catch (const WellDefinednessViolation& e) {
                out.pass = false;
                out.detail = e.what();
                return out;
            }
        }
    }
    if (homs < min_homs) {
        out.pass = false;
        out.detail = "only " + std::to_string(homs) + " homomorphisms found";
    } else {
        out.detail = std::to_string(homs) + " homomorphisms transported";
    }
    out.seconds = sw.elapsed();
    return out;
}

inline SuiteResult suite_quotient_transport(uint64_t seed, int min_cases = 100, int max_size = 8) {
    detail::Stopwatch sw;
    SuiteResult out;
    out.name = "quotient-transport";
    Rng rng(seed);
    auto pool = detail::lattice_pool(rng, 40, max_size);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    while (out.cases < min_cases) {
        const FiniteLattice& l = pool[pick(rng)];
        auto congs = all_congruences(l);
        std::uniform_int_distribution<size_t> cpick(0, congs.size() - 1);
        const Congruence& th = congs[cpick(rng)];
        if (th.is_nabla()) continue;
        ++out.cases;
        auto [m, hom] = quotient(l, th);
        IsotoneMap induced = induced_hom_map(hom);
        if (!induced.is_surjective()) {
            out.pass = false;
            out.detail = "projection does not cover the principal congruences of the quotient";
            return out;
        }
    }
    out.detail = std::to_string(out.cases) + " quotient projections checked";
    out.seconds = sw.elapsed();
    return out;
}

inline SuiteResult suite_frame_contracts(const GadgetCatalog& catalog = GadgetCatalog::builtin(),
                                         int max_p = 5) {
    detail::Stopwatch sw;
    SuiteResult out;
    out.name = "frame-contracts";
    for (const auto& p : all_bounded_orders(max_p))
        for (int xs = 0; xs <= 2; ++xs) {
            std::vector<std::string> extra;
            for (int i = 0; i < xs; ++i) extra.push_back("x:" + std::to_string(i));
            for (const std::string kind : {"G", "GExt"}) {
                ++out.cases;
                CheckResult r = check_frame_contract(p, extra, kind, catalog);
                if (!r.pass) {
                    out.pass = false;
                    out.detail = "size " + std::to_string(p.size()) + ", |extra| " +
                                 std::to_string(xs) + ", " + kind + ": " + r.detail;
                    return out;
                }
            }
        }
    out.detail = std::to_string(out.cases) + " constructions checked";
    out.seconds = sw.elapsed();
    return out;
}

inline SuiteResult suite_triple_roundtrip(const GadgetCatalog& catalog = GadgetCatalog::builtin(),
                                          int max_size = 4) {
    detail::Stopwatch sw;
    SuiteResult out;
    out.name = "triple-roundtrip";
    auto orders = all_bounded_orders(max_size);
    for (const auto& p : orders)
        for (const auto& q : orders)
            for (const auto& psi : isotone_maps(p, q)) {
                OrderTriple t(p, q, psi);
                IsotoneMap alpha = alpha_map(t);
                IsotoneMap beta = beta_map(t);
                if (!alpha.is_surjective() || !is_zero_separating(beta)) {
                    out.pass = false;
                    out.detail = "decomposition halves lost their defining property";
                    return out;
                }
                DownSet btm = btm_of_triple(t);
                for (int x = 0; x < p.size(); ++x) {
                    if (beta.apply(alpha.apply(x)) != psi.apply(x)) {
                        out.pass = false;
                        out.detail = "decomposition does not compose back to the map at '" +
                                     p.name(x) + "'";
                        return out;
                    }
                    bool in_top = alpha.target().has(p.name(x));
                    bool in_btm = btm.count(p.name(x)) > 0;
                    if ((in_top && in_btm && x != p.bottom()) || (!in_top && !in_btm)) {
                        out.pass = false;
                        out.detail = "top and bottom parts do not tile the source";
                        return out;
                    }
                }
                for (Variant v : {Variant::reduced, Variant::original}) {
                    ++out.cases;
                    RepresentationReport r = verify_representation(t, v, catalog);
                    if (!r.all_pass()) {
                        for (const auto& c : r.clauses)
                            if (!c.pass) {
                                out.pass = false;
                                out.detail = "|P|=" + std::to_string(p.size()) +
                                             " |Q|=" + std::to_string(q.size()) + " " +
                                             variant_name(v) + ": " + c.name +
                                             (c.detail.empty() ? "" : " (" + c.detail + ")");
                                return out;
                            }
                    }
                    if (is_zero_separating(psi)) {
                        CheckResult cz = check_czedli_contract(p, q, psi, v, catalog);
                        if (!cz.pass) {
                            out.pass = false;
                            out.detail = "two-sided: " + cz.detail;
                            return out;
                        }
                    }
                }
            }
    out.detail = std::to_string(out.cases) + " realizations verified";
    out.seconds = sw.elapsed();
    return out;
}

inline SuiteResult suite_triple_random(const GadgetCatalog& catalog, uint64_t seed, int count = 50,
                                       int size = 4) {
    detail::Stopwatch sw;
    SuiteResult out;
    out.name = "triple-random";
    Rng rng(seed);
    while (out.cases < count) {
        BoundedOrder p = random_order(rng, size);
        BoundedOrder q = random_order(rng, size);
        auto maps = isotone_maps(p, q);
        std::uniform_int_distribution<size_t> pick(0, maps.size() - 1);
        OrderTriple t(p, q, maps[pick(rng)]);
        Variant v = (rng() & 1) ? Variant::original : Variant::reduced;
        ++out.cases;
        RepresentationReport r = verify_representation(t, v, catalog);
        if (!r.all_pass()) {
            out.pass = false;
            for (const auto& c : r.clauses)
                if (!c.pass) out.detail = c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
            return out;
        }
    }
    out.detail = std::to_string(out.cases) + " random realizations verified";
    out.seconds = sw.elapsed();
    return out;
}

inline SuiteResult suite_gadget_forcing(const GadgetCatalog& catalog = GadgetCatalog::builtin()) {
    detail::Stopwatch sw;
    SuiteResult out;
    out.name = "gadget-forcing";
    BoundedOrder two({"0", "p", "q", "1"}, {{"0", "p"}, {"p", "1"}, {"0", "q"}, {"q", "1"}});
    BoundedOrder one({"0", "p", "1"}, {{"0", "p"}, {"p", "1"}});

    auto chain_con = [](const FiniteLattice& l, const std::string& tag) {
        return principal_congruence(l, l.label_or_throw("a:" + tag),
                                    l.label_or_throw("b:" + tag));
    };

    for (const std::string kind : {"G", "GExt"}) {
        ++out.cases;
        FiniteLattice l = insert_gadget(frame(two, {}), "p", "q", kind, catalog);
        Congruence cp = chain_con(l, "p"), cq = chain_con(l, "q");
        if (!cp.refines(cq) || cq.refines(cp)) {
            out.pass = false;
            out.detail = kind + " cell does not order the chain congruences strictly";
            return out;
        }
    }
    for (const std::string kind : {"Equi", "EquiChain"}) {
        ++out.cases;
        FiniteLattice l = insert_gadget(frame(two, {}), "p", "q", kind, catalog);
        Congruence cp = chain_con(l, "p"), cq = chain_con(l, "q");
        if (!(cp == cq)) {
            out.pass = false;
            out.detail = kind + " does not equalize the chain congruences";
            return out;
        }
        if (cp.is_nabla() || cp.is_delta()) {
            out.pass = false;
            out.detail = kind + " degenerates the chain congruences";
            return out;
        }
    }
    {
        ++out.cases;
        FiniteLattice l = insert_gadget(frame(one, {}), "p", "", "TopCollapse", catalog);
        if (!chain_con(l, "p").is_nabla()) {
            out.pass = false;
            out.detail = "top collapse fails to force the full congruence";
            return out;
        }
    }
    out.detail = std::to_string(out.cases) + " forcing patterns checked";
    out.seconds = sw.elapsed();
    return out;
}

inline SuiteResult suite_counts(const GadgetCatalog& catalog = GadgetCatalog::builtin()) {
    detail::Stopwatch sw;
    SuiteResult out;
    out.name = "size-accounting";
    if (added_element_count(Variant::original, 2, 1, 0) != 75 ||
        added_element_count(Variant::reduced, 2, 1, 0) != 15) {
        out.pass = false;
        out.detail = "nominal growth formula is off";
        return out;
    }
    out.cases = 2;
    BoundedOrder p = chain_order({"0", "p0", "p1", "1"});
    BoundedOrder q = chain_order({"0", "1"});
    IsotoneMap beta(p, q, std::vector<int>{0, 1, 1, 1});
    for (Variant v : {Variant::reduced, Variant::original}) {
        ++out.cases;
        CzedliResult cz = czedli_construct(p, q, beta, v, catalog);
        const auto& rep = cz.report;
        long nominal = v == Variant::original ? 75 : 15;
        if (rep.n_p != 2 || rep.c_p != 1 || rep.c_q != 0 || rep.formula_nominal != nominal) {
            out.pass = false;
            out.detail = "frozen counting instance reports the wrong parameters";
            return out;
        }
        if (rep.added != rep.catalog_expected) {
            out.pass = false;
            out.detail = "accounting identity fails";
            return out;
        }
        if (!rep.deviates) {
            out.pass = false;
            out.detail = "shipped catalog unexpectedly matches the nominal sizes";
            return out;
        }
    }
    out.detail = "nominal formula pinned; accounting identity holds; deviation reported";
    out.seconds = sw.elapsed();
    return out;
}

struct CorpusOptions {
    uint64_t seed = 20260816ull;
    int oracle_samples = 200;
    int oracle_max_size = 8;
    int hom_target = 500;
    int quotient_target = 100;
    int frame_max_size = 5;
    int triple_max_size = 4;
    int random_triples = 50;
};

inline std::vector<SuiteResult> run_all_suites(const GadgetCatalog& catalog,
                                               const CorpusOptions& opt = CorpusOptions{}) {
    std::vector<SuiteResult> out;
    auto guard = [&](const std::string& name, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back(SuiteResult{name, false, std::string("exception: ") + e.what(), 0, 0.0});
        }
    };
    guard("oracle-equivalence", [&] {
        return suite_oracle_equivalence(opt.seed, opt.oracle_samples, opt.oracle_max_size);
    });
    guard("projectivity-coherence", [&] { return suite_projectivity_coherence(); });
    guard("hom-transport", [&] { return suite_hom_transport(opt.seed + 1, opt.hom_target); });
    guard("quotient-transport",
          [&] { return suite_quotient_transport(opt.seed + 2, opt.quotient_target); });
    guard("gadget-forcing", [&] { return suite_gadget_forcing(catalog); });
    guard("frame-contracts", [&] { return suite_frame_contracts(catalog, opt.frame_max_size); });
    guard("triple-roundtrip", [&] { return suite_triple_roundtrip(catalog, opt.triple_max_size); });
    guard("triple-random",
          [&] { return suite_triple_random(catalog, opt.seed + 3, opt.random_triples); });
    guard("size-accounting", [&] { return suite_counts(catalog); });
    return out;
}

}  // namespace princ
