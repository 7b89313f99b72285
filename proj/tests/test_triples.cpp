#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "princ/congruence.hpp"
#include "princ/corpus.hpp"
#include "princ/errors.hpp"
#include "princ/triples.hpp"

using namespace princ;

namespace {

LatticeTriple identity_triple(const FiniteLattice& l) {
    std::vector<int> id;
    for (int i = 0; i < l.size(); ++i) id.push_back(i);
    return LatticeTriple(l, l, LatticeHom(l, l, id));
}

OrderTriple one_mid_triple(const std::string& image) {
    BoundedOrder p = chain_order({"0", "p", "1"});
    BoundedOrder q = chain_order({"0", "q", "1"});
    return OrderTriple(p, q, IsotoneMap(p, q, {{"0", "0"}, {"p", image}, {"1", "1"}}));
}

}  // namespace

TEST_CASE("principal extraction of an identity triple is an identity",
          "[triples][ordc]") {
    FiniteLattice c2(chain_order({"0", "1"}));
    OrderTriple t = ordc(identity_triple(c2));
    REQUIRE(t.p.size() == 2);
    REQUIRE(t.q.size() == 2);
    for (int i = 0; i < t.p.size(); ++i)
        REQUIRE(t.psi.apply(t.p.name(i)) == t.p.name(i));
}

TEST_CASE("principal extraction of a collapse", "[triples][ordc]") {
    FiniteLattice c3(chain_order({"o", "m", "i"}));
    FiniteLattice c2(chain_order({"0", "1"}));
    LatticeHom phi(c3, c2, {c2.bottom(), c2.top(), c2.top()});
    LatticeTriple lt(c3, c2, phi);
    OrderTriple t = ordc(lt);

    REQUIRE(t.p.size() == 4);
    REQUIRE(t.q.size() == 2);
    // con(o,m) is named by its witness pair and collapses to the top
    REQUIRE(t.psi.apply("con(o,m)") == "con(0,1)");
    REQUIRE(t.psi.apply("con(m,i)") == "con(0,0)");
    REQUIRE(is_surjective_triple(lt));
    REQUIRE(is_surjective_triple(t));
}

TEST_CASE("surjectivity of triples", "[triples]") {
    FiniteLattice c2(chain_order({"0", "1"}));
    FiniteLattice c3(chain_order({"o", "m", "i"}));
    REQUIRE(is_surjective_triple(identity_triple(c2)));

    // inclusion of the bounds misses the middle
    LatticeHom inc(c2, c3, {c3.bottom(), c3.top()});
    REQUIRE_FALSE(is_surjective_triple(LatticeTriple(c2, c3, inc)));
}

TEST_CASE("quotient-only realization of a surjective triple", "[triples][surjective]") {
    BoundedOrder p = chain_order({"0", "p", "1"});
    BoundedOrder q = chain_order({"0", "1"});
    OrderTriple t(p, q, IsotoneMap(p, q, {{"0", "0"}, {"p", "0"}, {"1", "1"}}));

    SurjectiveResult r = represent_surjective(t);
    REQUIRE(is_surjective_triple(r.triple));
    REQUIRE(r.latx_form);
    REQUIRE_FALSE(r.dead_has_comparability);

    // the quotient kernel isolates the bounds and collapses exactly the dead chain
    const FiniteLattice& k = r.triple.k;
    std::vector<int> kernel(static_cast<size_t>(k.size()));
    for (int i = 0; i < k.size(); ++i) kernel[static_cast<size_t>(i)] = r.triple.phi.apply(i);
    Congruence alpha(k.size(), kernel);
    REQUIRE(is_01_isolating(k, alpha));
    REQUIRE(base_of(k, alpha, p) == DownSet{"p"});

    auto round = triple_isomorphism(ordc(r.triple), t);
    REQUIRE(round.has_value());
}

TEST_CASE("identity triples take the surjective shortcut unchanged",
          "[triples][surjective]") {
    BoundedOrder p = chain_order({"0", "p", "1"});
    std::vector<int> id{0, 1, 2};
    OrderTriple t(p, p, IsotoneMap(p, p, id));
    SurjectiveResult r = represent_surjective(t);
    REQUIRE(r.triple.k.size() == r.triple.l.size());
    REQUIRE(triple_isomorphism(ordc(r.triple), t).has_value());
}

TEST_CASE("surjective realization enforces its hypotheses", "[triples][surjective]") {
    BoundedOrder c2 = chain_order({"0", "1"});
    BoundedOrder c3 = chain_order({"0", "m", "1"});
    OrderTriple inc(c2, c3, IsotoneMap(c2, c3, {{"0", "0"}, {"1", "1"}}));
    REQUIRE_THROWS_AS(represent_surjective(inc), HypothesisViolated);

    // surjective, but two live elements share an image
    BoundedOrder anti({"0", "p", "q", "1"}, {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}});
    OrderTriple merged(anti, c3,
                       IsotoneMap(anti, c3, {{"0", "0"}, {"p", "m"}, {"q", "m"}, {"1", "1"}}));
    REQUIRE_THROWS_AS(represent_surjective(merged), HypothesisViolated);
}

TEST_CASE("full pipeline on the smallest triple", "[triples][represent]") {
    BoundedOrder c2 = chain_order({"0", "1"});
    OrderTriple t(c2, c2, IsotoneMap(c2, c2, {0, 1}));
    for (Variant v : {Variant::reduced, Variant::original}) {
        RepresentationReport r = verify_representation(t, v);
        INFO(variant_name(v));
        for (const auto& c : r.clauses) {
            INFO(c.name + ": " + c.detail);
            CHECK(c.pass);
        }
        REQUIRE(r.all_pass());
    }
}

TEST_CASE("full pipeline realizes a live one-mid triple", "[triples][represent]") {
    OrderTriple t = one_mid_triple("q");

    RepresentResult reduced = represent_full(t, Variant::reduced);
    REQUIRE(reduced.triple.k.size() == 6);
    REQUIRE(reduced.m.size() == 6);
    REQUIRE(reduced.triple.l.size() == 10);
    REQUIRE(reduced.report.added == 4);
    REQUIRE(reduced.report.added == reduced.report.catalog_expected);
    REQUIRE_FALSE(reduced.report.deviates);

    RepresentResult original = represent_full(t, Variant::original);
    REQUIRE(original.triple.l.size() == 14);
    REQUIRE(original.report.added == 8);
    REQUIRE(original.report.formula_nominal == 30);
    REQUIRE(original.report.deviates);

    // the wish: both labeled chains generate the same congruence of L
    const FiniteLattice& l = reduced.triple.l;
    Congruence cp = principal_congruence(l, l.label_or_throw("a:p"), l.label_or_throw("b:p"));
    std::string qn = reduced.q_names.at("q");
    Congruence cq = principal_congruence(l, l.label_or_throw("a:" + qn),
                                         l.label_or_throw("b:" + qn));
    REQUIRE(cp == cq);

    REQUIRE(triple_isomorphism(ordc(reduced.triple), t).has_value());
    REQUIRE(triple_isomorphism(ordc(original.triple), t).has_value());
}

TEST_CASE("full pipeline survives a dead middle", "[triples][represent]") {
    OrderTriple t = one_mid_triple("0");
    for (Variant v : {Variant::reduced, Variant::original}) {
        RepresentationReport r = verify_representation(t, v);
        INFO(variant_name(v));
        REQUIRE(r.all_pass());
    }
}

TEST_CASE("full pipeline survives a middle sent to the top", "[triples][represent]") {
    OrderTriple t = one_mid_triple("1");
    RepresentResult r = represent_full(t, Variant::reduced);
    REQUIRE(r.report.top_collapses == 1);
    const FiniteLattice& l = r.triple.l;
    REQUIRE(principal_congruence(l, l.label_or_throw("a:p"), l.label_or_throw("b:p"))
                .is_nabla());
    REQUIRE(triple_isomorphism(ordc(r.triple), t).has_value());
}

TEST_CASE("verification reports are deterministic", "[triples][report]") {
    OrderTriple t = one_mid_triple("q");
    RepresentationReport a = verify_representation(t, Variant::reduced);
    RepresentationReport b = verify_representation(t, Variant::reduced);
    REQUIRE(a.clauses.size() == b.clauses.size());
    for (size_t i = 0; i < a.clauses.size(); ++i) {
        REQUIRE(a.clauses[i].name == b.clauses[i].name);
        REQUIRE(a.clauses[i].pass == b.clauses[i].pass);
        REQUIRE(a.clauses[i].detail == b.clauses[i].detail);
    }
    REQUIRE(a.k_size == b.k_size);
    REQUIRE(a.m_size == b.m_size);
    REQUIRE(a.l_size == b.l_size);
    REQUIRE(a.catalog_hash == b.catalog_hash);
}

TEST_CASE("exhaustive roundtrip at the smallest sizes", "[triples][corpus]") {
    SuiteResult r = suite_triple_roundtrip(GadgetCatalog::builtin(), 3);
    INFO(r.detail);
    REQUIRE(r.pass);
    // 2 shapes per side at sizes 2..3 up to iso, 7 isotone maps between
    // them, realized in both variants
    REQUIRE(r.cases == 14);
}
