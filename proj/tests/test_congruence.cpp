#include <algorithm>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "princ/congruence.hpp"
#include "princ/construct.hpp"
#include "princ/corpus.hpp"
#include "princ/errors.hpp"

using namespace princ;

namespace {

FiniteLattice n5() { return FiniteLattice(n5_order()); }

std::string con_str(const FiniteLattice& l, const char* a, const char* b) {
    return principal_congruence(l, l.index(a), l.index(b)).to_string(l.order());
}

}  // namespace

TEST_CASE("trivial generators give the trivial congruences", "[congruence]") {
    FiniteLattice l = n5();
    for (int x = 0; x < l.size(); ++x)
        REQUIRE(principal_congruence(l, x, x).is_delta());
    REQUIRE(principal_congruence(l, l.bottom(), l.top()).is_nabla());
}

TEST_CASE("pentagon principal congruences are pinned", "[congruence]") {
    FiniteLattice l = n5();
    REQUIRE(con_str(l, "a", "b") == "o|a,b|c|i");
    REQUIRE(con_str(l, "o", "c") == "o,c|a,b,i");
    REQUIRE(con_str(l, "c", "i") == "o,a,b|c,i");
    // generators are unordered
    REQUIRE(con_str(l, "b", "a") == "o|a,b|c|i");
}

TEST_CASE("substitution property detector", "[congruence]") {
    FiniteLattice c3(chain_order({"o", "m", "i"}));
    REQUIRE(is_congruence(c3, Congruence(3, {0, 0, 1})));
    REQUIRE(is_congruence(c3, Congruence(3, {0, 1, 1})));
    // {o,i | m} is a partition but meets break it
    REQUIRE_FALSE(is_congruence(c3, Congruence(3, {0, 1, 0})));
}

TEST_CASE("oracle counts on the named fixtures", "[congruence][oracle]") {
    REQUIRE(oracle_all_congruences(FiniteLattice(chain_order({"0", "1"}))).size() == 2);
    REQUIRE(oracle_all_congruences(FiniteLattice(chain_order({"o", "m", "i"}))).size() == 4);
    REQUIRE(oracle_all_congruences(n5()).size() == 5);
    // the diamond is simple
    REQUIRE(oracle_all_congruences(FiniteLattice(m3_order())).size() == 2);
}

TEST_CASE("oracle refuses oversized inputs", "[congruence][oracle]") {
    std::vector<std::string> names;
    for (int i = 0; i < 11; ++i) names.push_back("e" + std::to_string(i));
    FiniteLattice big(chain_order(names));
    REQUIRE_THROWS_AS(oracle_all_congruences(big), SizeLimitExceeded);
}

TEST_CASE("closure agrees with the oracle on the fixtures", "[congruence][oracle]") {
    for (const FiniteLattice& l : fixture_lattices()) {
        auto fast = all_congruences(l);
        auto slow = oracle_all_congruences(l);
        REQUIRE(fast == slow);
        for (int a = 0; a < l.size(); ++a)
            for (int b = 0; b < l.size(); ++b)
                REQUIRE(principal_congruence(l, a, b) == oracle_min_congruence(l, a, b));
    }
}

TEST_CASE("congruence lattice operations", "[congruence]") {
    FiniteLattice l = n5();
    Congruence ab = principal_congruence(l, l.index("a"), l.index("b"));
    Congruence oc = principal_congruence(l, l.index("o"), l.index("c"));
    Congruence ci = principal_congruence(l, l.index("c"), l.index("i"));

    REQUIRE(congruence_join(l, ab, Congruence::delta(l.size())) == ab);
    REQUIRE(congruence_meet(l, ab, Congruence::nabla(l.size())) == ab);
    REQUIRE(congruence_meet(l, oc, ci) == ab);
    REQUIRE(congruence_join(l, oc, ci).is_nabla());
}

TEST_CASE("principal order of the 3-chain is a diamond", "[congruence][princ]") {
    FiniteLattice c3(chain_order({"o", "m", "i"}));
    PrincOrder pr = princ_order(c3);
    REQUIRE(pr.order.size() == 4);
    REQUIRE(order_isomorphism(pr.order, b2_order()).has_value());
    // everything in Con is principal here
    REQUIRE(all_congruences(c3).size() == 4);
}

TEST_CASE("principal order of the pentagon covers its congruence lattice",
          "[congruence][princ]") {
    FiniteLattice l = n5();
    PrincOrder pr = princ_order(l);
    REQUIRE(pr.order.size() == 5);
    REQUIRE(all_congruences(l).size() == 5);
    // bottom is the diagonal, top the total relation
    REQUIRE(pr.congruences[static_cast<size_t>(pr.order.bottom())].is_delta());
    REQUIRE(pr.congruences[static_cast<size_t>(pr.order.top())].is_nabla());
}

TEST_CASE("the diamond is simple", "[congruence][princ]") {
    FiniteLattice m3(m3_order());
    PrincOrder pr = princ_order(m3);
    REQUIRE(pr.order.size() == 2);
}

TEST_CASE("interval projectivity in the pentagon", "[congruence][projectivity]") {
    FiniteLattice l = n5();
    const int o = l.index("o"), a = l.index("a"), b = l.index("b"), c = l.index("c"),
              i = l.index("i");

    // reflexive case, empty witness
    auto self = is_cong_projective(l, {a, b}, {a, b});
    REQUIRE(self.has_value());
    REQUIRE(self->empty());

    auto w = is_cong_projective(l, {c, i}, {o, a});
    REQUIRE(w.has_value());
    REQUIRE(eval_alternating_term(l, c, *w) == o);
    REQUIRE(eval_alternating_term(l, i, *w) == a);
    // the breadth-first search settles on the two-step witness
    REQUIRE(*w == std::vector<int>{o, a});

    REQUIRE_FALSE(is_cong_projective(l, {a, b}, {o, c}).has_value());
}

TEST_CASE("projectivity implies collapse", "[congruence][projectivity]") {
    FiniteLattice l = n5();
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b) {
            if (!l.leq(a, b)) continue;
            Congruence src = principal_congruence(l, a, b);
            for (int c = 0; c < l.size(); ++c)
                for (int d = 0; d < l.size(); ++d) {
                    if (!l.leq(c, d)) continue;
                    if (is_cong_projective(l, {a, b}, {c, d}).has_value())
                        REQUIRE(src.same(c, d));
                }
        }
}

TEST_CASE("spreading chains track principal membership", "[congruence][projectivity]") {
    FiniteLattice l = n5();
    const int o = l.index("o"), a = l.index("a"), b = l.index("b"), c = l.index("c"),
              i = l.index("i");

    auto self = spreading_chain(l, {a, b}, {a, b});
    REQUIRE(self.has_value());

    auto chain = spreading_chain(l, {c, i}, {o, a});
    REQUIRE(chain.has_value());
    REQUIRE(*chain == std::vector<int>{o, a});

    REQUIRE_FALSE(spreading_chain(l, {a, b}, {o, c}).has_value());
}

TEST_CASE("homomorphisms induce maps on principal congruences", "[congruence][induced]") {
    FiniteLattice c3(chain_order({"o", "m", "i"}));
    FiniteLattice c2(chain_order({"0", "1"}));
    LatticeHom phi(c3, c2, {c2.bottom(), c2.top(), c2.top()});

    PrincOrder src = princ_order(c3);
    PrincOrder dst = princ_order(c2);
    IsotoneMap induced = induced_hom_map(phi, src, dst);

    Congruence om = principal_congruence(c3, c3.index("o"), c3.index("m"));
    Congruence mi = principal_congruence(c3, c3.index("m"), c3.index("i"));
    REQUIRE(dst.congruences[static_cast<size_t>(induced.apply(src.find(om)))].is_nabla());
    REQUIRE(dst.congruences[static_cast<size_t>(induced.apply(src.find(mi)))].is_delta());
    REQUIRE(dst.congruences[static_cast<size_t>(
                                induced.apply(src.find(Congruence::delta(3))))].is_delta());
    REQUIRE(dst.congruences[static_cast<size_t>(
                                induced.apply(src.find(Congruence::nabla(3))))].is_nabla());
    REQUIRE(induced.is_surjective());
}

TEST_CASE("identity homomorphism induces the identity", "[congruence][induced]") {
    FiniteLattice l = n5();
    std::vector<int> id;
    for (int i = 0; i < l.size(); ++i) id.push_back(i);
    IsotoneMap induced = induced_hom_map(LatticeHom(l, l, id));
    for (int i = 0; i < induced.source().size(); ++i) REQUIRE(induced.apply(i) == i);
}

TEST_CASE("embeddings induce zero-separating maps", "[congruence][induced]") {
    FiniteLattice l = n5();
    FiniteLattice c4(chain_order({"0", "x", "y", "1"}));
    std::vector<int> emb{l.index("o"), l.index("a"), l.index("b"), l.index("i")};

    PrincOrder src = princ_order(c4);
    PrincOrder dst = princ_order(l);
    IsotoneMap induced = induced_sub_map(c4, l, emb, src, dst);
    REQUIRE(is_zero_separating(induced));

    // con(x,y) lands on the pentagon's con(a,b), not on the diagonal
    Congruence xy = principal_congruence(c4, c4.index("x"), c4.index("y"));
    Congruence ab = principal_congruence(l, l.index("a"), l.index("b"));
    REQUIRE(dst.congruences[static_cast<size_t>(induced.apply(src.find(xy)))] == ab);

    // non-embeddings are rejected up front
    REQUIRE_THROWS_AS(induced_sub_map(c4, l, {l.index("o"), l.index("a"), l.index("c"), l.index("i")}),
                      std::invalid_argument);
}

TEST_CASE("isolating congruences and their bases", "[congruence][base]") {
    FiniteLattice l = n5();
    REQUIRE_FALSE(is_01_isolating(l, Congruence::delta(l.size())));
    REQUIRE_FALSE(is_01_isolating(l, Congruence::nabla(l.size())));
    REQUIRE(is_01_isolating(l, principal_congruence(l, l.index("a"), l.index("b"))));

    // the one-sided construction over the 3-chain has exactly one isolating
    // congruence and its base is the single interior element
    BoundedOrder p = chain_order({"0", "p", "1"});
    FiniteLattice lp = lat_of(p, {}, "G");
    int found = 0;
    DownSet base;
    for (const Congruence& c : all_congruences(lp))
        if (is_01_isolating(lp, c)) {
            ++found;
            base = base_of(lp, c, p);
        }
    REQUIRE(found == 1);
    REQUIRE(base == DownSet{"p"});

    // bases need the chain labels
    Congruence ab = principal_congruence(l, l.index("a"), l.index("b"));
    REQUIRE_THROWS_AS(base_of(l, ab, n5_order()), MissingLabels);
}

TEST_CASE("congruences refine and compare canonically", "[congruence]") {
    FiniteLattice l = n5();
    Congruence ab = principal_congruence(l, l.index("a"), l.index("b"));
    Congruence oc = principal_congruence(l, l.index("o"), l.index("c"));
    REQUIRE(Congruence::delta(l.size()).refines(ab));
    REQUIRE(ab.refines(oc));
    REQUIRE_FALSE(oc.refines(ab));
    REQUIRE(ab.refines(Congruence::nabla(l.size())));
    REQUIRE(ab.block_count() == 4);
    REQUIRE(oc.block_count() == 2);
}
