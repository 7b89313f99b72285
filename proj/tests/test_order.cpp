#include <algorithm>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "princ/corpus.hpp"
#include "princ/errors.hpp"
#include "princ/order.hpp"

using namespace princ;

namespace {

BoundedOrder three_chain() { return chain_order({"o", "m", "i"}); }

OrderTriple identity_triple(const BoundedOrder& p) {
    std::vector<int> id;
    for (int i = 0; i < p.size(); ++i) id.push_back(i);
    return OrderTriple(p, p, IsotoneMap(p, p, id));
}

}  // namespace

TEST_CASE("two element input closes to the 2-chain", "[order]") {
    BoundedOrder o = validate_bounded_order({"0", "1"}, {{"0", "1"}});
    REQUIRE(o.size() == 2);
    REQUIRE(o.bottom() == o.index("0"));
    REQUIRE(o.top() == o.index("1"));
    REQUIRE(o.leq("0", "1"));
    REQUIRE_FALSE(o.leq("1", "0"));
}

TEST_CASE("transitive closure is materialized", "[order]") {
    BoundedOrder o = validate_bounded_order({"0", "a", "b", "1"},
                                            {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
    REQUIRE(o.leq("0", "1"));
    REQUIRE_FALSE(o.leq("a", "b"));
    REQUIRE_FALSE(o.leq("b", "a"));
}

TEST_CASE("cover relation is the transitive reduction", "[order]") {
    BoundedOrder o = three_chain();
    REQUIRE(o.is_cover(o.index("o"), o.index("m")));
    REQUIRE(o.is_cover(o.index("m"), o.index("i")));
    REQUIRE_FALSE(o.is_cover(o.index("o"), o.index("i")));
    REQUIRE(o.covers().size() == 2);
}

TEST_CASE("rejected inputs name their defect", "[order]") {
    REQUIRE_THROWS_AS(validate_bounded_order({}, {}), EmptyOrder);
    REQUIRE_THROWS_AS(validate_bounded_order({"x"}, {}), TrivialOrder);
    REQUIRE_THROWS_AS(validate_bounded_order({"0", "1"}, {{"0", "1"}, {"1", "0"}}),
                      CycleDetected);
    REQUIRE_THROWS_AS(validate_bounded_order({"a", "b"}, {}), NoBounds);
    REQUIRE_THROWS_AS(validate_bounded_order({"0", "a", "b", "1"},
                                             {{"0", "a"}, {"0", "b"}, {"a", "1"}}),
                      NoBounds);
    REQUIRE_THROWS_AS(validate_bounded_order({"0", "0"}, {{"0", "0"}}), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_bounded_order({"0", "x", "1"}, {{"0", "y"}, {"0", "1"}}),
                      std::invalid_argument);
}

TEST_CASE("isotone map construction checks its laws", "[order]") {
    BoundedOrder c3 = three_chain();
    BoundedOrder c2 = chain_order({"0", "1"});
    IsotoneMap collapse(c3, c2, {{"o", "0"}, {"m", "1"}, {"i", "1"}});
    REQUIRE(collapse.apply("m") == "1");
    REQUIRE(collapse.is_surjective());

    // order reversal on the chain is not isotone
    REQUIRE_THROWS_AS(IsotoneMap(c3, c3, {{"o", "i"}, {"m", "m"}, {"i", "o"}}),
                      std::invalid_argument);
    // bound preservation is part of the contract by default
    REQUIRE_THROWS_AS(IsotoneMap(c3, c2, {{"o", "0"}, {"m", "0"}, {"i", "0"}}),
                      std::invalid_argument);
    // partial graphs are rejected
    REQUIRE_THROWS_AS(IsotoneMap(c3, c2, std::vector<NamePair>{{"o", "0"}, {"i", "1"}}),
                      std::invalid_argument);
}

TEST_CASE("zero separation looks only at the bottom fibre", "[order]") {
    BoundedOrder c2 = chain_order({"0", "1"});
    BoundedOrder p = chain_order({"0", "p", "1"});
    BoundedOrder q = chain_order({"0", "q", "1"});
    REQUIRE(is_zero_separating(IsotoneMap(c2, c2, {0, 1})));
    REQUIRE_FALSE(is_zero_separating(IsotoneMap(p, c2, {{"0", "0"}, {"p", "0"}, {"1", "1"}})));
    REQUIRE(is_zero_separating(IsotoneMap(p, q, {{"0", "0"}, {"p", "q"}, {"1", "1"}})));
}

TEST_CASE("down-set order of an empty interior", "[order]") {
    BoundedOrder c2 = chain_order({"0", "1"});
    BoundedOrder down = down_set_order(c2, false);
    REQUIRE(down.size() == 1);
    REQUIRE(down.has("{}"));
    BoundedOrder topped = down_set_order(c2, true);
    REQUIRE(topped.size() == 2);
    REQUIRE(topped.has("all"));
    REQUIRE(order_isomorphism(topped, c2).has_value());
}

TEST_CASE("down-sets of an antichain interior form a diamond", "[order]") {
    BoundedOrder p({"0", "p", "q", "1"}, {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}});
    BoundedOrder down = down_set_order(p, false);
    REQUIRE(down.size() == 4);
    for (const char* n : {"{}", "{p}", "{q}", "{p,q}"}) REQUIRE(down.has(n));
    REQUIRE(order_isomorphism(down, b2_order()).has_value());
}

TEST_CASE("down-sets of a chain interior form a chain", "[order]") {
    BoundedOrder p = chain_order({"0", "p", "q", "1"});
    BoundedOrder down = down_set_order(p, false);
    REQUIRE(down.size() == 3);
    REQUIRE(down.has("{p}"));
    REQUIRE_FALSE(down.has("{q}"));
    REQUIRE(down.has("{p,q}"));
    REQUIRE(order_isomorphism(down, three_chain()).has_value());
}

TEST_CASE("top and bottom parts of a triple tile its source", "[order][triple]") {
    BoundedOrder p = chain_order({"0", "p", "1"});
    BoundedOrder q = chain_order({"0", "1"});
    OrderTriple t(p, q, IsotoneMap(p, q, {{"0", "0"}, {"p", "0"}, {"1", "1"}}));

    BoundedOrder top = top_of_triple(t);
    REQUIRE(top.size() == 2);
    REQUIRE_FALSE(top.has("p"));

    DownSet btm = btm_of_triple(t);
    REQUIRE(btm == DownSet{"0", "p"});

    // identity: everything lands above the bottom
    OrderTriple idt = identity_triple(p);
    REQUIRE(top_of_triple(idt).size() == p.size());
    REQUIRE(btm_of_triple(idt) == DownSet{"0"});
}

TEST_CASE("top part keeps exactly the elements with live images", "[order][triple]") {
    BoundedOrder p({"0", "p", "q", "1"}, {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}});
    BoundedOrder target = chain_order({"0", "u", "1"});
    OrderTriple t(p, target,
                  IsotoneMap(p, target, {{"0", "0"}, {"p", "0"}, {"q", "u"}, {"1", "1"}}));
    BoundedOrder top = top_of_triple(t);
    REQUIRE(top.size() == 3);
    REQUIRE(top.has("q"));
    REQUIRE_FALSE(top.has("p"));
}

TEST_CASE("decomposition halves compose back to the map", "[order][triple]") {
    BoundedOrder p = chain_order({"0", "p", "1"});
    BoundedOrder q = chain_order({"0", "1"});
    OrderTriple t(p, q, IsotoneMap(p, q, {{"0", "0"}, {"p", "0"}, {"1", "1"}}));

    IsotoneMap alpha = alpha_map(t);
    IsotoneMap beta = beta_map(t);
    REQUIRE(alpha.is_surjective());
    REQUIRE(is_zero_separating(beta));
    REQUIRE(alpha.apply("p") == "0");
    REQUIRE(alpha.apply("1") == "1");
    for (int x = 0; x < p.size(); ++x)
        REQUIRE(beta.apply(alpha.apply(x)) == t.psi.apply(x));

    // identity triple: both halves are identity maps
    OrderTriple idt = identity_triple(p);
    IsotoneMap ida = alpha_map(idt);
    IsotoneMap idb = beta_map(idt);
    for (int x = 0; x < p.size(); ++x) {
        REQUIRE(ida.target().name(ida.apply(x)) == p.name(x));
        REQUIRE(idb.apply(p.name(x)) == p.name(x));
    }
}

TEST_CASE("mismatched triple endpoints are rejected", "[order][triple]") {
    BoundedOrder p = chain_order({"0", "p", "1"});
    BoundedOrder q = chain_order({"0", "1"});
    IsotoneMap psi(p, q, {{"0", "0"}, {"p", "1"}, {"1", "1"}});
    REQUIRE_THROWS_AS(OrderTriple(q, q, psi), std::invalid_argument);
}

TEST_CASE("order isomorphism finds and refuses correctly", "[order][iso]") {
    BoundedOrder c3 = three_chain();
    REQUIRE(order_isomorphism(c3, chain_order({"x", "y", "z"})).has_value());
    REQUIRE_FALSE(order_isomorphism(c3, b2_order()).has_value());

    BoundedOrder d1 = b2_order();
    BoundedOrder d2({"o", "b", "a", "i"}, {{"o", "b"}, {"o", "a"}, {"b", "i"}, {"a", "i"}});
    auto iso = order_isomorphism(d1, d2);
    REQUIRE(iso.has_value());
    // bottom and top are pinned
    REQUIRE((*iso)[static_cast<size_t>(d1.bottom())] == d2.bottom());
    REQUIRE((*iso)[static_cast<size_t>(d1.top())] == d2.top());

    // same size, different shape
    BoundedOrder c4 = chain_order({"0", "a", "b", "1"});
    REQUIRE_FALSE(order_isomorphism(c4, b2_order()).has_value());
}

TEST_CASE("order isomorphism enforces its size ceiling", "[order][iso]") {
    std::vector<std::string> names;
    for (int i = 0; i < 25; ++i) names.push_back("e" + std::to_string(i));
    BoundedOrder big = chain_order(names);
    REQUIRE_THROWS_AS(order_isomorphism(big, big), SizeLimitExceeded);
}

TEST_CASE("triple isomorphism needs a commuting square", "[order][iso]") {
    BoundedOrder p = chain_order({"0", "p", "1"});
    BoundedOrder q = chain_order({"0", "q", "1"});
    OrderTriple s(p, q, IsotoneMap(p, q, {{"0", "0"}, {"p", "q"}, {"1", "1"}}));

    REQUIRE(triple_isomorphism(s, s).has_value());

    // relabeled copy
    BoundedOrder p2 = chain_order({"bot", "mid", "top"});
    OrderTriple s2(p2, q, IsotoneMap(p2, q, {{"bot", "0"}, {"mid", "q"}, {"top", "1"}}));
    REQUIRE(triple_isomorphism(s, s2).has_value());

    // same shapes, incompatible maps
    OrderTriple dead(p, q, IsotoneMap(p, q, {{"0", "0"}, {"p", "0"}, {"1", "1"}}));
    REQUIRE_FALSE(triple_isomorphism(s, dead).has_value());
}

TEST_CASE("principal down-sets exclude the bounds", "[order]") {
    BoundedOrder n5 = n5_order();
    REQUIRE(principal_down_set(n5, "b") == DownSet{"a", "b"});
    REQUIRE(principal_down_set(n5, "c") == DownSet{"c"});
    REQUIRE_THROWS_AS(principal_down_set(n5, "o"), BoundElement);
    REQUIRE_THROWS_AS(principal_down_set(n5, "i"), BoundElement);
}
