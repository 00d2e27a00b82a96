#include <doctest.h>

#include <sstream>

#include "oi/error.hpp"
#include "oi/json.hpp"
#include "oi/pariso.hpp"

using namespace oi;

namespace {
  PartialOrderIso el(char const* text) {
    return PartialOrderIso::parse(text);
  }
}  // namespace

TEST_CASE("make_iso") {
  auto const a = make_iso({1, 3}, {2, 4});
  CHECK(a.apply(1) == CarrierPoint(2));
  CHECK(a.apply(3) == CarrierPoint(4));
  CHECK(make_iso({}, {}).is_zero());
  CHECK(make_iso({}, {}) == PartialOrderIso());
  CHECK_THROWS_AS(make_iso({1, 2}, {5, 3}), OrderError);
  CHECK_THROWS_AS(make_iso({2, 1}, {3, 5}), OrderError);
  CHECK_THROWS_AS(make_iso({1, 1}, {3, 5}), OrderError);
  CHECK_THROWS_AS(make_iso({1, 2}, {3}), RankError);
}

TEST_CASE("apply") {
  auto const a = el("[1,3->2,4]");
  CHECK(apply(a, 3) == CarrierPoint(4));
  CHECK_FALSE(apply(a, 2).has_value());
  CHECK_FALSE(apply(PartialOrderIso(), 7).has_value());
}

TEST_CASE("compose") {
  CHECK(compose(el("[1,3->2,4]"), el("[2,4->5,7]")) == el("[1,3->5,7]"));
  CHECK(compose(el("[1,2->3,4]"), el("[4->9]")) == el("[2->9]"));
  auto const a = el("[1,3->2,4]");
  CHECK(compose(a, PartialOrderIso()).is_zero());
  CHECK(compose(PartialOrderIso(), a).is_zero());
  CHECK(rank(compose(a, el("[2,4->5,7]"))) == 2);
  CHECK(compose(a, el("[0,2,3,4->1,2,6,8]"), el("[2,8->0,1]"))
        == el("[1,3->0,1]"));
}

TEST_CASE("inverse") {
  auto const a = el("[1,3->2,4]");
  CHECK(inverse(a) == el("[2,4->1,3]"));
  CHECK(inverse(PartialOrderIso()).is_zero());
  CHECK(compose(a, inverse(a)) == identity_on({1, 3}));
  CHECK(compose(inverse(a), a) == identity_on({2, 4}));
}

TEST_CASE("rank") {
  CHECK(rank(el("[1,3->2,4]")) == 2);
  CHECK(rank(PartialOrderIso()) == 0);
}

TEST_CASE("is_idempotent") {
  CHECK(is_idempotent(el("[2,5->2,5]")));
  CHECK_FALSE(is_idempotent(el("[1,2->2,3]")));
  CHECK(compose(el("[1,2->2,3]"), el("[1,2->2,3]")) == el("[1->3]"));
  CHECK(is_idempotent(PartialOrderIso()));
}

TEST_CASE("natural_leq") {
  auto const a = el("[1,3->2,4]");
  CHECK(natural_leq(el("[1->2]"), a));
  CHECK(natural_leq(PartialOrderIso(), a));
  CHECK(natural_leq(PartialOrderIso(), PartialOrderIso()));
  CHECK_FALSE(natural_leq(el("[1->5]"), a));
  CHECK(natural_leq(a, a));
  CHECK_FALSE(natural_leq(a, el("[1->2]")));
}

TEST_CASE("restrict") {
  auto const a = el("[1,3,5->2,4,7]");
  CHECK(restrict(a, {1, 5}) == el("[1,5->2,7]"));
  CHECK(restrict(a, {5, 1}) == el("[1,5->2,7]"));
  CHECK(restrict(a, {}).is_zero());
  CHECK(restrict(a, {1, 3, 5}) == a);
  CHECK(restrict(a, {1, 6}) == el("[1->2]"));
  CHECK(restrict(a, {1, 5}) == compose(identity_on({1, 5}), a));
}

TEST_CASE("identity_on") {
  CHECK(identity_on({3, 1}) == el("[1,3->1,3]"));
  CHECK(identity_on({}).is_zero());
  CHECK(identity_on({3, 3, 1}) == el("[1,3->1,3]"));
  CHECK(compose(identity_on({1, 3}), identity_on({3, 9})) == identity_on({3}));
}

TEST_CASE("text syntax round-trips") {
  for (auto text : {"[]", "[1->2]", "[1,3->5,7]", "[-9,-2,0->-4,8,100]"}) {
    CAPTURE(text);
    auto const a = el(text);
    CHECK(a.to_string() == text);
    CHECK(el(a.to_string().c_str()) == a);
    std::ostringstream os;
    os << a;
    CHECK(os.str() == text);
  }
  CHECK(el(" [ 1 , 3 -> 2 , 4 ] ") == el("[1,3->2,4]"));
  CHECK(el("[->]").is_zero());
}

TEST_CASE("parse errors name the position and token") {
  try {
    PartialOrderIso::parse("[1,x->2,3]");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 3);
    CHECK(e.token() == "x");
  }
  try {
    PartialOrderIso::parse("[1,2->3");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 7);
    CHECK(e.token().empty());
  }
  for (auto bad : {"", "1->2", "[1->2]x", "[1,->2]", "[1-2]",
                   "[99999999999999999999->1]"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(PartialOrderIso::parse(bad), UsageError);
  }
  CHECK_THROWS_AS(PartialOrderIso::parse("[1,2->5,3]"), OrderError);
  CHECK_THROWS_AS(PartialOrderIso::parse("[1,2->5]"), RankError);
  CHECK_THROWS_AS(PartialOrderIso::parse("[1->]"), RankError);
}

TEST_CASE("json form") {
  auto const a = el("[1,3->2,4]");
  CHECK(to_json(a).dump() == R"({"dom":[1,3],"ran":[2,4]})");
  CHECK(to_json(PartialOrderIso()).dump() == R"({"dom":[],"ran":[]})");
  CHECK(element_from_json(to_json(a)) == a);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"dom":[1]})")),
                  UsageError);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"dom":[2,1],"ran":[1,2]})")),
                  OrderError);
}

TEST_CASE("ordering is by rank, then domain, then range") {
  CHECK(PartialOrderIso() < el("[5->5]"));
  CHECK(el("[5->5]") < el("[0,1->0,1]"));
  CHECK(el("[0->3]") < el("[1->0]"));
  CHECK(el("[0->1]") < el("[0->3]"));
}

TEST_CASE("lies_in") {
  CHECK(el("[0,3->1,2]").lies_in(Carrier::finite_chain(4)));
  CHECK_FALSE(el("[0,4->1,2]").lies_in(Carrier::finite_chain(4)));
  CHECK(el("[-5->7]").lies_in(Carrier::integer_line()));
}

TEST_CASE("hash agrees with equality") {
  std::hash<PartialOrderIso> h;
  CHECK(h(el("[1,3->2,4]")) == h(make_iso({1, 3}, {2, 4})));
  CHECK(h(el("[1->2]")) != h(el("[2->1]")));
}
