#include <doctest.h>

#include <cstdlib>
#include <set>

#include "oi/error.hpp"
#include "oi/semigroup.hpp"
#include "oracles.hpp"

using namespace oi;

namespace {
  PartialOrderIso el(char const* text) {
    return PartialOrderIso::parse(text);
  }

  BoundedSemigroup chain(std::int64_t m, std::size_t n) {
    return BoundedSemigroup(Carrier::finite_chain(m), n);
  }

  oracle::Map to_map(PartialOrderIso const& a) {
    oracle::Map f;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      f[a.dom()[i].coord] = a.ran()[i].coord;
    }
    return f;
  }
}  // namespace

TEST_CASE("semigroup sizes") {
  std::pair<int, int> const cases[]
      = {{3, 1}, {4, 2}, {5, 2}, {5, 3}, {6, 3}, {2, 5}, {1, 1}, {4, 4}};
  for (auto [m, n] : cases) {
    CAPTURE(m);
    CAPTURE(n);
    auto const s = enumerate(chain(m, n));
    CHECK(s.size() == oracle::order(m, n));
    CHECK(*chain(m, n).order() == oracle::order(m, n));
  }
  CHECK(enumerate(chain(4, 2)).size() == 53);
  CHECK(enumerate(chain(3, 1)).size() == 10);
  CHECK(enumerate(chain(2, 5)).size() == 6);
  CHECK(enumerate(chain(5, 3)).size() == 226);
  CHECK(enumerate(chain(6, 3)).size() == 662);
}

TEST_CASE("enumeration matches brute force over all partial functions") {
  for (auto [m, n] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}}) {
    auto const              s = enumerate(chain(m, n));
    std::set<oracle::Map>   mine;
    for (auto const& a : s.elements()) {
      mine.insert(to_map(a));
    }
    auto const reference = oracle::all_maps(m, n);
    CHECK(mine.size() == s.size());
    CHECK(mine == std::set<oracle::Map>(reference.begin(), reference.end()));
  }
}

TEST_CASE("enumeration order, zero and index lookup") {
  auto const s = enumerate(chain(4, 2));
  CHECK(s.at(EnumeratedSemigroup::zero_index()).is_zero());
  CHECK(std::is_sorted(s.elements().begin(), s.elements().end()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s.index_of(s.at(i)) == i);
  }
  CHECK_FALSE(s.index_of(el("[0,1,2->0,1,2]")).has_value());
  CHECK_FALSE(s.index_of(el("[7->1]")).has_value());
}

TEST_CASE("products match the map oracle") {
  for (auto [m, n] : {std::pair{4, 2}, std::pair{7, 2}}) {
    auto const s = enumerate(chain(m, n));  // (7,2) is past the table limit
    for (std::size_t i = 0; i < s.size(); i += 3) {
      for (std::size_t j = 0; j < s.size(); j += 5) {
        CHECK(to_map(s.at(s.product(i, j)))
              == oracle::compose(to_map(s.at(i)), to_map(s.at(j))));
      }
    }
  }
}

TEST_CASE("unique element per pair of k-subsets") {
  auto const c = Carrier::finite_chain(5);
  auto const s = enumerate(BoundedSemigroup(c, 3));
  for (std::size_t k = 0; k <= 3; ++k) {
    for (auto const& d : k_subsets(c, k)) {
      for (auto const& r : k_subsets(c, k)) {
        std::size_t count = 0;
        for (auto const& a : s.elements()) {
          count += std::ranges::equal(a.dom(), d) && std::ranges::equal(a.ran(), r);
        }
        CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(enumerate(BoundedSemigroup(Carrier::integer_line(), 2)),
                  UnsupportedError);
  CHECK_THROWS_AS(enumerate(chain(9, 4)), SizeError);
  CHECK_THROWS_AS(enumerate(chain(4, 2), 52), SizeError);
  CHECK_NOTHROW(enumerate(chain(4, 2), 53));
  CHECK_THROWS_AS(chain(4, 0), UsageError);
  CHECK(chain(9, 4).order() == 24310);
  CHECK(BoundedSemigroup(Carrier::integer_line(), 3).order() == std::nullopt);
  CHECK(chain(2, 5).effective_rank() == 2);
  CHECK(chain(4, 2).to_string() == "OI_2(chain:4)");
}

TEST_CASE("OI_CAP overrides the default cap") {
  ::unsetenv("OI_CAP");
  CHECK(cap_from_environment() == default_cap);
  ::setenv("OI_CAP", "30000", 1);
  CHECK(cap_from_environment() == 30000);
  ::setenv("OI_CAP", "garbage", 1);
  CHECK(cap_from_environment() == default_cap);
  ::unsetenv("OI_CAP");
}

TEST_CASE("closed-form Green's relations") {
  BoundedSemigroup const z(Carrier::integer_line(), 2);
  CHECK(green(z, el("[1,3->2,4]"), el("[1,3->0,5]"), GreenRelation::R));
  CHECK_FALSE(green(z, el("[1,3->2,4]"), el("[1,3->0,5]"), GreenRelation::L));
  CHECK(green(z, el("[1,3->2,4]"), el("[1,3->2,4]"), GreenRelation::H));
  CHECK_FALSE(green(z, el("[1,3->2,4]"), el("[1,3->2,5]"), GreenRelation::H));
  CHECK(green(z, el("[1->7]"), el("[5->0]"), GreenRelation::J));
  CHECK(green(z, el("[1->7]"), el("[5->0]"), GreenRelation::D));
  CHECK(green(z, el("[1->7]"), el("[5->7]"), GreenRelation::L));
  CHECK_THROWS_AS(green(z, el("[1,2,3->1,2,3]"), el("[1->1]"), GreenRelation::R),
                  UsageError);
  CHECK_THROWS_AS(green(chain(4, 2), el("[5->1]"), el("[1->1]"), GreenRelation::R),
                  UsageError);
}

TEST_CASE("Green oracle examples") {
  auto const s = enumerate(chain(4, 2));
  auto const a = el("[0,2->1,3]");
  for (auto r : all_green_relations) {
    CHECK(green_oracle(s, a, a, r));
  }
  CHECK_FALSE(green_oracle(s, PartialOrderIso(), el("[1->2]"), GreenRelation::D));
  CHECK(green_oracle(s, el("[1->2]"), el("[3->0]"), GreenRelation::D));
  CHECK_THROWS_AS(
      green_oracle(enumerate(BoundedSemigroup(Carrier::integer_line(), 1)), a, a,
                   GreenRelation::R),
      UnsupportedError);
}

TEST_CASE("Green oracle agrees with principal ideals built from maps") {
  auto const s = enumerate(chain(3, 2));
  GreenOracle const oracle_(s);
  auto const maps = oracle::all_maps(3, 2);
  auto const t    = oracle::cayley(maps);
  auto right = [&](std::size_t a) {
    std::set<std::size_t> out{a};
    for (std::size_t c = 0; c < maps.size(); ++c) out.insert(t[a][c]);
    return out;
  };
  auto left = [&](std::size_t a) {
    std::set<std::size_t> out{a};
    for (std::size_t c = 0; c < maps.size(); ++c) out.insert(t[c][a]);
    return out;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto const mi = oracle::index_of(maps, to_map(s.at(i)));
    for (std::size_t j = 0; j < s.size(); ++j) {
      auto const mj = oracle::index_of(maps, to_map(s.at(j)));
      CHECK(oracle_.related(i, j, GreenRelation::R) == (right(mi) == right(mj)));
      CHECK(oracle_.related(i, j, GreenRelation::L) == (left(mi) == left(mj)));
    }
  }
}

TEST_CASE("compare_green finds no mismatches") {
  for (auto [m, n] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
    auto const report = compare_green(enumerate(chain(m, n)));
    CHECK(report.pairs_checked == oracle::order(m, n) * oracle::order(m, n));
    CHECK(report.passed());
  }
  auto const threaded = compare_green(enumerate(chain(4, 2)), ScanOptions{3});
  CHECK(threaded.passed());
}

TEST_CASE("egg-box diagrams") {
  auto const box = eggbox(enumerate(chain(4, 2)));
  REQUIRE(box.classes.size() == 3);
  auto const& top = box.classes[2];
  CHECK(top.rank == 2);
  CHECK(top.rows.size() == 6);
  CHECK(top.cols.size() == 6);
  CHECK(top.all_singletons());
  CHECK(box.combinatorial());
  auto const& bottom = box.classes[0];
  CHECK(bottom.rows.size() == 1);
  CHECK(bottom.cols.size() == 1);
  CHECK(bottom.cell(0, 0) == std::vector<PartialOrderIso>{PartialOrderIso()});

  auto const small = eggbox(enumerate(chain(3, 1)));
  REQUIRE(small.classes.size() == 2);
  CHECK(small.classes[1].rows.size() == 3);
  CHECK(small.classes[1].cols.size() == 3);
  CHECK(small.classes[1].cell(1, 2) == std::vector{el("[1->2]")});
}

TEST_CASE("ideals") {
  auto const s      = enumerate(chain(4, 2));
  auto const ideals = all_ideals(s);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[0].count() == 1);
  CHECK(ideals[0].test(EnumeratedSemigroup::zero_index()));
  CHECK(ideals[1].count() == 17);
  CHECK(ideals[2].count() == 53);
  auto const series = ideal_series(s);
  CHECK(series.ideals == ideals);
  CHECK(check_ideals(s).passed());

  auto const not_ideal = [&] {
    auto set = s.empty_set();
    set.set(*s.index_of(el("[0->0]")));
    return set;
  }();
  CHECK_FALSE(is_ideal(s, not_ideal));
  CHECK_FALSE(is_ideal(s, s.empty_set()));
}

TEST_CASE("ideals match brute force subsets") {
  for (auto [m, n] : {std::pair{3, 1}, std::pair{2, 2}}) {
    auto const s = enumerate(chain(m, n));
    CHECK(oracle::all_ideals(oracle::cayley(oracle::all_maps(m, n))).size()
          == all_ideals(s).size());
    CHECK(all_ideals(s).size() == s.handle().effective_rank() + 1);
  }
  CHECK(check_ideals(enumerate(chain(5, 2))).passed());
}

TEST_CASE("stability") {
  auto const report = check_stability(enumerate(chain(4, 2)));
  CHECK(report.pairs_checked == 53 * 53);
  CHECK(report.right_inclusions > 0);
  CHECK(report.left_inclusions > 0);
  CHECK(report.passed());
  CHECK(check_stability(enumerate(chain(4, 2)), ScanOptions{2}).right_inclusions
        == report.right_inclusions);
}

TEST_CASE("algebra laws") {
  auto const exhaustive = check_algebra_laws(enumerate(chain(4, 2)));
  CHECK(exhaustive.checks > 53 * 53 * 53);
  CHECK(exhaustive.passed());
  auto const random = check_random_algebra_laws(Window{-30, 30}, 5, 42, 2000);
  CHECK(random.checks >= 2000);
  CHECK(random.passed());
}

TEST_CASE("generators generate") {
  for (auto [m, n] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{2, 2},
                      std::pair{3, 3}, std::pair{7, 2}}) {
    auto const s    = enumerate(chain(m, n));
    auto const gens = s.generators();
    std::set<PartialOrderIso> reached;
    std::vector<PartialOrderIso> frontier;
    for (auto g : gens) {
      if (reached.insert(s.at(g)).second) {
        frontier.push_back(s.at(g));
      }
    }
    while (!frontier.empty()) {
      std::vector<PartialOrderIso> next;
      for (auto const& x : frontier) {
        for (auto g : gens) {
          for (auto const& p : {compose(x, s.at(g)), compose(s.at(g), x)}) {
            if (reached.insert(p).second) {
              next.push_back(p);
            }
          }
        }
      }
      frontier = std::move(next);
    }
    CAPTURE(m);
    CAPTURE(n);
    CHECK(reached.size() == s.size());
    CHECK(gens.size() < s.size());
  }
}
