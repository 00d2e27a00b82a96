#include <algorithm>  // for set_intersection, shuffle
#include <iterator>   // for back_inserter
#include <numeric>    // for iota
#include <random>     // for mt19937_64

#include "oi/random.hpp"
#include "oi/semigroup.hpp"

namespace oi {

  namespace {
    // Laws that only involve one element.
    void check_element(PartialOrderIso const& a, LawReport& out) {
      auto const inv = inverse(a);
      if (compose(a, inv, a) != a || compose(inv, a, inv) != inv
          || compose(a, inv)
                 != identity_on(PointSeq(a.dom().begin(), a.dom().end()))
          || compose(inv, a)
                 != identity_on(PointSeq(a.ran().begin(), a.ran().end()))) {
        ++out.inverse;
      }
      // x1 < x2 in dom a  <=>  x1 a < x2 a
      for (std::size_t i = 0; i < a.rank(); ++i) {
        for (std::size_t j = 0; j < a.rank(); ++j) {
          auto xi = a.dom()[i], xj = a.dom()[j];
          if ((xi < xj) != (*a.apply(xi) < *a.apply(xj))) {
            ++out.order_preservation;
          }
        }
      }
      ++out.checks;
    }

    void check_idempotents(PartialOrderIso const& e,
                           PartialOrderIso const& f,
                           LawReport&             out) {
      PointSeq meet;
      std::set_intersection(e.dom().begin(),
                            e.dom().end(),
                            f.dom().begin(),
                            f.dom().end(),
                            std::back_inserter(meet));
      auto ef = compose(e, f);
      if (ef != compose(f, e) || ef != identity_on(meet) || !ef.is_idempotent()) {
        ++out.semilattice;
      }
      ++out.checks;
    }
  }  // namespace

  LawReport check_algebra_laws(EnumeratedSemigroup const& s,
                               ScanOptions                opts) {
    std::size_t const        n = s.size();
    std::vector<std::size_t> idempotents;
    for (std::size_t i = 0; i < n; ++i) {
      if (s.product(i, i) == i) {
        idempotents.push_back(i);
      }
    }

    auto const             shards = shard_count(n, opts);
    std::vector<LawReport> partial(shards);
    parallel_for(
        n, opts, [&](std::size_t begin, std::size_t end, std::size_t shard) {
          auto& out = partial[shard];
          for (std::size_t a = begin; a < end; ++a) {
            check_element(s.at(a), out);
            for (std::size_t b = 0; b < n; ++b) {
              auto const ab = s.product(a, b);
              for (std::size_t c = 0; c < n; ++c) {
                if (s.product(ab, c) != s.product(a, s.product(b, c))) {
                  ++out.associativity;
                }
              }
              out.checks += n;
              // a ≼ b: restriction, a = be and a = eb for some idempotent e
              bool const restricted = natural_leq(s.at(a), s.at(b));
              bool right_factor = false, left_factor = false;
              for (auto e : idempotents) {
                right_factor = right_factor || s.product(b, e) == a;
                left_factor  = left_factor || s.product(e, b) == a;
              }
              if (restricted != right_factor || restricted != left_factor) {
                ++out.natural_order;
              }
              ++out.checks;
            }
          }
        });
    for (auto e : idempotents) {
      for (auto f : idempotents) {
        check_idempotents(s.at(e), s.at(f), partial.front());
      }
    }

    LawReport report;
    for (auto const& p : partial) {
      report.checks += p.checks;
      report.associativity += p.associativity;
      report.inverse += p.inverse;
      report.semilattice += p.semilattice;
      report.natural_order += p.natural_order;
      report.order_preservation += p.order_preservation;
    }
    return report;
  }

  LawReport check_random_algebra_laws(Window        window,
                                      std::size_t   max_rank,
                                      std::uint64_t seed,
                                      std::size_t   triples) {
    std::mt19937_64 rng(seed);
    LawReport       report;
    for (std::size_t t = 0; t < triples; ++t) {
      auto a = random_element_up_to(rng, window, max_rank);
      auto b = random_element_up_to(rng, window, max_rank);
      auto c = random_element_up_to(rng, window, max_rank);
      if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
        ++report.associativity;
      }
      ++report.checks;
      check_element(a, report);
      check_idempotents(identity_on(PointSeq(a.dom().begin(), a.dom().end())),
                        identity_on(PointSeq(b.ran().begin(), b.ran().end())),
                        report);
      // Every other probe replaces a by a restriction of b.
      if (t % 2 == 1) {
        std::uniform_int_distribution<std::size_t> keep(0, b.rank());
        std::vector<std::size_t> positions(b.rank());
        std::iota(positions.begin(), positions.end(), std::size_t(0));
        std::shuffle(positions.begin(), positions.end(), rng);
        positions.resize(keep(rng));
        PointSeq points;
        for (auto i : positions) {
          points.push_back(b.dom()[i]);
        }
        a = restrict(b, points);
      }
      // If a = be for any idempotent e, then e = 1_{ran a} works as well.
      auto e = identity_on(PointSeq(a.ran().begin(), a.ran().end()));
      if (natural_leq(a, b) != (compose(b, e) == a)
          || (t % 2 == 1 && !natural_leq(a, b))) {
        ++report.natural_order;
      }
      ++report.checks;
    }
    return report;
  }

}  // namespace oi
