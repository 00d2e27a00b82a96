#include "oi/semigroup.hpp"

#include <algorithm>  // for min
#include <charconv>   // for from_chars
#include <cstdlib>    // for getenv
#include <cstring>    // for strlen
#include <limits>     // for numeric_limits
#include <map>        // for map
#include <set>        // for set

#include "oi/error.hpp"

namespace oi {

  namespace {
    constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) noexcept {
      return a > saturated - b ? saturated : a + b;
    }

    std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) noexcept {
      return (a != 0 && b > saturated / a) ? saturated : a * b;
    }

    // Assigns each distinct set a class number, in order of first appearance.
    std::vector<std::size_t> classify(std::vector<ElementSet> const& sets,
                                      std::size_t&                   classes) {
      std::map<ElementSet, std::size_t> ids;
      std::vector<std::size_t>          out;
      out.reserve(sets.size());
      for (auto const& s : sets) {
        auto [it, inserted] = ids.emplace(s, ids.size());
        out.push_back(it->second);
      }
      classes = ids.size();
      return out;
    }
  }  // namespace

  std::size_t cap_from_environment() {
    char const* env = std::getenv("OI_CAP");
    if (env == nullptr) {
      return default_cap;
    }
    std::size_t value = 0;
    auto [ptr, ec]    = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc() || *ptr != '\0' || value == 0) {
      return default_cap;
    }
    return value;
  }

  ////////////////////////////////////////////////////////////////////////
  // BoundedSemigroup
  ////////////////////////////////////////////////////////////////////////

  BoundedSemigroup::BoundedSemigroup(Carrier carrier, std::size_t max_rank)
      : _carrier(carrier), _max_rank(max_rank) {
    if (max_rank == 0) {
      throw UsageError("the maximum rank must be positive");
    }
  }

  std::size_t BoundedSemigroup::effective_rank() const noexcept {
    if (auto m = _carrier.size()) {
      return std::min(_max_rank, static_cast<std::size_t>(*m));
    }
    return _max_rank;
  }

  std::optional<std::uint64_t> BoundedSemigroup::order() const noexcept {
    auto m = _carrier.size();
    if (!m) {
      return std::nullopt;
    }
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= effective_rank(); ++k) {
      auto c = binomial(static_cast<std::uint64_t>(*m), k);
      total  = add_sat(total, mul_sat(c, c));
    }
    return total;
  }

  std::string BoundedSemigroup::to_string() const {
    return "OI_" + std::to_string(_max_rank) + "(" + _carrier.to_string()
           + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // EnumeratedSemigroup
  ////////////////////////////////////////////////////////////////////////

  EnumeratedSemigroup::EnumeratedSemigroup(BoundedSemigroup const& s,
                                           std::size_t             cap)
      : _handle(s) {
    auto order = s.order();
    if (!order) {
      throw UnsupportedError("cannot enumerate " + s.to_string()
                             + ": the carrier is infinite");
    }
    if (*order > cap) {
      throw SizeError(s.to_string() + " has " + std::to_string(*order)
                      + " elements, more than the cap of "
                      + std::to_string(cap));
    }
    _elements.reserve(*order);
    Carrier const& c = s.carrier();
    for (std::size_t k = 0; k <= s.effective_rank(); ++k) {
      auto subsets = k_subsets(c, k).collect();
      for (auto const& dom : subsets) {
        for (auto const& ran : subsets) {
          _elements.push_back(make_iso(dom, ran));
        }
      }
    }
    _index.reserve(_elements.size());
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      _index.emplace(_elements[i], i);
    }
    if (size() <= table_limit) {
      std::size_t const n = size();
      _table.resize(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          _table[i * n + j] = static_cast<std::uint32_t>(
              _index.at(compose(_elements[i], _elements[j])));
        }
      }
    }
    find_generators();
  }

  // Greedy, from the top rank down: an element becomes a generator when
  // the generators so far do not reach it. The reached set T is kept closed
  // under right multiplication by generators, which makes it the generated
  // subsemigroup.
  void EnumeratedSemigroup::find_generators() {
    std::size_t const        n = size();
    std::vector<bool>        reached(n, false);
    std::vector<std::size_t> members;
    std::vector<std::size_t> queue;
    auto visit = [&](std::size_t x) {
      if (!reached[x]) {
        reached[x] = true;
        members.push_back(x);
        queue.push_back(x);
      }
    };
    for (std::size_t h = n; h-- > 0;) {
      if (reached[h]) {
        continue;
      }
      _generators.push_back(h);
      std::size_t const old = members.size();
      for (std::size_t i = 0; i < old; ++i) {
        visit(product(members[i], h));
      }
      visit(h);
      while (!queue.empty()) {
        auto const x = queue.back();
        queue.pop_back();
        for (auto g : _generators) {
          visit(product(x, g));
        }
      }
    }
  }

  std::optional<std::size_t>
  EnumeratedSemigroup::index_of(PartialOrderIso const& a) const {
    auto it = _index.find(a);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t EnumeratedSemigroup::product(std::size_t i, std::size_t j) const {
    if (!_table.empty()) {
      return _table[i * size() + j];
    }
    return _index.at(compose(_elements[i], _elements[j]));
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(GreenRelation r) noexcept {
    switch (r) {
      case GreenRelation::R:
        return "R";
      case GreenRelation::L:
        return "L";
      case GreenRelation::H:
        return "H";
      case GreenRelation::D:
        return "D";
      case GreenRelation::J:
        return "J";
    }
    return "?";
  }

  bool green(BoundedSemigroup const& s,
             PartialOrderIso const&  a,
             PartialOrderIso const&  b,
             GreenRelation           relation) {
    if (!s.contains(a) || !s.contains(b)) {
      throw UsageError("green: " + a.to_string() + " or " + b.to_string()
                       + " is not an element of " + s.to_string());
    }
    switch (relation) {
      case GreenRelation::R:
        return std::ranges::equal(a.dom(), b.dom());
      case GreenRelation::L:
        return std::ranges::equal(a.ran(), b.ran());
      case GreenRelation::H:
        return a == b;
      case GreenRelation::D:
      case GreenRelation::J:
        return a.rank() == b.rank();
    }
    return false;
  }

  GreenOracle::GreenOracle(EnumeratedSemigroup const& s, ScanOptions opts) {
    std::size_t const n = s.size();
    _right.assign(n, s.empty_set());
    _left.assign(n, s.empty_set());
    _two_sided.assign(n, s.empty_set());

    parallel_for(n, opts, [&](std::size_t begin, std::size_t end, std::size_t) {
      for (std::size_t a = begin; a < end; ++a) {
        _right[a].set(a);
        _left[a].set(a);
        for (std::size_t x = 0; x < n; ++x) {
          _right[a].set(s.product(a, x));
          _left[a].set(s.product(x, a));
        }
      }
    });
    // S¹aS¹ is the union of S¹x over x in aS¹
    parallel_for(n, opts, [&](std::size_t begin, std::size_t end, std::size_t) {
      for (std::size_t a = begin; a < end; ++a) {
        for (auto x = _right[a].find_first(); x != ElementSet::npos;
             x      = _right[a].find_next(x)) {
          _two_sided[a] |= _left[x];
        }
      }
    });

    std::size_t l_classes = 0;
    _r_class              = classify(_right, _r_classes);
    _l_class              = classify(_left, l_classes);
    _inhabited.assign(l_classes * _r_classes, false);
    for (std::size_t c = 0; c < n; ++c) {
      _inhabited[_l_class[c] * _r_classes + _r_class[c]] = true;
    }
  }

  bool GreenOracle::related(std::size_t   a,
                            std::size_t   b,
                            GreenRelation relation) const {
    switch (relation) {
      case GreenRelation::R:
        return _right[a] == _right[b];
      case GreenRelation::L:
        return _left[a] == _left[b];
      case GreenRelation::H:
        return _right[a] == _right[b] && _left[a] == _left[b];
      case GreenRelation::D:
        // some c with a L c and c R b
        return _inhabited[_l_class[a] * _r_classes + _r_class[b]];
      case GreenRelation::J:
        return _two_sided[a] == _two_sided[b];
    }
    return false;
  }

  bool green_oracle(EnumeratedSemigroup const& s,
                    PartialOrderIso const&     a,
                    PartialOrderIso const&     b,
                    GreenRelation              relation) {
    auto i = s.index_of(a);
    auto j = s.index_of(b);
    if (!i || !j) {
      throw UsageError("green_oracle: " + a.to_string() + " or "
                       + b.to_string() + " is not an element of "
                       + s.handle().to_string());
    }
    return GreenOracle(s).related(*i, *j, relation);
  }

  GreenReport compare_green(EnumeratedSemigroup const& s, ScanOptions opts) {
    GreenOracle const oracle(s, opts);
    std::size_t const n = s.size();
    auto const        shards = shard_count(n, opts);
    std::vector<std::vector<GreenMismatch>> found(shards);
    std::vector<std::size_t>                identity_failures(shards, 0);

    parallel_for(
        n, opts, [&](std::size_t begin, std::size_t end, std::size_t shard) {
          for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              for (auto rel : all_green_relations) {
                bool fast = green(s.handle(), s.at(a), s.at(b), rel);
                bool slow = oracle.related(a, b, rel);
                if (fast != slow) {
                  found[shard].push_back({a, b, rel, fast, slow});
                }
              }
              // L∘R(a, b) is R∘L(b, a)
              if (oracle.related(a, b, GreenRelation::D)
                  != oracle.related(b, a, GreenRelation::D)) {
                ++identity_failures[shard];
              }
            }
          }
        });

    GreenReport report;
    report.pairs_checked = n * n;
    for (std::size_t i = 0; i < shards; ++i) {
      report.mismatches.insert(
          report.mismatches.end(), found[i].begin(), found[i].end());
      report.oracle_identity_failures += identity_failures[i];
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Egg-box diagrams
  ////////////////////////////////////////////////////////////////////////

  bool DClassGrid::all_singletons() const noexcept {
    return std::all_of(cells.cbegin(), cells.cend(), [](auto const& cell) {
      return cell.size() == 1;
    });
  }

  bool EggBox::combinatorial() const noexcept {
    return std::all_of(classes.cbegin(), classes.cend(), [](auto const& d) {
      return d.all_singletons();
    });
  }

  EggBox eggbox(EnumeratedSemigroup const& s) {
    std::size_t const top = s.handle().effective_rank();
    std::vector<std::set<PointSeq>> rows(top + 1), cols(top + 1);
    for (auto const& a : s.elements()) {
      rows[a.rank()].emplace(a.dom().begin(), a.dom().end());
      cols[a.rank()].emplace(a.ran().begin(), a.ran().end());
    }

    EggBox box;
    for (std::size_t k = 0; k <= top; ++k) {
      DClassGrid d;
      d.rank = k;
      d.rows.assign(rows[k].begin(), rows[k].end());
      d.cols.assign(cols[k].begin(), cols[k].end());
      d.cells.resize(d.rows.size() * d.cols.size());
      box.classes.push_back(std::move(d));
    }
    for (auto const& a : s.elements()) {
      auto& d = box.classes[a.rank()];
      auto  r = std::lower_bound(d.rows.begin(),
                                d.rows.end(),
                                PointSeq(a.dom().begin(), a.dom().end()))
               - d.rows.begin();
      auto c = std::lower_bound(d.cols.begin(),
                                d.cols.end(),
                                PointSeq(a.ran().begin(), a.ran().end()))
               - d.cols.begin();
      d.cells[static_cast<std::size_t>(r) * d.cols.size()
              + static_cast<std::size_t>(c)]
          .push_back(a);
    }
    return box;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  IdealSeries ideal_series(EnumeratedSemigroup const& s) {
    IdealSeries series;
    for (std::size_t k = 0; k <= s.handle().effective_rank(); ++k) {
      ElementSet ideal = s.empty_set();
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.rank_of(i) <= k) {
          ideal.set(i);
        }
      }
      series.ideals.push_back(std::move(ideal));
    }
    return series;
  }

  bool is_ideal(EnumeratedSemigroup const& s, ElementSet const& set) {
    if (set.none()) {
      return false;
    }
    for (auto x = set.find_first(); x != ElementSet::npos;
         x      = set.find_next(x)) {
      for (std::size_t c = 0; c < s.size(); ++c) {
        if (!set.test(s.product(c, x)) || !set.test(s.product(x, c))) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<ElementSet> all_ideals(EnumeratedSemigroup const& s,
                                     ScanOptions                opts) {
    GreenOracle const oracle(s, opts);
    std::set<ElementSet> principal;
    for (std::size_t a = 0; a < s.size(); ++a) {
      principal.insert(oracle.two_sided_ideal(a));
    }
    // Every ideal is the union of the principal ideals of its elements, so
    // adding one principal ideal at a time from the principal ones reaches
    // all of them.
    std::set<ElementSet>    found(principal.begin(), principal.end());
    std::vector<ElementSet> frontier(principal.begin(), principal.end());
    while (!frontier.empty()) {
      std::vector<ElementSet> next;
      for (auto const& x : frontier) {
        for (auto const& p : principal) {
          ElementSet u = x | p;
          if (found.insert(u).second) {
            next.push_back(std::move(u));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<ElementSet> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.count() < y.count();
    });
    return out;
  }

  IdealReport check_ideals(EnumeratedSemigroup const& s, ScanOptions opts) {
    IdealReport report;
    report.ideals       = all_ideals(s, opts);
    auto const series   = ideal_series(s);
    report.all_valid    = true;
    std::size_t matched = 0;
    for (auto const& ideal : report.ideals) {
      report.all_valid = report.all_valid && is_ideal(s, ideal);
      std::optional<std::size_t> k;
      for (std::size_t j = 0; j < series.ideals.size(); ++j) {
        if (series.ideals[j] == ideal) {
          k = j;
          ++matched;
        }
      }
      report.series_rank.push_back(k);
    }
    report.matches_series = matched == report.ideals.size()
                            && matched == series.ideals.size();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Stability
  ////////////////////////////////////////////////////////////////////////

  StabilityReport check_stability(EnumeratedSemigroup const& s,
                                  ScanOptions                opts) {
    GreenOracle const oracle(s, opts);
    std::size_t const n      = s.size();
    auto const        shards = shard_count(n, opts);
    struct Partial {
      std::size_t                     right = 0, left = 0;
      std::vector<StabilityViolation> violations;
    };
    std::vector<Partial> partial(shards);

    parallel_for(
        n, opts, [&](std::size_t begin, std::size_t end, std::size_t shard) {
          auto& out = partial[shard];
          for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              auto const ba = s.product(b, a);
              if (oracle.right_ideal(a).is_subset_of(oracle.right_ideal(ba))) {
                ++out.right;
                bool eq = oracle.right_ideal(a) == oracle.right_ideal(ba);
                if (!eq || a != ba) {
                  out.violations.push_back({a, b, Side::right, eq, a == ba});
                }
              }
              auto const ab = s.product(a, b);
              if (oracle.left_ideal(a).is_subset_of(oracle.left_ideal(ab))) {
                ++out.left;
                bool eq = oracle.left_ideal(a) == oracle.left_ideal(ab);
                if (!eq || a != ab) {
                  out.violations.push_back({a, b, Side::left, eq, a == ab});
                }
              }
            }
          }
        });

    StabilityReport report;
    report.pairs_checked = n * n;
    for (auto& p : partial) {
      report.right_inclusions += p.right;
      report.left_inclusions += p.left;
      report.violations.insert(
          report.violations.end(), p.violations.begin(), p.violations.end());
    }
    return report;
  }

}  // namespace oi
