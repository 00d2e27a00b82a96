#include "oi/congruence.hpp"

#include <algorithm>  // for sort, max
#include <deque>      // for deque
#include <numeric>    // for iota
#include <random>     // for mt19937_64
#include <set>        // for set

#include "oi/error.hpp"

namespace oi {

  ////////////////////////////////////////////////////////////////////////
  // DisjointSets
  ////////////////////////////////////////////////////////////////////////

  DisjointSets::DisjointSets(std::size_t n) : _parent(n), _weight(n, 1) {
    std::iota(_parent.begin(), _parent.end(), std::size_t(0));
  }

  std::size_t DisjointSets::find(std::size_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool DisjointSets::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_weight[x] < _weight[y]) {
      std::swap(x, y);
    }
    _parent[y] = x;
    _weight[x] += _weight[y];
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  Congruence Congruence::from_closed(DisjointSets& sets) {
    std::size_t const        n = sets.size();
    std::vector<std::size_t> smallest(n, n);
    std::vector<std::size_t> label(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto root = sets.find(i);
      if (smallest[root] == n) {
        smallest[root] = i;
      }
      label[i] = smallest[root];
    }
    return Congruence(std::move(label));
  }

  Congruence Congruence::from_blocks(
      EnumeratedSemigroup const&                   s,
      std::vector<std::vector<std::size_t>> const& blocks) {
    std::size_t const n = s.size();
    DisjointSets      sets(n);
    std::vector<bool> seen(n, false);
    for (auto const& block : blocks) {
      if (block.empty()) {
        throw UsageError("a congruence block cannot be empty");
      }
      for (auto i : block) {
        if (i >= n || seen[i]) {
          throw UsageError("blocks do not partition the "
                           + std::to_string(n) + " elements (index "
                           + std::to_string(i) + ")");
        }
        seen[i] = true;
        sets.unite(block.front(), i);
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw UsageError("blocks do not cover every element");
    }
    Congruence c = from_closed(sets);
    if (!c.is_compatible(s)) {
      throw UsageError("partition is not compatible with multiplication");
    }
    return c;
  }

  Congruence Congruence::diagonal(std::size_t n) {
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), std::size_t(0));
    return Congruence(std::move(label));
  }

  Congruence Congruence::universal(std::size_t n) {
    return Congruence(std::vector<std::size_t>(n, 0));
  }

  std::size_t Congruence::block_count() const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < _label.size(); ++i) {
      count += _label[i] == i;
    }
    return count;
  }

  std::vector<std::vector<std::size_t>> Congruence::blocks() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              slot(_label.size());
    for (std::size_t i = 0; i < _label.size(); ++i) {
      if (_label[i] == i) {
        slot[i] = out.size();
        out.emplace_back();
      }
      out[slot[_label[i]]].push_back(i);
    }
    return out;
  }

  bool Congruence::is_compatible(EnumeratedSemigroup const& s) const {
    for (auto const& block : blocks()) {
      for (auto x : block) {
        for (auto y : block) {
          if (y <= x) {
            continue;
          }
          for (std::size_t c = 0; c < s.size(); ++c) {
            if (!related(s.product(c, x), s.product(c, y))
                || !related(s.product(x, c), s.product(y, c))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool Congruence::refines(Congruence const& that) const {
    for (std::size_t i = 0; i < _label.size(); ++i) {
      if (!that.related(i, _label[i])) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Congruence rees_congruence(EnumeratedSemigroup const& s, std::size_t k) {
    if (k > s.handle().max_rank()) {
      throw UsageError("Rees threshold " + std::to_string(k)
                       + " exceeds the maximum rank "
                       + std::to_string(s.handle().max_rank()));
    }
    std::vector<std::vector<std::size_t>> blocks(1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.rank_of(i) <= k) {
        blocks.front().push_back(i);
      } else {
        blocks.push_back({i});
      }
    }
    DisjointSets sets(s.size());
    for (auto i : blocks.front()) {
      sets.unite(blocks.front().front(), i);
    }
    return Congruence::from_closed(sets);
  }

  Congruence generated_congruence(
      EnumeratedSemigroup const&                              s,
      std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
    std::size_t const n = s.size();
    DisjointSets      sets(n);
    std::size_t       classes = n;
    std::deque<std::pair<std::size_t, std::size_t>> queue;
    auto merge = [&](std::size_t x, std::size_t y) {
      if (sets.unite(x, y)) {
        --classes;
        queue.emplace_back(x, y);
      }
    };
    for (auto [a, b] : pairs) {
      merge(a, b);
    }
    // Only merging pairs are queued, and only generators multiply them;
    // everything else follows by transitivity and induction on word length.
    auto const gens = s.generators();
    while (!queue.empty() && classes > 1) {
      auto [x, y] = queue.front();
      queue.pop_front();
      for (auto g : gens) {
        merge(s.product(g, x), s.product(g, y));
        merge(s.product(x, g), s.product(y, g));
      }
    }
    return Congruence::from_closed(sets);
  }

  Congruence principal_congruence(EnumeratedSemigroup const& s,
                                  std::size_t                a,
                                  std::size_t                b) {
    return generated_congruence(s, {{a, b}});
  }

  Congruence principal_congruence(EnumeratedSemigroup const& s,
                                  PartialOrderIso const&     a,
                                  PartialOrderIso const&     b) {
    auto i = s.index_of(a);
    auto j = s.index_of(b);
    if (!i || !j) {
      throw UsageError("principal_congruence: " + a.to_string() + " or "
                       + b.to_string() + " is not an element of "
                       + s.handle().to_string());
    }
    return principal_congruence(s, *i, *j);
  }

  Congruence join(EnumeratedSemigroup const& s,
                  Congruence const&          x,
                  Congruence const&          y) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < s.size(); ++i) {
      pairs.emplace_back(i, x.label(i));
      pairs.emplace_back(i, y.label(i));
    }
    return generated_congruence(s, pairs);
  }

  std::vector<Congruence> all_congruences(EnumeratedSemigroup const& s,
                                          ScanOptions                opts,
                                          std::size_t                cap) {
    std::size_t const n = s.size();
    if (n > cap) {
      throw SizeError("congruence lattice of " + std::to_string(n)
                      + " elements exceeds the cap of " + std::to_string(cap));
    }
    auto const                        shards = shard_count(n, opts);
    std::vector<std::set<Congruence>> partial(shards);
    parallel_for(
        n, opts, [&](std::size_t begin, std::size_t end, std::size_t shard) {
          for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
              partial[shard].insert(principal_congruence(s, a, b));
            }
          }
        });

    std::set<Congruence> principal;
    for (auto& p : partial) {
      principal.merge(p);
    }
    std::set<Congruence> found(principal);
    found.insert(Congruence::diagonal(n));
    // every congruence is the join of the principal congruences it contains
    std::vector<Congruence> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<Congruence> next;
      for (auto const& x : frontier) {
        for (auto const& p : principal) {
          if (p.refines(x)) {
            continue;
          }
          auto j = join(s, x, p);
          if (found.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }

    std::vector<Congruence> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.block_count() > y.block_count();
    });
    return out;
  }

  std::optional<std::size_t> is_rees(EnumeratedSemigroup const& s,
                                     Congruence const&          c) {
    std::optional<std::vector<std::size_t>> big;
    for (auto& block : c.blocks()) {
      if (block.size() > 1) {
        if (big) {
          return std::nullopt;
        }
        big = std::move(block);
      }
    }
    if (!big) {
      return 0;  // Δ, and I_0 = {0} is a singleton
    }
    std::size_t k = 0;
    for (auto i : *big) {
      k = std::max(k, s.rank_of(i));
    }
    std::size_t members = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      members += s.rank_of(i) <= k;
    }
    // big ⊆ I_k by the choice of k, so equal sizes mean equality
    if (members != big->size()) {
      return std::nullopt;
    }
    return k;
  }

  bool LatticeReport::all_rees() const noexcept {
    return std::all_of(
        rees.cbegin(), rees.cend(), [](auto const& k) { return k.has_value(); });
  }

  LatticeReport check_congruence_lattice(EnumeratedSemigroup const& s,
                                         ScanOptions                opts,
                                         std::size_t                cap) {
    LatticeReport report;
    report.congruences    = all_congruences(s, opts, cap);
    report.expected_count = s.handle().effective_rank() + 1;
    report.all_compatible = true;
    for (auto const& c : report.congruences) {
      report.rees.push_back(is_rees(s, c));
      report.all_compatible = report.all_compatible && c.is_compatible(s);
    }
    return report;
  }

  CongruenceLawReport check_congruence_laws(EnumeratedSemigroup const& s,
                                            ScanOptions                opts,
                                            std::optional<std::size_t> max_pairs,
                                            std::uint64_t              seed) {
    std::size_t const n = s.size();
    CongruenceLawReport report;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t const total = n * (n - 1) / 2;
    if (max_pairs && *max_pairs < total) {
      report.sample_seed = seed;
      std::mt19937_64                            rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      while (pairs.size() < *max_pairs) {
        auto a = pick(rng), b = pick(rng);
        if (a != b) {
          pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
    } else {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          pairs.emplace_back(a, b);
        }
      }
    }

    auto const               shards = shard_count(pairs.size(), opts);
    std::vector<std::size_t> failed(shards, 0);
    parallel_for(pairs.size(),
                 opts,
                 [&](std::size_t begin, std::size_t end, std::size_t shard) {
                   for (std::size_t p = begin; p < end; ++p) {
                     auto [a, b] = pairs[p];
                     auto const c = principal_congruence(s, a, b);
                     auto const top = std::max(s.rank_of(a), s.rank_of(b));
                     for (std::size_t g = 0; g < n; ++g) {
                       if (s.rank_of(g) <= top && !c.related(a, g)) {
                         ++failed[shard];
                         break;
                       }
                     }
                   }
                 });
    report.pairs = pairs.size();
    for (auto f : failed) {
      report.pair_failures += f;
    }

    auto const zero = EnumeratedSemigroup::zero_index();
    for (std::size_t a = 0; a < n; ++a) {
      if (a == zero) {
        continue;
      }
      ++report.zero_pairs;
      auto const c = principal_congruence(s, a, zero);
      if (!rees_congruence(s, s.rank_of(a)).refines(c)) {
        ++report.zero_failures;
      }
    }

    std::vector<std::size_t> idempotents;
    for (std::size_t i = 0; i < n; ++i) {
      if (s.at(i).is_idempotent()) {
        idempotents.push_back(i);
      }
    }
    for (auto a : idempotents) {
      for (auto b : idempotents) {
        if (a == b || !natural_leq(s.at(b), s.at(a))) {
          continue;
        }
        ++report.chains;
        auto const chain = collapse_chain(s.handle().carrier(), s.at(a), s.at(b));
        auto const c     = principal_congruence(s, a, b);
        bool       ok    = collapse_chain_failures(chain).empty()
                  && c.related(a, zero);
        for (auto const& e : chain.idempotents()) {
          auto i = s.index_of(e);
          ok     = ok && i && c.related(a, *i);
        }
        report.chain_failures += !ok;
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Collapse chains
  ////////////////////////////////////////////////////////////////////////

  namespace {
    PointSeq points_of(std::span<CarrierPoint const> s) {
      return PointSeq(s.begin(), s.end());
    }

    PointSeq without(std::span<CarrierPoint const> s, CarrierPoint y) {
      PointSeq out;
      for (auto p : s) {
        if (p != y) {
          out.push_back(p);
        }
      }
      return out;
    }

    PartialOrderIso conjugate(PartialOrderIso const& iota,
                              PartialOrderIso const& e) {
      return compose(iota, e, inverse(iota));
    }
  }  // namespace

  std::vector<PartialOrderIso> CollapseChain::idempotents() const {
    std::vector<PartialOrderIso> out{alpha, start};
    for (auto const& step : steps) {
      out.push_back(step.next);
    }
    return out;
  }

  CollapseChain collapse_chain(Carrier const&         carrier,
                               PartialOrderIso const& alpha,
                               PartialOrderIso const& beta) {
    if (!alpha.is_idempotent() || !beta.is_idempotent()) {
      throw UsageError("collapse_chain needs idempotents, got "
                       + alpha.to_string() + " and " + beta.to_string());
    }
    if (!alpha.lies_in(carrier) || !beta.lies_in(carrier)) {
      throw UsageError("collapse_chain: points outside " + carrier.to_string());
    }
    if (alpha == beta || !natural_leq(beta, alpha)) {
      throw UsageError("collapse_chain needs " + beta.to_string()
                       + " strictly below " + alpha.to_string());
    }

    CollapseChain chain{alpha, beta, beta, {}};
    if (beta.is_zero()) {
      return chain;
    }
    std::size_t const k = alpha.rank();
    if (beta.rank() + 1 < k) {
      // largest point of dom alpha outside dom beta
      CarrierPoint x;
      for (auto p : alpha.dom()) {
        if (!beta.apply(p)) {
          x = p;
        }
      }
      chain.start = identity_on(without(alpha.dom(), x));
    }

    PartialOrderIso previous = alpha;
    PartialOrderIso current  = chain.start;
    while (!current.is_zero()) {
      CarrierPoint const y = current.dom().back();
      auto iota = make_iso(points_of(current.dom()), without(previous.dom(), y));
      auto next = conjugate(iota, current);
      chain.steps.push_back({iota, next});
      previous = std::move(current);
      current  = std::move(next);
    }
    return chain;
  }

  std::vector<std::string> collapse_chain_failures(CollapseChain const& chain) {
    std::vector<std::string> failures;
    auto const&              alpha = chain.alpha;
    std::size_t const        k     = alpha.rank();

    if (!chain.start.is_idempotent() || !natural_leq(chain.beta, chain.start)
        || !natural_leq(chain.start, alpha) || chain.start == alpha) {
      failures.push_back("start is not an idempotent between beta and alpha");
    }
    if (!chain.beta.is_zero() && chain.start.rank() + 1 != k) {
      failures.push_back("start does not have rank k - 1");
    }

    auto const beta = chain.idempotents();
    for (std::size_t m = 1; m <= chain.steps.size(); ++m) {
      auto const& iota = chain.steps[m - 1].iota;
      auto const& next = chain.steps[m - 1].next;
      auto const  tag  = " at step " + std::to_string(m);
      if (conjugate(iota, beta[m - 1]) != beta[m]
          || conjugate(iota, beta[m]) == beta[m]) {
        failures.push_back("condition (1)" + tag);
      }
      if (next != conjugate(iota, beta[m]) || !next.is_idempotent()) {
        failures.push_back("condition (2)" + tag);
      }
      if (!natural_leq(next, beta[m])) {
        failures.push_back("condition (3)" + tag);
      }
      if (next.rank() + m + 1 != k) {
        failures.push_back("condition (4)" + tag);
      }
    }
    if (!beta.back().is_zero()) {
      failures.push_back("chain does not end at zero");
    }
    return failures;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees quotients
  ////////////////////////////////////////////////////////////////////////

  PartialOrderIso const& QuotientElement::lifted() const {
    if (!_lifted) {
      throw UsageError("the zero of a Rees quotient has no unique preimage");
    }
    return *_lifted;
  }

  std::string QuotientElement::to_string() const {
    return _lifted ? _lifted->to_string() : std::string("0");
  }

  ReesQuotient::ReesQuotient(BoundedSemigroup base, std::size_t k)
      : _base(std::move(base)), _k(k) {
    if (k > _base.max_rank()) {
      throw UsageError("Rees threshold " + std::to_string(k)
                       + " exceeds the maximum rank "
                       + std::to_string(_base.max_rank()));
    }
  }

  QuotientElement ReesQuotient::project(PartialOrderIso const& a) const {
    if (!_base.contains(a)) {
      throw UsageError(a.to_string() + " is not an element of "
                       + _base.to_string());
    }
    return a.rank() <= _k ? QuotientElement() : QuotientElement(a);
  }

  QuotientElement ReesQuotient::multiply(QuotientElement const& x,
                                         QuotientElement const& y) const {
    if (x.is_zero() || y.is_zero()) {
      return QuotientElement();
    }
    auto c = compose(x.lifted(), y.lifted());
    return c.rank() <= _k ? QuotientElement() : QuotientElement(std::move(c));
  }

  std::vector<QuotientElement> ReesQuotient::enumerate(std::size_t cap) const {
    EnumeratedSemigroup const    s(_base, cap);
    std::vector<QuotientElement> out{QuotientElement()};
    for (auto const& a : s.elements()) {
      if (a.rank() > _k) {
        out.emplace_back(a);
      }
    }
    return out;
  }

  HomomorphismReport verify_homomorphism(EnumeratedSemigroup const& s,
                                         ReesQuotient const&        q,
                                         ScanOptions                opts) {
    std::size_t const        n      = s.size();
    auto const               shards = shard_count(n, opts);
    std::vector<std::size_t> failures(shards, 0);
    std::vector<QuotientElement> image;
    image.reserve(n);
    for (auto const& a : s.elements()) {
      image.push_back(q.project(a));
    }
    parallel_for(
        n, opts, [&](std::size_t begin, std::size_t end, std::size_t shard) {
          for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              if (image[s.product(a, b)] != q.multiply(image[a], image[b])) {
                ++failures[shard];
              }
            }
          }
        });
    HomomorphismReport report;
    report.products_checked = n * n;
    for (auto f : failures) {
      report.failures += f;
    }
    return report;
  }

}  // namespace oi
