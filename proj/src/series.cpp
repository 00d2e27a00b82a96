#include "oi/series.hpp"

#include <algorithm>  // for all_of, find, shuffle
#include <random>     // for mt19937_64

#include "oi/error.hpp"

namespace oi {

  bool rank_drop_law(PartialOrderIso const& a, PartialOrderIso const& b) {
    if (a.rank() != b.rank() || a.rank() == 0) {
      throw UsageError("rank_drop_law needs two elements of equal rank >= 1, "
                       "got "
                       + a.to_string() + " and " + b.to_string());
    }
    if (std::ranges::equal(b.dom(), a.ran())) {
      return true;
    }
    return compose(a, b).rank() < a.rank();
  }

  std::optional<WitnessReport>
  omega_unstable_witness(PartialOrderIso const&           subject,
                         std::span<PartialOrderIso const> probes) {
    std::size_t const k = subject.rank();
    if (k == 0) {
      throw UsageError("omega_unstable_witness needs a subject of rank >= 1");
    }
    if (probes.size() < 2) {
      throw UsageError("omega_unstable_witness needs at least two probes");
    }
    for (std::size_t i = 0; i < probes.size(); ++i) {
      if (probes[i].rank() != k) {
        throw UsageError("probe " + probes[i].to_string()
                         + " does not have rank " + std::to_string(k));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (probes[i] == probes[j]) {
          throw UsageError("probe " + probes[i].to_string() + " is repeated");
        }
      }
    }
    for (auto const& b : probes) {
      for (auto side : {ProductSide::alpha_beta, ProductSide::beta_alpha}) {
        auto product = side == ProductSide::alpha_beta ? compose(subject, b)
                                                       : compose(b, subject);
        if (product.rank() < k) {
          return WitnessReport{subject,
                               {probes.begin(), probes.end()},
                               b,
                               side,
                               std::move(product)};
        }
      }
    }
    return std::nullopt;
  }

  KernelReport check_unstable_kernel(EnumeratedSemigroup const& s,
                                     ScanOptions                opts) {
    std::size_t const n = s.size();
    // indices of each D-class, by rank
    std::vector<std::vector<std::size_t>> layer(s.handle().effective_rank()
                                                + 1);
    for (std::size_t i = 0; i < n; ++i) {
      layer[s.rank_of(i)].push_back(i);
    }
    auto const                shards = shard_count(n, opts);
    std::vector<KernelReport> partial(shards);
    parallel_for(
        n, opts, [&](std::size_t begin, std::size_t end, std::size_t shard) {
          auto& out = partial[shard];
          for (std::size_t a = begin; a < end; ++a) {
            auto const k = s.rank_of(a);
            if (k == 0) {
              continue;
            }
            ++out.subjects;
            auto const& d = layer[k];
            for (std::size_t i = 0; i < d.size(); ++i) {
              for (std::size_t j = i + 1; j < d.size(); ++j) {
                PartialOrderIso const probes[] = {s.at(d[i]), s.at(d[j])};
                ++out.probe_sets;
                out.witnessed += omega_unstable_witness(s.at(a), probes)
                                     .has_value();
              }
            }
          }
        });
    KernelReport report;
    for (auto const& p : partial) {
      report.subjects += p.subjects;
      report.probe_sets += p.probe_sets;
      report.witnessed += p.witnessed;
    }
    return report;
  }

  bool TightSeriesReport::passed() const noexcept {
    return bottom_finite
           && std::all_of(layers.cbegin(), layers.cend(), [](auto const& l) {
                return l.passed();
              });
  }

  namespace {
    struct Layers {
      Window      window;
      std::size_t first;  // lowest sampled rank
      std::size_t last;   // highest sampled rank
    };

    Layers validate(BoundedSemigroup const& s,
                    SamplingConfig const&   config,
                    std::size_t             first) {
      if (config.samples_per_layer == 0) {
        throw UsageError("tight_series_check needs at least one sample per "
                         "layer");
      }
      if (config.min_probes < 2 || config.max_probes < config.min_probes) {
        throw UsageError("probe sets need 2 <= min_probes <= max_probes");
      }
      Window window;
      if (config.window) {
        window = *config.window;
        // same containment rule as k_subsets
        k_subsets(s.carrier(), 0, window);
      } else {
        window = s.carrier().full_window().value_or(Window{-50, 50});
      }
      std::size_t const last = s.effective_rank();
      if (window.size() < last) {
        throw UsageError("window " + window.to_string()
                         + " cannot hold an element of rank "
                         + std::to_string(last));
      }
      return {window, first, last};
    }

    // Elements of rank m with points in the window, saturating.
    std::uint64_t layer_size(Window w, std::size_t m) {
      auto c = binomial(w.size(), m);
      return c > (1ULL << 32) ? ~0ULL : c * c;
    }

    // Samples one layer; `escapes` decides whether a witness product left it.
    template <typename Escapes>
    LayerReport sample_layer(SamplingConfig const& config,
                             Window                window,
                             std::size_t           m,
                             Escapes&&             escapes) {
      LayerReport report{m, 0, 0, derive_seed(config.seed, m)};
      auto const  available = layer_size(window, m);
      if (available < 2) {
        return report;  // no two distinct probes exist: vacuous
      }
      std::mt19937_64 rng(report.seed);
      std::size_t const max_probes = static_cast<std::size_t>(
          std::min<std::uint64_t>(config.max_probes, available));
      std::size_t const min_probes = std::min(config.min_probes, max_probes);
      std::uniform_int_distribution<std::size_t> probe_count(min_probes,
                                                             max_probes);
      for (std::size_t i = 0; i < config.samples_per_layer; ++i) {
        auto                         subject = random_element(rng, window, m);
        std::vector<PartialOrderIso> probes;
        std::size_t const            want = probe_count(rng);
        while (probes.size() < want) {
          auto b = random_element(rng, window, m);
          if (std::find(probes.begin(), probes.end(), b) == probes.end()) {
            probes.push_back(std::move(b));
          }
        }
        ++report.samples;
        auto w = omega_unstable_witness(subject, probes);
        if (w && escapes(*w)) {
          ++report.witness_found;
        }
      }
      return report;
    }

    template <typename Escapes>
    TightSeriesReport run(std::string             target,
                          BoundedSemigroup const& s,
                          SamplingConfig const&   config,
                          ScanOptions const&      opts,
                          std::size_t             first,
                          Escapes&&               escapes) {
      auto const        layers = validate(s, config, first);
      TightSeriesReport report;
      report.target        = std::move(target);
      report.seed          = config.seed;
      report.bottom_finite = true;
      report.layers.push_back({0, 0, 0, derive_seed(config.seed, 0)});
      if (layers.first > layers.last) {
        return report;
      }
      std::size_t const        count = layers.last - layers.first + 1;
      std::vector<LayerReport> sampled(count);
      parallel_for(count, opts, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i) {
          sampled[i] = sample_layer(
              config, layers.window, layers.first + i, escapes);
        }
      });
      report.layers.insert(report.layers.end(), sampled.begin(), sampled.end());
      return report;
    }
  }  // namespace

  TightSeriesReport tight_series_check(BoundedSemigroup const& s,
                                       SamplingConfig const&   config,
                                       ScanOptions             opts) {
    // I_0 = {0} is finite by construction.
    return run(s.to_string(), s, config, opts, 1, [](WitnessReport const& w) {
      return w.product_rank() < w.subject.rank();
    });
  }

  TightSeriesReport tight_series_check(ReesQuotient const&   q,
                                       SamplingConfig const& config,
                                       ScanOptions           opts) {
    auto target = q.base().to_string() + "/I_" + std::to_string(q.threshold());
    // Above the threshold the canonical map is injective, so the sampled
    // preimages stand for distinct quotient elements.
    return run(std::move(target),
               q.base(),
               config,
               opts,
               q.threshold() + 1,
               [&q](WitnessReport const& w) {
                 auto const m = w.subject.rank();
                 auto const a = q.project(w.subject);
                 auto const b = q.project(w.witness);
                 auto const product = w.side == ProductSide::alpha_beta
                                          ? q.multiply(a, b)
                                          : q.multiply(b, a);
                 return product.is_zero() || product.lifted().rank() != m;
               });
  }

  CollapseSampleReport check_random_collapse_chains(Window        window,
                                                    std::size_t   max_rank,
                                                    std::uint64_t seed,
                                                    std::size_t   count) {
    if (max_rank == 0 || window.size() < max_rank) {
      throw UsageError("window " + window.to_string()
                       + " cannot hold an idempotent of rank "
                       + std::to_string(max_rank));
    }
    auto const           carrier = Carrier::integer_line();
    CollapseSampleReport report;
    for (std::size_t i = 0; i < count; ++i) {
      std::mt19937_64 rng(derive_seed(seed, i));
      std::uniform_int_distribution<std::size_t> pick_rank(1, max_rank);
      auto const alpha = random_idempotent(rng, window, pick_rank(rng));
      std::uniform_int_distribution<std::size_t> pick_lower(0,
                                                            alpha.rank() - 1);
      PointSeq points(alpha.dom().begin(), alpha.dom().end());
      std::shuffle(points.begin(), points.end(), rng);
      points.resize(pick_lower(rng));
      auto const chain = collapse_chain(carrier, alpha, identity_on(points));
      ++report.chains;
      report.steps += chain.steps.size();
      report.failures += !collapse_chain_failures(chain).empty();
    }
    return report;
  }

}  // namespace oi
