// ω-unstable layers and tight ideal series.
//
// A layer I_k ∖ I_{k-1} is ω-unstable when, for every a in it and every
// infinite B inside it, some product ab or ba leaves the layer. The
// checks here exercise the finite fact that implies it: two distinct
// elements of B already suffice, because at most one element of a layer has
// domain ran a and range dom a, and any other partner drops rank.

#ifndef OI_SERIES_HPP_
#define OI_SERIES_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "oi/carrier.hpp"
#include "oi/congruence.hpp"
#include "oi/parallel.hpp"
#include "oi/pariso.hpp"
#include "oi/random.hpp"
#include "oi/semigroup.hpp"

namespace oi {

  //! For rank a = rank b = k >= 1: dom b ≠ ran a implies rank(ab) < k.
  //! Throws UsageError on a rank mismatch or k = 0.
  bool rank_drop_law(PartialOrderIso const& a, PartialOrderIso const& b);

  enum class ProductSide { alpha_beta, beta_alpha };

  struct WitnessReport {
    PartialOrderIso              subject;
    std::vector<PartialOrderIso> probes;
    PartialOrderIso              witness;
    ProductSide                  side;
    PartialOrderIso              product;

    std::size_t product_rank() const noexcept {
      return product.rank();
    }
  };

  //! The first b in `probes` (in order) with rank(ab) < k, or else
  //! rank(ba) < k, where k = rank a. ab is tried before ba for each b.
  //!
  //! Throws UsageError unless probes holds at least two distinct elements
  //! and everything has the same rank k >= 1. Returns nothing only if the
  //! kernel fact fails, which would be a finding.
  std::optional<WitnessReport>
  omega_unstable_witness(PartialOrderIso const&          subject,
                         std::span<PartialOrderIso const> probes);

  //! Exhaustive kernel check on an enumerated semigroup: every element a of
  //! rank k >= 1 against every 2-element probe set from its D-class.
  struct KernelReport {
    std::size_t subjects    = 0;
    std::size_t probe_sets  = 0;
    std::size_t witnessed   = 0;

    bool passed() const noexcept {
      return witnessed == probe_sets;
    }
  };

  KernelReport check_unstable_kernel(EnumeratedSemigroup const& s,
                                     ScanOptions                opts = {});

  struct SamplingConfig {
    std::uint64_t seed              = 1;
    std::size_t   samples_per_layer = 200;
    //! Defaults to the whole chain, or -50..50 on the integer line.
    std::optional<Window> window;
    std::size_t           min_probes = 2;
    std::size_t           max_probes = 10;
  };

  struct LayerReport {
    std::size_t   layer         = 0;
    std::size_t   samples       = 0;
    std::size_t   witness_found = 0;
    std::uint64_t seed          = 0;

    bool passed() const noexcept {
      return witness_found == samples;
    }
  };

  struct TightSeriesReport {
    std::string              target;
    std::uint64_t            seed = 0;
    //! The bottom ideal is finite: {0}, or the zero of a quotient.
    bool                     bottom_finite = false;
    std::vector<LayerReport> layers;

    bool passed() const noexcept;
  };

  //! Samples (a, B) pairs inside each layer I_k ∖ I_{k-1} and runs
  //! omega_unstable_witness on them. Layer 0 is {0} and needs no samples;
  //! layers with fewer than two elements inside the window are vacuous.
  //! Throws UsageError for an empty sampling configuration or a window that
  //! cannot hold a rank-n element.
  TightSeriesReport tight_series_check(BoundedSemigroup const& s,
                                       SamplingConfig const&   config,
                                       ScanOptions             opts = {});

  //! The same for S / I_k: layer 0 is the zero class, and layers m = k+1..n
  //! are sampled through the lifting of quotient elements to their unique
  //! preimages. A witness counts when its product is zero in the quotient
  //! or has rank below m.
  TightSeriesReport tight_series_check(ReesQuotient const&   q,
                                       SamplingConfig const& config,
                                       ScanOptions           opts = {});

  struct CollapseSampleReport {
    std::size_t chains   = 0;
    std::size_t failures = 0;
    std::size_t steps    = 0;

    bool passed() const noexcept {
      return failures == 0;
    }
  };

  //! Builds `count` collapse chains on the integer line from seeded random
  //! idempotent pairs b < a with rank a in [1, max_rank] inside `window`.
  //! Pair i is drawn from derive_seed(seed, i).
  CollapseSampleReport check_random_collapse_chains(Window        window,
                                                    std::size_t   max_rank,
                                                    std::uint64_t seed,
                                                    std::size_t   count);

}  // namespace oi

#endif  // OI_SERIES_HPP_
