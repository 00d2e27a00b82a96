// Seeded sampling of random elements.

#ifndef OI_RANDOM_HPP_
#define OI_RANDOM_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <random>   // for uniform_int_distribution
#include <set>      // for set
#include <string>   // for to_string

#include "oi/carrier.hpp"
#include "oi/error.hpp"
#include "oi/pariso.hpp"

namespace oi {

  //! Seed for shard `index` of a run, derived from the master seed alone
  //! (splitmix64), so results do not depend on the thread count.
  constexpr std::uint64_t derive_seed(std::uint64_t master,
                                      std::uint64_t index) noexcept {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  namespace detail {
    // Floyd's algorithm: k distinct points of the window, sorted.
    template <typename Rng>
    PointSeq random_subset(Rng& rng, Window window, std::size_t k) {
      std::uint64_t const     n = window.size();
      std::set<std::uint64_t> chosen;
      for (std::uint64_t j = n - k; j < n; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        if (!chosen.insert(pick(rng)).second) {
          chosen.insert(j);
        }
      }
      PointSeq out;
      out.reserve(k);
      for (auto offset : chosen) {
        out.emplace_back(window.lo + static_cast<std::int64_t>(offset));
      }
      return out;
    }
  }  // namespace detail

  //! A uniformly random element of rank k with points in `window`.
  //! Throws UsageError if the window has fewer than k points.
  template <typename Rng>
  PartialOrderIso random_element(Rng& rng, Window window, std::size_t k) {
    if (k > window.size()) {
      throw UsageError("window " + window.to_string()
                       + " is too small for rank " + std::to_string(k));
    }
    auto dom = detail::random_subset(rng, window, k);
    auto ran = detail::random_subset(rng, window, k);
    return make_iso(std::move(dom), std::move(ran));
  }

  //! A random idempotent (identity on a random k-subset).
  template <typename Rng>
  PartialOrderIso random_idempotent(Rng& rng, Window window, std::size_t k) {
    if (k > window.size()) {
      throw UsageError("window " + window.to_string()
                       + " is too small for rank " + std::to_string(k));
    }
    return identity_on(detail::random_subset(rng, window, k));
  }

  //! Random element whose rank is uniform in [0, max_rank].
  template <typename Rng>
  PartialOrderIso random_element_up_to(Rng&        rng,
                                       Window      window,
                                       std::size_t max_rank) {
    std::uniform_int_distribution<std::size_t> rank(0, max_rank);
    return random_element(rng, window, rank(rng));
  }

}  // namespace oi

#endif  // OI_RANDOM_HPP_
