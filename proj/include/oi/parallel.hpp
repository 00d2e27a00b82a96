// Deterministic partitioned scans.

#ifndef OI_PARALLEL_HPP_
#define OI_PARALLEL_HPP_

#include <algorithm>  // for min, max
#include <cstddef>    // for size_t
#include <exception>  // for exception_ptr, rethrow_exception
#include <thread>     // for thread
#include <vector>     // for vector

namespace oi {

  struct ScanOptions {
    //! Worker threads for pairwise scans; 1 is the sequential reference.
    unsigned threads = 1;
  };

  //! Number of shards parallel_for uses for n items.
  inline std::size_t shard_count(std::size_t n, ScanOptions const& opts) {
    return std::max<std::size_t>(1, std::min<std::size_t>(opts.threads, n));
  }

  //! Splits [0, n) into contiguous shards and calls body(begin, end, shard)
  //! for each, one thread per shard. Shard boundaries depend only on n and
  //! the thread count, and callers write results into per-shard slots that
  //! are merged in shard order, so output does not depend on scheduling.
  //! Returns the number of shards used. The first exception thrown by any
  //! shard is rethrown after all shards finish.
  template <typename Body>
  std::size_t parallel_for(std::size_t n, ScanOptions const& opts, Body&& body) {
    std::size_t const shards = shard_count(n, opts);
    if (shards == 1) {
      body(std::size_t(0), n, std::size_t(0));
      return 1;
    }
    std::vector<std::exception_ptr> errors(shards);
    std::vector<std::thread>         workers;
    workers.reserve(shards);
    std::size_t const chunk = (n + shards - 1) / shards;
    for (std::size_t s = 0; s < shards; ++s) {
      std::size_t begin = std::min(n, s * chunk);
      std::size_t end   = std::min(n, begin + chunk);
      workers.emplace_back([&, begin, end, s] {
        try {
          body(begin, end, s);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) {
      w.join();
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return shards;
  }

}  // namespace oi

#endif  // OI_PARALLEL_HPP_
