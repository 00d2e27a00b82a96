// Linearly ordered point universes: finite chains {0,...,m-1} and the
// integer line.

#ifndef OI_CARRIER_HPP_
#define OI_CARRIER_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for int64_t, uint64_t
#include <functional>   // for hash
#include <iterator>     // for input_iterator_tag
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace oi {

  //! A point of a carrier, identified by its integer coordinate.
  //!
  //! Points compare exactly as their coordinates do. The conversion from
  //! `std::int64_t` is implicit so that literal point lists read naturally.
  struct CarrierPoint {
    constexpr CarrierPoint() noexcept = default;
    constexpr CarrierPoint(std::int64_t c) noexcept : coord(c) {}  // NOLINT

    constexpr auto operator<=>(CarrierPoint const&) const noexcept = default;

    std::int64_t coord = 0;
  };

  using PointSeq = std::vector<CarrierPoint>;

  enum class Ordering { less, equal, greater };

  //! Inclusive coordinate interval `lo..hi`.
  struct Window {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::uint64_t size() const noexcept {
      return static_cast<std::uint64_t>(hi - lo) + 1;
    }

    bool contains(CarrierPoint p) const noexcept {
      return lo <= p.coord && p.coord <= hi;
    }

    bool operator==(Window const&) const = default;

    //! Parses `<lo>..<hi>`; throws ParseError, or UsageError if lo > hi.
    static Window parse(std::string_view text);
    std::string to_string() const;
  };

  class Carrier {
   public:
    enum class Kind { finite_chain, integer_line };

    //! The chain {0,...,m-1}; throws UsageError unless m >= 1.
    static Carrier finite_chain(std::int64_t m);
    static Carrier integer_line() noexcept {
      return Carrier(Kind::integer_line, 0);
    }

    //! Parses `chain:<m>` or `int`.
    static Carrier parse(std::string_view text);

    Kind kind() const noexcept {
      return _kind;
    }

    bool is_finite() const noexcept {
      return _kind == Kind::finite_chain;
    }

    //! Number of points, absent for the integer line.
    std::optional<std::int64_t> size() const noexcept {
      if (is_finite()) {
        return _size;
      }
      return std::nullopt;
    }

    bool contains(CarrierPoint p) const noexcept {
      return !is_finite() || (0 <= p.coord && p.coord < _size);
    }

    //! Total order comparison. Throws UsageError if either point lies
    //! outside this carrier.
    Ordering compare(CarrierPoint a, CarrierPoint b) const;

    //! The whole chain as a window; absent for the integer line.
    std::optional<Window> full_window() const noexcept;

    std::string to_string() const;

    bool operator==(Carrier const&) const = default;

   private:
    Carrier(Kind kind, std::int64_t size) noexcept
        : _kind(kind), _size(size) {}

    Kind _kind;
    std::int64_t _size;
  };

  //! Lazily generated k-subsets of a window, in lexicographic order, each
  //! exactly once. Iterating twice restarts the enumeration.
  class KSubsets {
   public:
    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type        = PointSeq;
      using difference_type   = std::ptrdiff_t;
      using pointer           = PointSeq const*;
      using reference         = PointSeq const&;

      iterator() = default;

      reference operator*() const noexcept {
        return _current;
      }
      pointer operator->() const noexcept {
        return &_current;
      }
      iterator& operator++();
      void      operator++(int) {
        ++*this;
      }

      bool operator==(iterator const& that) const noexcept {
        return _done == that._done;
      }

     private:
      friend class KSubsets;
      iterator(Window w, std::size_t k);

      Window   _window{};
      PointSeq _current;
      bool     _done = true;
    };

    KSubsets(Window window, std::size_t k) noexcept
        : _window(window), _k(k) {}

    iterator begin() const {
      return iterator(_window, _k);
    }
    iterator end() const noexcept {
      return iterator();
    }

    //! Materialises the whole stream.
    std::vector<PointSeq> collect() const;

   private:
    Window      _window;
    std::size_t _k;
  };

  //! k-subsets of the carrier restricted to `window`. The window defaults
  //! to the whole chain and is mandatory on the integer line (UsageError).
  //! A window reaching outside a finite chain is a UsageError. k larger than
  //! the window yields an empty stream.
  KSubsets k_subsets(Carrier const&              carrier,
                     std::size_t                 k,
                     std::optional<Window> const& window = std::nullopt);

  //! Binomial coefficient, saturating at UINT64_MAX.
  std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace oi

template <>
struct std::hash<oi::CarrierPoint> {
  std::size_t operator()(oi::CarrierPoint p) const noexcept {
    return std::hash<std::int64_t>()(p.coord);
  }
};

#endif  // OI_CARRIER_HPP_
