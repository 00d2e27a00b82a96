#include "oi/carrier.hpp"

#include <algorithm>  // for min
#include <charconv>   // for from_chars
#include <limits>     // for numeric_limits

#include "oi/error.hpp"

namespace oi {

  namespace {
    std::int64_t parse_coord(std::string_view text,
                             std::size_t      offset,
                             char const*      what) {
      std::int64_t value = 0;
      auto const*  first = text.data();
      auto const*  last  = text.data() + text.size();
      auto [ptr, ec]     = std::from_chars(first, last, value);
      if (text.empty() || ec != std::errc() || ptr != last) {
        throw ParseError(std::string("expected ") + what,
                         offset,
                         std::string(text));
      }
      return value;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Window
  ////////////////////////////////////////////////////////////////////////

  Window Window::parse(std::string_view text) {
    auto sep = text.find("..");
    if (sep == std::string_view::npos) {
      throw ParseError("expected window <lo>..<hi>", 0, std::string(text));
    }
    Window w{parse_coord(text.substr(0, sep), 0, "integer lower bound"),
             parse_coord(text.substr(sep + 2), sep + 2, "integer upper bound")};
    if (w.lo > w.hi) {
      throw UsageError("empty window " + std::string(text));
    }
    return w;
  }

  std::string Window::to_string() const {
    return std::to_string(lo) + ".." + std::to_string(hi);
  }

  ////////////////////////////////////////////////////////////////////////
  // Carrier
  ////////////////////////////////////////////////////////////////////////

  Carrier Carrier::finite_chain(std::int64_t m) {
    if (m < 1) {
      throw UsageError("a finite chain needs at least one point, got "
                       + std::to_string(m));
    }
    return Carrier(Kind::finite_chain, m);
  }

  Carrier Carrier::parse(std::string_view text) {
    if (text == "int") {
      return integer_line();
    }
    constexpr std::string_view prefix = "chain:";
    if (text.substr(0, prefix.size()) != prefix) {
      throw ParseError(
          "expected carrier 'chain:<m>' or 'int'", 0, std::string(text));
    }
    return finite_chain(parse_coord(
        text.substr(prefix.size()), prefix.size(), "chain size"));
  }

  Ordering Carrier::compare(CarrierPoint a, CarrierPoint b) const {
    if (!contains(a) || !contains(b)) {
      throw UsageError("cannot compare points " + std::to_string(a.coord)
                       + " and " + std::to_string(b.coord) + " in carrier "
                       + to_string());
    }
    if (a < b) {
      return Ordering::less;
    }
    return a == b ? Ordering::equal : Ordering::greater;
  }

  std::optional<Window> Carrier::full_window() const noexcept {
    if (!is_finite()) {
      return std::nullopt;
    }
    return Window{0, _size - 1};
  }

  std::string Carrier::to_string() const {
    return is_finite() ? "chain:" + std::to_string(_size) : "int";
  }

  ////////////////////////////////////////////////////////////////////////
  // KSubsets
  ////////////////////////////////////////////////////////////////////////

  KSubsets::iterator::iterator(Window w, std::size_t k) : _window(w) {
    if (k > w.size()) {
      return;
    }
    _current.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      _current.emplace_back(w.lo + static_cast<std::int64_t>(i));
    }
    _done = false;
  }

  KSubsets::iterator& KSubsets::iterator::operator++() {
    // Find the rightmost position that can still advance; position i can
    // hold at most hi - (k - 1 - i).
    auto const k = static_cast<std::int64_t>(_current.size());
    auto       i = k - 1;
    while (i >= 0 && _current[i].coord == _window.hi - (k - 1 - i)) {
      --i;
    }
    if (i < 0) {
      _done = true;
      _current.clear();
      return *this;
    }
    ++_current[i].coord;
    for (auto j = i + 1; j < k; ++j) {
      _current[j].coord = _current[j - 1].coord + 1;
    }
    return *this;
  }

  std::vector<PointSeq> KSubsets::collect() const {
    std::vector<PointSeq> out;
    for (auto const& s : *this) {
      out.push_back(s);
    }
    return out;
  }

  KSubsets k_subsets(Carrier const&               carrier,
                     std::size_t                  k,
                     std::optional<Window> const& window) {
    if (!window) {
      if (!carrier.is_finite()) {
        throw UsageError("k_subsets on the integer line needs a window");
      }
      return KSubsets(*carrier.full_window(), k);
    }
    if (!carrier.contains(window->lo) || !carrier.contains(window->hi)) {
      throw UsageError("window " + window->to_string() + " is not inside "
                       + carrier.to_string());
    }
    return KSubsets(*window, k);
  }

  std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) {
      return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
      // result * (n - k + i) / i is exact at every step
      result = result * (n - k + i) / i;
      if (result > std::numeric_limits<std::uint64_t>::max()) {
        return std::numeric_limits<std::uint64_t>::max();
      }
    }
    return static_cast<std::uint64_t>(result);
  }

}  // namespace oi
