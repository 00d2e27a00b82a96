#include "oi/pariso.hpp"

#include <algorithm>  // for sort, unique, lexicographical_compare_three_way
#include <cctype>     // for isdigit, isspace
#include <charconv>   // for from_chars

#include "oi/error.hpp"

namespace oi {

  namespace {
    bool strictly_increasing(PointSeq const& s) noexcept {
      return std::adjacent_find(s.cbegin(), s.cend(), std::greater_equal<>())
             == s.cend();
    }

    std::string join(std::span<CarrierPoint const> s) {
      std::string out;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += std::to_string(s[i].coord);
      }
      return out;
    }

    PointSeq sorted_unique(PointSeq points) {
      std::sort(points.begin(), points.end());
      points.erase(std::unique(points.begin(), points.end()), points.end());
      return points;
    }

    // Recursive-descent reader for `[x1,...->y1,...]`.
    class ElementReader {
     public:
      explicit ElementReader(std::string_view text) : _text(text) {}

      PartialOrderIso read() {
        expect('[');
        skip_space();
        if (peek() == ']') {
          ++_pos;
          finish();
          return PartialOrderIso();
        }
        PointSeq dom = read_list("->");
        expect_arrow();
        PointSeq ran = read_list("]");
        expect(']');
        finish();
        return PartialOrderIso::make(std::move(dom), std::move(ran));
      }

     private:
      char peek() const noexcept {
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      void skip_space() noexcept {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        // the token is a signed run of word characters, or else one
        // character
        std::size_t end = _pos;
        if (end < _text.size() && (_text[end] == '-' || _text[end] == '+')) {
          ++end;
        }
        while (end < _text.size()
               && std::isalnum(static_cast<unsigned char>(_text[end]))) {
          ++end;
        }
        if (end == _pos && end < _text.size()) {
          ++end;
        }
        throw ParseError(
            what, _pos, std::string(_text.substr(_pos, end - _pos)));
      }

      void expect(char c) {
        skip_space();
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      void expect_arrow() {
        skip_space();
        if (_text.substr(_pos, 2) != "->") {
          fail("expected '->' or ','");
        }
        _pos += 2;
      }

      void finish() {
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected trailing input");
        }
      }

      // An empty list is allowed only when the terminator follows at once,
      // which gives the `[->]` spelling of zero.
      PointSeq read_list(std::string_view terminator) {
        PointSeq out;
        skip_space();
        if (_text.substr(_pos, terminator.size()) == terminator) {
          return out;
        }
        while (true) {
          out.emplace_back(read_int());
          skip_space();
          if (peek() != ',') {
            return out;
          }
          ++_pos;
        }
      }

      std::int64_t read_int() {
        skip_space();
        std::size_t start = _pos;
        if (peek() == '-' || peek() == '+') {
          ++_pos;
        }
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
        std::int64_t value = 0;
        auto token = _text.substr(start, _pos - start);
        if (!token.empty() && token.front() == '+') {
          token.remove_prefix(1);
        }
        auto [ptr, ec]
            = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc()
            || ptr != token.data() + token.size()) {
          _pos = start;
          fail("expected an integer coordinate");
        }
        return value;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  PartialOrderIso PartialOrderIso::make(PointSeq dom, PointSeq ran) {
    if (dom.size() != ran.size()) {
      throw RankError("domain has " + std::to_string(dom.size())
                      + " points but range has " + std::to_string(ran.size()));
    }
    if (!strictly_increasing(dom)) {
      throw OrderError("domain [" + join(dom) + "] is not strictly increasing");
    }
    if (!strictly_increasing(ran)) {
      throw OrderError("range [" + join(ran) + "] is not strictly increasing");
    }
    return PartialOrderIso(std::move(dom), std::move(ran));
  }

  PartialOrderIso PartialOrderIso::identity_on(PointSeq points) {
    points = sorted_unique(std::move(points));
    PointSeq copy = points;
    return PartialOrderIso(std::move(points), std::move(copy));
  }

  std::optional<CarrierPoint>
  PartialOrderIso::apply(CarrierPoint x) const noexcept {
    auto it = std::lower_bound(_dom.cbegin(), _dom.cend(), x);
    if (it == _dom.cend() || *it != x) {
      return std::nullopt;
    }
    return _ran[static_cast<std::size_t>(it - _dom.cbegin())];
  }

  bool PartialOrderIso::lies_in(Carrier const& c) const noexcept {
    if (!c.is_finite() || is_zero()) {
      return true;
    }
    // sorted, so the extremes decide
    return c.contains(_dom.front()) && c.contains(_dom.back())
           && c.contains(_ran.front()) && c.contains(_ran.back());
  }

  std::strong_ordering
  PartialOrderIso::operator<=>(PartialOrderIso const& that) const {
    if (auto c = rank() <=> that.rank(); c != 0) {
      return c;
    }
    if (auto c = std::lexicographical_compare_three_way(
            _dom.cbegin(), _dom.cend(), that._dom.cbegin(), that._dom.cend());
        c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        _ran.cbegin(), _ran.cend(), that._ran.cbegin(), that._ran.cend());
  }

  std::string PartialOrderIso::to_string() const {
    if (is_zero()) {
      return "[]";
    }
    return "[" + join(_dom) + "->" + join(_ran) + "]";
  }

  PartialOrderIso PartialOrderIso::parse(std::string_view text) {
    return ElementReader(text).read();
  }

  std::ostream& operator<<(std::ostream& os, PartialOrderIso const& a) {
    return os << a.to_string();
  }

  PartialOrderIso compose(PartialOrderIso const& a, PartialOrderIso const& b) {
    // Two-pointer intersection of ran a with dom b. Both are sorted, so the
    // kept domain points and their images come out sorted as well.
    PointSeq    dom, ran;
    std::size_t i = 0, j = 0;
    while (i < a._ran.size() && j < b._dom.size()) {
      if (a._ran[i] < b._dom[j]) {
        ++i;
      } else if (b._dom[j] < a._ran[i]) {
        ++j;
      } else {
        dom.push_back(a._dom[i]);
        ran.push_back(b._ran[j]);
        ++i;
        ++j;
      }
    }
    return PartialOrderIso(std::move(dom), std::move(ran));
  }

  PartialOrderIso inverse(PartialOrderIso const& a) {
    return PartialOrderIso(a._ran, a._dom);
  }

  bool natural_leq(PartialOrderIso const& a, PartialOrderIso const& b) {
    for (std::size_t i = 0; i < a.rank(); ++i) {
      auto image = b.apply(a.dom()[i]);
      if (!image || *image != a.ran()[i]) {
        return false;
      }
    }
    return true;
  }

  PartialOrderIso restrict(PartialOrderIso const& a, PointSeq points) {
    points = sorted_unique(std::move(points));
    PointSeq dom, ran;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      if (std::binary_search(points.cbegin(), points.cend(), a._dom[i])) {
        dom.push_back(a._dom[i]);
        ran.push_back(a._ran[i]);
      }
    }
    return PartialOrderIso(std::move(dom), std::move(ran));
  }

}  // namespace oi

std::size_t std::hash<oi::PartialOrderIso>::operator()(
    oi::PartialOrderIso const& a) const noexcept {
  // boost::hash_combine mixing
  std::size_t seed = a.rank();
  auto        mix  = [&seed](oi::CarrierPoint p) {
    seed ^= std::hash<std::int64_t>()(p.coord) + 0x9e3779b97f4a7c15ULL
            + (seed << 6) + (seed >> 2);
  };
  for (auto p : a.dom()) {
    mix(p);
  }
  for (auto p : a.ran()) {
    mix(p);
  }
  return seed;
}
