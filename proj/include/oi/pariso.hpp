// Finite partial order isomorphisms of a linearly ordered carrier.
//
// An element is stored canonically as two strictly increasing coordinate
// sequences of equal length: the domain and the range. Because both are
// sorted, the i-th domain point maps to the i-th range point, and this is
// the only order isomorphism between the two sets. The empty element is the
// zero of the semigroup.

#ifndef OI_PARISO_HPP_
#define OI_PARISO_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <functional>   // for hash
#include <optional>     // for optional
#include <ostream>      // for ostream
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "oi/carrier.hpp"

namespace oi {

  class PartialOrderIso {
   public:
    //! The zero element.
    PartialOrderIso() = default;

    //! The unique order isomorphism sending dom[i] to ran[i].
    //!
    //! Throws RankError if the lengths differ and OrderError unless both
    //! sequences are strictly increasing. Unsorted input is rejected rather
    //! than sorted, since sorting would re-pair the points.
    static PartialOrderIso make(PointSeq dom, PointSeq ran);

    //! The identity map on `points`, which may be given in any order;
    //! duplicates are ignored.
    static PartialOrderIso identity_on(PointSeq points);

    std::span<CarrierPoint const> dom() const noexcept {
      return _dom;
    }

    std::span<CarrierPoint const> ran() const noexcept {
      return _ran;
    }

    std::size_t rank() const noexcept {
      return _dom.size();
    }

    bool is_zero() const noexcept {
      return _dom.empty();
    }

    //! The image of `x`, or nothing if x is not in the domain.
    std::optional<CarrierPoint> apply(CarrierPoint x) const noexcept;

    bool is_idempotent() const noexcept {
      return _dom == _ran;
    }

    //! Every point of domain and range lies in `c`.
    bool lies_in(Carrier const& c) const noexcept;

    //! Lexicographic on (rank, dom, ran).
    std::strong_ordering operator<=>(PartialOrderIso const& that) const;
    bool operator==(PartialOrderIso const&) const = default;

    //! Text syntax `[x1,x2->y1,y2]`; the zero prints as `[]`.
    std::string to_string() const;

    //! Inverse of to_string. Whitespace between tokens is allowed and the
    //! zero may also be written `[->]`. Throws ParseError naming the
    //! offending token, and RankError/OrderError for ill-formed maps.
    static PartialOrderIso parse(std::string_view text);

   private:
    PartialOrderIso(PointSeq dom, PointSeq ran) noexcept
        : _dom(std::move(dom)), _ran(std::move(ran)) {}

    friend PartialOrderIso compose(PartialOrderIso const&,
                                   PartialOrderIso const&);
    friend PartialOrderIso inverse(PartialOrderIso const&);
    friend PartialOrderIso restrict(PartialOrderIso const&, PointSeq);

    PointSeq _dom;
    PointSeq _ran;
  };

  std::ostream& operator<<(std::ostream& os, PartialOrderIso const& a);

  inline PartialOrderIso make_iso(PointSeq dom, PointSeq ran) {
    return PartialOrderIso::make(std::move(dom), std::move(ran));
  }

  inline PartialOrderIso identity_on(PointSeq points) {
    return PartialOrderIso::identity_on(std::move(points));
  }

  inline std::optional<CarrierPoint> apply(PartialOrderIso const& a,
                                           CarrierPoint           x) noexcept {
    return a.apply(x);
  }

  inline std::size_t rank(PartialOrderIso const& a) noexcept {
    return a.rank();
  }

  inline bool is_idempotent(PartialOrderIso const& a) noexcept {
    return a.is_idempotent();
  }

  //! Composition left to right: x(ab) = (xa)b. The domain of the product is
  //! the set of x in dom a with xa in dom b, so its rank is
  //! |ran a ∩ dom b|.
  PartialOrderIso compose(PartialOrderIso const& a, PartialOrderIso const& b);

  inline PartialOrderIso compose(PartialOrderIso const& a,
                                 PartialOrderIso const& b,
                                 PartialOrderIso const& c) {
    return compose(compose(a, b), c);
  }

  //! Swaps domain and range.
  PartialOrderIso inverse(PartialOrderIso const& a);

  //! Natural partial order: dom a ⊆ dom b and b agrees with a there.
  bool natural_leq(PartialOrderIso const& a, PartialOrderIso const& b);

  //! Restriction of `a` to dom a ∩ points; points may be unsorted.
  PartialOrderIso restrict(PartialOrderIso const& a, PointSeq points);

}  // namespace oi

template <>
struct std::hash<oi::PartialOrderIso> {
  std::size_t operator()(oi::PartialOrderIso const& a) const noexcept;
};

#endif  // OI_PARISO_HPP_
