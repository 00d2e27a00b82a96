// The semigroup of partial order isomorphisms of rank at most n over a
// carrier: enumeration, Green's relations, egg-box diagrams, ideals and
// stability.
//
// Green's relations come in two flavours. `green` uses the closed-form
// characterisations (R: equal domains, L: equal ranges, H: equality,
// D and J: equal rank). `GreenOracle` evaluates the definitions directly by
// materialising principal one- and two-sided ideals of an enumerated
// semigroup, and does not look at domains, ranges or ranks at all.

#ifndef OI_SEMIGROUP_HPP_
#define OI_SEMIGROUP_HPP_

#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t, uint32_t
#include <optional>       // for optional
#include <span>           // for span
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include <boost/dynamic_bitset.hpp>

#include "oi/carrier.hpp"
#include "oi/parallel.hpp"
#include "oi/pariso.hpp"

namespace oi {

  //! A subset of an enumerated semigroup, indexed by element position.
  using ElementSet = boost::dynamic_bitset<>;

  inline constexpr std::size_t default_cap = 20000;

  //! The default cap, or the value of the OI_CAP environment variable when
  //! it holds a positive integer.
  std::size_t cap_from_environment();

  //! Handle for the semigroup of all elements of rank <= max_rank whose
  //! points lie in the carrier.
  class BoundedSemigroup {
   public:
    //! Throws UsageError if max_rank is 0.
    BoundedSemigroup(Carrier carrier, std::size_t max_rank);

    Carrier const& carrier() const noexcept {
      return _carrier;
    }

    std::size_t max_rank() const noexcept {
      return _max_rank;
    }

    //! min(n, m) on a chain of m points, n otherwise. No element has a
    //! larger rank.
    std::size_t effective_rank() const noexcept;

    bool contains(PartialOrderIso const& a) const noexcept {
      return a.rank() <= _max_rank && a.lies_in(_carrier);
    }

    //! Sum over k <= min(n, m) of C(m, k)^2, saturating; absent for the
    //! integer line.
    std::optional<std::uint64_t> order() const noexcept;

    std::string to_string() const;

   private:
    Carrier     _carrier;
    std::size_t _max_rank;
  };

  //! All elements of a finite BoundedSemigroup, sorted by (rank, dom, ran),
  //! with index lookup and products by index. Products of small semigroups
  //! come from a precomputed table.
  class EnumeratedSemigroup {
   public:
    //! Throws UnsupportedError on an infinite carrier and SizeError when the
    //! semigroup has more than `cap` elements.
    explicit EnumeratedSemigroup(BoundedSemigroup const& s,
                                 std::size_t             cap = default_cap);

    BoundedSemigroup const& handle() const noexcept {
      return _handle;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::span<PartialOrderIso const> elements() const noexcept {
      return _elements;
    }

    PartialOrderIso const& at(std::size_t i) const {
      return _elements.at(i);
    }

    std::size_t rank_of(std::size_t i) const {
      return _elements[i].rank();
    }

    std::optional<std::size_t> index_of(PartialOrderIso const& a) const;

    //! Index of at(i) * at(j).
    std::size_t product(std::size_t i, std::size_t j) const;

    //! The zero is always the first element.
    static constexpr std::size_t zero_index() noexcept {
      return 0;
    }

    ElementSet empty_set() const {
      return ElementSet(size());
    }

    //! Indices of a generating set: every element is a product of these.
    std::span<std::size_t const> generators() const noexcept {
      return _generators;
    }

   private:
    void find_generators();

    static constexpr std::size_t table_limit = 2048;

    BoundedSemigroup                                 _handle;
    std::vector<PartialOrderIso>                     _elements;
    std::unordered_map<PartialOrderIso, std::size_t> _index;
    std::vector<std::uint32_t>                       _table;
    std::vector<std::size_t>                         _generators;
  };

  inline EnumeratedSemigroup enumerate(BoundedSemigroup const& s,
                                       std::size_t cap = default_cap) {
    return EnumeratedSemigroup(s, cap);
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  enum class GreenRelation { R, L, H, D, J };

  inline constexpr GreenRelation all_green_relations[]
      = {GreenRelation::R,
         GreenRelation::L,
         GreenRelation::H,
         GreenRelation::D,
         GreenRelation::J};

  std::string_view to_string(GreenRelation r) noexcept;

  //! Closed-form Green's relations. Throws UsageError if a or b is not an
  //! element of s.
  bool green(BoundedSemigroup const& s,
             PartialOrderIso const&  a,
             PartialOrderIso const&  b,
             GreenRelation           relation);

  //! Green's relations from first principles over an enumerated semigroup:
  //! aS¹ = bS¹ (R), S¹a = S¹b (L), S¹aS¹ = S¹bS¹ (J), H = R ∩ L, and
  //! D = L∘R (some c with a L c and c R b).
  class GreenOracle {
   public:
    explicit GreenOracle(EnumeratedSemigroup const& s, ScanOptions opts = {});

    bool related(std::size_t a, std::size_t b, GreenRelation relation) const;

    //! aS¹
    ElementSet const& right_ideal(std::size_t a) const {
      return _right[a];
    }
    //! S¹a
    ElementSet const& left_ideal(std::size_t a) const {
      return _left[a];
    }
    //! S¹aS¹
    ElementSet const& two_sided_ideal(std::size_t a) const {
      return _two_sided[a];
    }

   private:
    std::vector<ElementSet>  _right, _left, _two_sided;
    std::vector<std::size_t> _r_class, _l_class;
    // (L-class, R-class) pairs that are inhabited, as l * classes + r
    std::vector<bool> _inhabited;
    std::size_t       _r_classes = 0;
  };

  //! One-off evaluation; builds a GreenOracle, so prefer the class for scans.
  bool green_oracle(EnumeratedSemigroup const& s,
                    PartialOrderIso const&     a,
                    PartialOrderIso const&     b,
                    GreenRelation              relation);

  struct GreenMismatch {
    std::size_t   a;
    std::size_t   b;
    GreenRelation relation;
    bool          fast;
    bool          oracle;
  };

  struct GreenReport {
    std::size_t                pairs_checked = 0;
    std::vector<GreenMismatch> mismatches;
    //! Pairs where L∘R and R∘L disagree under the oracle.
    std::size_t oracle_identity_failures = 0;

    bool passed() const noexcept {
      return mismatches.empty() && oracle_identity_failures == 0;
    }
  };

  //! Compares `green` against the oracle for every ordered pair and every
  //! relation.
  GreenReport compare_green(EnumeratedSemigroup const& s,
                            ScanOptions                opts = {});

  ////////////////////////////////////////////////////////////////////////
  // Egg-box diagrams
  ////////////////////////////////////////////////////////////////////////

  //! One D-class: rows are domains (R-classes), columns are ranges
  //! (L-classes); cell (r, c) lists the elements with that domain and range.
  struct DClassGrid {
    std::size_t                               rank = 0;
    std::vector<PointSeq>                     rows;
    std::vector<PointSeq>                     cols;
    std::vector<std::vector<PartialOrderIso>> cells;  // row-major

    std::vector<PartialOrderIso> const& cell(std::size_t r,
                                             std::size_t c) const {
      return cells[r * cols.size() + c];
    }

    bool all_singletons() const noexcept;
  };

  struct EggBox {
    std::vector<DClassGrid> classes;  // by rank

    bool combinatorial() const noexcept;
  };

  EggBox eggbox(EnumeratedSemigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  //! I_0 ⊂ I_1 ⊂ ... where I_k holds the elements of rank <= k, for k up to
  //! the effective rank.
  struct IdealSeries {
    std::vector<ElementSet> ideals;
  };

  IdealSeries ideal_series(EnumeratedSemigroup const& s);

  //! Brute force: nonempty and closed under multiplication on both sides
  //! by every element.
  bool is_ideal(EnumeratedSemigroup const& s, ElementSet const& set);

  //! Every nonempty two-sided ideal, sorted by size. Ideals are generated
  //! as unions of the principal ideals S¹aS¹ computed by the oracle, closed
  //! under union to a fixpoint; each result is validated with is_ideal.
  std::vector<ElementSet> all_ideals(EnumeratedSemigroup const& s,
                                     ScanOptions                opts = {});

  struct IdealReport {
    std::vector<ElementSet> ideals;
    //! rank threshold k when the ideal equals I_k
    std::vector<std::optional<std::size_t>> series_rank;
    bool                                    all_valid       = false;
    bool                                    matches_series  = false;

    bool passed() const noexcept {
      return all_valid && matches_series;
    }
  };

  IdealReport check_ideals(EnumeratedSemigroup const& s, ScanOptions opts = {});

  ////////////////////////////////////////////////////////////////////////
  // Stability
  ////////////////////////////////////////////////////////////////////////

  enum class Side { right, left };

  struct StabilityViolation {
    std::size_t alpha;
    std::size_t beta;
    //! right: aS¹ ⊆ baS¹; left: S¹a ⊆ S¹ab
    Side side;
    bool ideals_equal;
    bool identity_holds;  // a = ba (right) or a = ab (left)
  };

  struct StabilityReport {
    std::size_t                     pairs_checked    = 0;
    std::size_t                     right_inclusions = 0;
    std::size_t                     left_inclusions  = 0;
    std::vector<StabilityViolation> violations;

    bool passed() const noexcept {
      return violations.empty();
    }
  };

  //! For every ordered pair (a, b): if aS¹ ⊆ baS¹ then aS¹ = baS¹ and
  //! a = ba; if S¹a ⊆ S¹ab then S¹a = S¹ab and a = ab.
  StabilityReport check_stability(EnumeratedSemigroup const& s,
                                  ScanOptions                opts = {});

  ////////////////////////////////////////////////////////////////////////
  // Element algebra laws
  ////////////////////////////////////////////////////////////////////////

  //! Failure counts for the inverse-semigroup laws.
  struct LawReport {
    std::size_t checks             = 0;
    std::size_t associativity      = 0;
    std::size_t inverse            = 0;  // aa⁻¹a = a, a⁻¹aa⁻¹ = a⁻¹, aa⁻¹ = 1_dom
    std::size_t semilattice        = 0;  // ef = fe = 1_{dom e ∩ dom f}
    std::size_t natural_order      = 0;  // a ≼ b ⇔ a ⊆ b ⇔ a = be
    std::size_t order_preservation = 0;

    std::size_t failures() const noexcept {
      return associativity + inverse + semilattice + natural_order
             + order_preservation;
    }

    bool passed() const noexcept {
      return failures() == 0;
    }
  };

  //! Every law over every element, pair and triple of s. The natural order
  //! is compared against an explicit search over the idempotents of s.
  LawReport check_algebra_laws(EnumeratedSemigroup const& s,
                               ScanOptions                opts = {});

  //! The same laws on `triples` seeded random triples of rank <= max_rank
  //! inside `window`. Half of the natural-order probes are restrictions, so
  //! both sides of the equivalence are exercised.
  LawReport check_random_algebra_laws(Window        window,
                                      std::size_t   max_rank,
                                      std::uint64_t seed,
                                      std::size_t   triples);

}  // namespace oi

#endif  // OI_SEMIGROUP_HPP_
