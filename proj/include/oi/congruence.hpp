// Congruences on an enumerated semigroup: Rees congruences, pair closure,
// the full congruence lattice, Rees quotients, and the collapse chain that
// drives an idempotent down to zero.

#ifndef OI_CONGRUENCE_HPP_
#define OI_CONGRUENCE_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "oi/carrier.hpp"
#include "oi/parallel.hpp"
#include "oi/pariso.hpp"
#include "oi/semigroup.hpp"

namespace oi {

  //! Union-find over element indices with path halving and union by size.
  class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n);

    std::size_t find(std::size_t x);
    //! True if x and y were in different sets.
    bool        unite(std::size_t x, std::size_t y);
    std::size_t size() const noexcept {
      return _parent.size();
    }

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _weight;
  };

  //! A partition of an enumerated semigroup that is compatible with
  //! multiplication on both sides. Stored canonically: label(i) is the
  //! smallest index in i's block, so two congruences on the same semigroup
  //! are equal iff their label vectors are.
  class Congruence {
   public:
    //! Validates `blocks` (a partition of every index) and compatibility;
    //! throws UsageError otherwise.
    static Congruence from_blocks(EnumeratedSemigroup const&             s,
                                  std::vector<std::vector<std::size_t>> const& blocks);

    //! Canonicalises a union-find that is already known to be compatible.
    static Congruence from_closed(DisjointSets& sets);

    static Congruence diagonal(std::size_t n);
    static Congruence universal(std::size_t n);

    std::size_t size() const noexcept {
      return _label.size();
    }

    std::size_t label(std::size_t i) const {
      return _label[i];
    }

    bool related(std::size_t i, std::size_t j) const {
      return _label[i] == _label[j];
    }

    std::size_t block_count() const noexcept;

    //! Blocks in order of their smallest element, each sorted.
    std::vector<std::vector<std::size_t>> blocks() const;

    //! Every related pair (x, y) has (cx, cy) and (xc, yc) related for all
    //! c, checked pair by pair.
    bool is_compatible(EnumeratedSemigroup const& s) const;

    //! Every block of *this is inside a block of `that`.
    bool refines(Congruence const& that) const;

    bool operator==(Congruence const&) const = default;
    auto operator<=>(Congruence const&) const = default;

   private:
    explicit Congruence(std::vector<std::size_t> label)
        : _label(std::move(label)) {}

    std::vector<std::size_t> _label;
  };

  //! (I_k × I_k) ∪ Δ. Throws UsageError unless k <= max rank.
  Congruence rees_congruence(EnumeratedSemigroup const& s, std::size_t k);

  //! Smallest congruence containing all `pairs`, by fixpoint closure: for
  //! every merged pair (x, y) and every generator g of s, merge (gx, gy) and
  //! (xg, yg).
  Congruence generated_congruence(
      EnumeratedSemigroup const&                            s,
      std::vector<std::pair<std::size_t, std::size_t>> const& pairs);

  //! Smallest congruence containing (a, b). Throws UsageError if a or b is
  //! not an element of s.
  Congruence principal_congruence(EnumeratedSemigroup const& s,
                                  PartialOrderIso const&     a,
                                  PartialOrderIso const&     b);

  Congruence principal_congruence(EnumeratedSemigroup const& s,
                                  std::size_t                a,
                                  std::size_t                b);

  //! Join in the congruence lattice.
  Congruence join(EnumeratedSemigroup const& s,
                  Congruence const&          x,
                  Congruence const&          y);

  //! The whole congruence lattice: Δ, every principal congruence, and joins
  //! of those to a fixpoint. Sorted with finer congruences (more blocks)
  //! first. Throws SizeError when s has more than `cap` elements.
  std::vector<Congruence> all_congruences(EnumeratedSemigroup const& s,
                                          ScanOptions                opts = {},
                                          std::size_t cap = default_cap);

  //! k when c equals (I_k × I_k) ∪ Δ for some k, choosing the least such k
  //! (Δ gives 0); absent otherwise.
  std::optional<std::size_t> is_rees(EnumeratedSemigroup const& s,
                                     Congruence const&          c);

  //! The congruence lattice classified: every member should be Rees, and
  //! there should be one per distinct ideal I_0, ..., I_n'.
  struct LatticeReport {
    std::vector<Congruence>                 congruences;
    std::vector<std::optional<std::size_t>> rees;
    std::size_t                             expected_count = 0;
    bool                                    all_compatible = false;

    bool all_rees() const noexcept;
    bool passed() const noexcept {
      return all_rees() && all_compatible
             && congruences.size() == expected_count;
    }
  };

  LatticeReport check_congruence_lattice(EnumeratedSemigroup const& s,
                                         ScanOptions                opts = {},
                                         std::size_t cap = default_cap);

  //! Principal-congruence laws:
  //! - for a ≠ b, the congruence generated by (a, b) puts every element of
  //!   rank <= max(rank a, rank b) into a's block;
  //! - the congruence generated by (a, 0) contains the Rees congruence of
  //!   I_{rank a};
  //! - for idempotents b < a, every idempotent of collapse_chain(a, b) is
  //!   in a's block of the congruence generated by (a, b), and the chain
  //!   itself is sound.
  struct CongruenceLawReport {
    std::size_t pairs          = 0;
    std::size_t pair_failures  = 0;
    std::size_t zero_pairs     = 0;
    std::size_t zero_failures  = 0;
    std::size_t chains         = 0;
    std::size_t chain_failures = 0;
    //! Set when the unequal pairs were sampled instead of scanned.
    std::optional<std::uint64_t> sample_seed;

    bool passed() const noexcept {
      return pair_failures == 0 && zero_failures == 0 && chain_failures == 0;
    }
  };

  //! Scans every unequal pair unless `max_pairs` is given and smaller than
  //! the number of pairs, in which case that many pairs are drawn with
  //! `seed`.
  CongruenceLawReport
  check_congruence_laws(EnumeratedSemigroup const& s,
                        ScanOptions                opts      = {},
                        std::optional<std::size_t> max_pairs = std::nullopt,
                        std::uint64_t              seed      = 1);

  ////////////////////////////////////////////////////////////////////////
  // Collapse chains
  ////////////////////////////////////////////////////////////////////////

  //! One step of a collapse chain: the connecting isomorphism and the
  //! idempotent it produces, next = iota * current * iota⁻¹.
  struct CollapseStep {
    PartialOrderIso iota;
    PartialOrderIso next;
  };

  //! Witness that identifying an idempotent `alpha` with a strictly smaller
  //! idempotent `beta` forces alpha to be identified with zero.
  //!
  //! `start` is the idempotent of rank(alpha) - 1 the chain begins from: beta
  //! itself when its rank is one less than alpha's, otherwise the identity on
  //! dom alpha minus its largest point outside dom beta (which lies between
  //! beta and alpha). With start = β₁ and β₀ = alpha, step m holds
  //! (ι_m, β_{m+1}) where dom ι_m = dom β_m, ran ι_m = dom β_{m-1} ∖
  //! {max dom β_m}. The chain is empty when beta is zero.
  struct CollapseChain {
    PartialOrderIso           alpha;
    PartialOrderIso           beta;
    PartialOrderIso           start;
    std::vector<CollapseStep> steps;

    //! β_m for m = 0, 1, ..., ending at the last step's `next`.
    std::vector<PartialOrderIso> idempotents() const;
  };

  //! Throws UsageError unless alpha and beta are idempotents lying in
  //! `carrier` with beta strictly below alpha in the natural order.
  CollapseChain collapse_chain(Carrier const&         carrier,
                               PartialOrderIso const& alpha,
                               PartialOrderIso const& beta);

  //! Names of the conditions that fail on `chain`, empty when it is sound:
  //! for every step m,
  //!   (1) ι_m β_{m-1} ι_m⁻¹ = β_m and ι_m β_m ι_m⁻¹ ≠ β_m,
  //!   (2) β_{m+1} = ι_m β_m ι_m⁻¹ and is idempotent,
  //!   (3) β_{m+1} ≼ β_m,
  //!   (4) rank β_{m+1} = k - m - 1 with k = rank alpha,
  //! and the chain ends at zero.
  std::vector<std::string> collapse_chain_failures(CollapseChain const& chain);

  ////////////////////////////////////////////////////////////////////////
  // Rees quotients
  ////////////////////////////////////////////////////////////////////////

  //! An element of S / I_k: the zero (the class of I_k) or an element of
  //! rank > k standing for itself.
  class QuotientElement {
   public:
    QuotientElement() = default;  // zero
    explicit QuotientElement(PartialOrderIso lifted)
        : _lifted(std::move(lifted)) {}

    bool is_zero() const noexcept {
      return !_lifted.has_value();
    }

    //! The unique preimage; throws UsageError on the zero.
    PartialOrderIso const& lifted() const;

    std::string to_string() const;

    bool operator==(QuotientElement const&) const = default;

   private:
    std::optional<PartialOrderIso> _lifted;
  };

  //! The Rees quotient of a BoundedSemigroup by I_k. Works over finite and
  //! infinite carriers; products are computed on demand as compose followed
  //! by collapsing anything of rank <= k to zero.
  class ReesQuotient {
   public:
    //! Throws UsageError unless k <= max rank.
    ReesQuotient(BoundedSemigroup base, std::size_t k);

    BoundedSemigroup const& base() const noexcept {
      return _base;
    }

    std::size_t threshold() const noexcept {
      return _k;
    }

    //! The canonical map S -> S / I_k. Throws UsageError for a non-element.
    QuotientElement project(PartialOrderIso const& a) const;

    QuotientElement multiply(QuotientElement const& x,
                             QuotientElement const& y) const;

    //! Zero first, then the lifted elements in (rank, dom, ran) order.
    //! Throws like EnumeratedSemigroup.
    std::vector<QuotientElement> enumerate(std::size_t cap = default_cap) const;

   private:
    BoundedSemigroup _base;
    std::size_t      _k;
  };

  struct HomomorphismReport {
    std::size_t products_checked = 0;
    std::size_t failures         = 0;

    bool passed() const noexcept {
      return failures == 0;
    }
  };

  //! Checks h(ab) = h(a)h(b) for every pair of elements of s.
  HomomorphismReport verify_homomorphism(EnumeratedSemigroup const& s,
                                         ReesQuotient const&        q,
                                         ScanOptions                opts = {});

}  // namespace oi

#endif  // OI_CONGRUENCE_HPP_
