// The chain X_n = {1 < 2 < ... < n}, order-preserving self-maps of it, subsets,
// ordered partitions and order-preserving maps between subsets.
//
// Maps are written on the right of their argument and compose from left to
// right: compose(f, g) is "first f, then g".

#ifndef OXN_CHAIN_HPP_
#define OXN_CHAIN_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oxn {

  //! A point of the chain; points are numbered from 1.
  using Point = int;

  //! Length n of the chain, restricted to 3 <= n <= 12.
  class ChainSize {
   public:
    static constexpr int min = 3;
    static constexpr int max = 12;

    //! Throws DomainError when n is outside [min, max].
    explicit ChainSize(int n);

    [[nodiscard]] int value() const noexcept {
      return value_;
    }

    auto operator<=>(ChainSize const&) const = default;

   private:
    int value_;
  };

  ////////////////////////////////////////////////////////////////////////
  // OPMap
  ////////////////////////////////////////////////////////////////////////

  //! A total order-preserving map X_n -> X_n, stored by its images.
  //!
  //! The identity is representable so that identities of the categories can
  //! be expressed; membership of the semigroup OX_n is the separate
  //! predicate is_singular().
  class OPMap {
   public:
    //! images[x - 1] is the image of x.  Throws DomainError unless the length
    //! is a valid ChainSize, every value lies in 1..n, and the sequence is
    //! weakly increasing.
    explicit OPMap(std::vector<Point> images);

    static OPMap identity(ChainSize n);
    static OPMap constant(ChainSize n, Point value);

    [[nodiscard]] int degree() const noexcept {
      return static_cast<int>(images_.size());
    }

    [[nodiscard]] Point operator()(Point x) const {
      return images_[static_cast<std::size_t>(x - 1)];
    }

    [[nodiscard]] std::vector<Point> const& images() const noexcept {
      return images_;
    }

    //! True unless this is the identity map.
    [[nodiscard]] bool is_singular() const noexcept;
    [[nodiscard]] bool is_idempotent() const noexcept;
    //! Number of distinct values.
    [[nodiscard]] std::size_t rank() const noexcept;

    auto operator<=>(OPMap const&) const = default;

   private:
    std::vector<Point> images_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  //! A nonempty subset of X_n, stored as its strictly increasing elements.
  class Subset {
   public:
    Subset(int n, std::vector<Point> elements);

    static Subset full(ChainSize n);
    static Subset singleton(ChainSize n, Point x);

    [[nodiscard]] int chain_size() const noexcept {
      return n_;
    }
    [[nodiscard]] std::vector<Point> const& elements() const noexcept {
      return elements_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return elements_.size();
    }
    [[nodiscard]] Point operator[](std::size_t i) const {
      return elements_[i];
    }
    [[nodiscard]] Point min() const noexcept {
      return elements_.front();
    }
    [[nodiscard]] Point max() const noexcept {
      return elements_.back();
    }

    [[nodiscard]] bool contains(Point x) const noexcept;
    //! Position of x among the elements; x must be contained.
    [[nodiscard]] std::size_t position(Point x) const;
    [[nodiscard]] bool is_proper() const noexcept {
      return elements_.size() < static_cast<std::size_t>(n_);
    }
    [[nodiscard]] bool is_subset_of(Subset const& other) const noexcept;

    auto operator<=>(Subset const&) const = default;

   private:
    int                n_;
    std::vector<Point> elements_;
  };

  ////////////////////////////////////////////////////////////////////////
  // OrderedPartition
  ////////////////////////////////////////////////////////////////////////

  //! A partition of X_n into consecutive intervals, stored as block sizes.
  //! Block i (0-based) is the interval first(i)..last(i).
  class OrderedPartition {
   public:
    //! Throws DomainError unless n is a valid ChainSize and the sizes are
    //! positive with sum n.
    OrderedPartition(int n, std::vector<int> block_sizes);

    //! The partition into singletons.
    static OrderedPartition discrete(ChainSize n);
    //! Builds the partition whose blocks are the classes of a labelling
    //! that is constant exactly on consecutive runs; labels[x - 1] is the
    //! label of x.  Throws DomainError if some class is not an interval.
    static OrderedPartition from_labels(std::vector<int> const& labels);

    [[nodiscard]] int chain_size() const noexcept {
      return n_;
    }
    [[nodiscard]] std::vector<int> const& block_sizes() const noexcept {
      return sizes_;
    }
    [[nodiscard]] std::size_t block_count() const noexcept {
      return sizes_.size();
    }
    [[nodiscard]] Point first(std::size_t block) const {
      return starts_[block];
    }
    [[nodiscard]] Point last(std::size_t block) const {
      return starts_[block] + sizes_[block] - 1;
    }
    //! 0-based index of the block containing x.
    [[nodiscard]] std::size_t block_of(Point x) const {
      return block_index_[static_cast<std::size_t>(x - 1)];
    }
    [[nodiscard]] std::vector<Point> block(std::size_t i) const;

    //! True when some block has more than one element.
    [[nodiscard]] bool is_non_identity() const noexcept {
      return sizes_.size() < static_cast<std::size_t>(n_);
    }
    //! True when every block of this partition lies inside a block of
    //! coarser.
    [[nodiscard]] bool refines(OrderedPartition const& coarser) const;

    bool operator==(OrderedPartition const& other) const {
      return n_ == other.n_ && sizes_ == other.sizes_;
    }
    std::strong_ordering operator<=>(OrderedPartition const& other) const {
      if (auto c = n_ <=> other.n_; c != 0) {
        return c;
      }
      return sizes_ <=> other.sizes_;
    }

   private:
    int                      n_;
    std::vector<int>         sizes_;
    std::vector<Point>       starts_;
    std::vector<std::size_t> block_index_;
  };

  ////////////////////////////////////////////////////////////////////////
  // BlockMap
  ////////////////////////////////////////////////////////////////////////

  //! An order-preserving map from the blocks of one ordered partition to the
  //! blocks of another; targets[i] is the (0-based) image of block i.
  class BlockMap {
   public:
    //! Throws DomainError when the partitions live on different chains, a
    //! target is out of range, or the targets are not weakly increasing.
    BlockMap(OrderedPartition from,
             OrderedPartition to,
             std::vector<std::size_t> targets);

    static BlockMap identity(OrderedPartition const& pi);
    //! Sends each block of finer to the block of coarser containing it;
    //! throws DomainError unless finer refines coarser.
    static BlockMap containment(OrderedPartition const& finer,
                                OrderedPartition const& coarser);

    [[nodiscard]] OrderedPartition const& from() const noexcept {
      return from_;
    }
    [[nodiscard]] OrderedPartition const& to() const noexcept {
      return to_;
    }
    [[nodiscard]] std::vector<std::size_t> const& targets() const noexcept {
      return targets_;
    }
    [[nodiscard]] std::size_t operator()(std::size_t block) const {
      return targets_[block];
    }
    [[nodiscard]] bool is_bijective() const noexcept;

    auto operator<=>(BlockMap const&) const = default;

   private:
    OrderedPartition         from_;
    OrderedPartition         to_;
    std::vector<std::size_t> targets_;
  };

  ////////////////////////////////////////////////////////////////////////
  // SubMap
  ////////////////////////////////////////////////////////////////////////

  //! An order-preserving map from one subset of X_n into another.
  class SubMap {
   public:
    //! values[i] is the image of domain[i].  Throws DomainError when the
    //! chains differ, a value lies outside the codomain, or the values are
    //! not weakly increasing.
    SubMap(Subset domain, Subset codomain, std::vector<Point> values);

    static SubMap identity(Subset const& a);
    //! The inclusion of sub into super; throws DomainError unless
    //! sub is contained in super.
    static SubMap inclusion(Subset const& sub, Subset const& super);

    [[nodiscard]] Subset const& domain() const noexcept {
      return domain_;
    }
    [[nodiscard]] Subset const& codomain() const noexcept {
      return codomain_;
    }
    [[nodiscard]] std::vector<Point> const& values() const noexcept {
      return values_;
    }
    //! Image of a point of the domain.
    [[nodiscard]] Point operator()(Point x) const;

    [[nodiscard]] Subset image() const;
    [[nodiscard]] bool   is_injective() const noexcept;
    [[nodiscard]] bool   is_bijective() const noexcept;
    [[nodiscard]] bool   is_identity() const noexcept;

    auto operator<=>(SubMap const&) const = default;

   private:
    Subset             domain_;
    Subset             codomain_;
    std::vector<Point> values_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  enum class GreenRelation { R, L, H, J };

  //! First f, then g.  Throws DimensionError on mismatched degrees.
  OPMap compose(OPMap const& f, OPMap const& g);

  //! First f, then g.  Throws CompositionError unless f's codomain equals
  //! g's domain.
  SubMap compose(SubMap const& f, SubMap const& g);

  //! First f, then g.  Throws CompositionError unless f.to() == g.from().
  BlockMap compose(BlockMap const& f, BlockMap const& g);

  Subset           image(OPMap const& f);
  OrderedPartition kernel(OPMap const& f);

  //! Green's relations in OX_n, via kernels (R), images (L), equality (H)
  //! and rank (J).
  bool green(OPMap const& f, OPMap const& g, GreenRelation relation);

  //! The elements of OX_n in lexicographic order of image sequences.
  std::vector<OPMap> enumerate_oxn(ChainSize n);

  //! The idempotent with image A that sends each point to the least element
  //! of A at or above it (points above max A go to max A).  Throws
  //! DomainError when A is the whole chain.
  OPMap idempotent_for_image(Subset const& a);

  //! The idempotent whose kernel is pi and whose image is the set of block
  //! minima.  Throws DomainError when pi is the discrete partition.
  OPMap idempotent_for_kernel(OrderedPartition const& pi);

  //! The retraction of a onto sub: points of sub are fixed, any other point
  //! goes to the nearest element of sub below it, or to min(sub) if there is
  //! none.  Throws DomainError unless sub is contained in a.
  SubMap retraction_for_inclusion(Subset const& sub, Subset const& a);

  //! The two-block step idempotent: x -> x_i for x <= x_i and x -> x_i + 1
  //! otherwise.  Throws DomainError unless 1 <= x_i < n.
  OPMap separator_idempotent(Point x_i, ChainSize n);

  //! Restriction of f to a, with codomain the image of the restriction.
  SubMap restrict(OPMap const& f, Subset const& a);
  //! Restriction of f to a with a declared codomain; throws DomainError if
  //! some value escapes it.
  SubMap restrict(OPMap const& f, Subset const& a, Subset const& codomain);

  ////////////////////////////////////////////////////////////////////////
  // Literals
  ////////////////////////////////////////////////////////////////////////

  //! "[a1,...,an]"
  std::string to_string(OPMap const& f);
  //! "(k1,...,km)"
  std::string to_string(OrderedPartition const& pi);
  //! "{x1,...,xk}"
  std::string to_string(Subset const& a);
  //! "{1,3} -> {2,3}: [2,3]"
  std::string to_string(SubMap const& f);
  //! "[j1,...,jm]" with 1-based block indices
  std::string to_string(BlockMap const& eta);
  std::string to_string(GreenRelation relation);

  //! Integer list literal with the given brackets, e.g. "[1, 2,3]".
  std::vector<int> parse_int_list(std::string_view text, char open, char close);
  OPMap            parse_opmap(std::string_view text);
  OrderedPartition parse_partition(std::string_view text);
  Subset           parse_subset(int n, std::string_view text);
  GreenRelation    parse_green_relation(std::string_view text);

}  // namespace oxn

#endif  // OXN_CHAIN_HPP_
