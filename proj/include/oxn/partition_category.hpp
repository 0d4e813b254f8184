// The category of ordered partitions Pi_o(X_n).  The object standing for a
// partition pi is the set of order-preserving maps pi -> X_n; a morphism
// pi_1 -> pi_2 is precomposition with an order-preserving block map
// eta : pi_2 -> pi_1, and is stored as eta.

#ifndef OXN_PARTITION_CATEGORY_HPP_
#define OXN_PARTITION_CATEGORY_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oxn/category.hpp"
#include "oxn/chain.hpp"
#include "oxn/ideal_categories.hpp"

namespace oxn {

  struct PiObject {
    OrderedPartition pi;

    auto operator<=>(PiObject const&) const = default;
  };

  //! eta* : source -> target with eta : target.pi -> source.pi.
  struct PiMorphism {
    BlockMap eta;

    [[nodiscard]] PiObject source() const {
      return {eta.to()};
    }
    [[nodiscard]] PiObject target() const {
      return {eta.from()};
    }

    auto operator<=>(PiMorphism const&) const = default;
  };

  //! An order-preserving map from the blocks of pi to X_n.
  struct BarElement {
    OrderedPartition   pi;
    std::vector<Point> values;

    auto operator<=>(BarElement const&) const = default;
  };

  //! Every order-preserving map pi -> X_n.
  std::vector<BarElement> bar_elements(OrderedPartition const& pi);

  //! alpha eta*: the block of target.pi with index i goes to
  //! alpha(eta(i)).  Throws DomainError if alpha lives on another partition.
  BarElement apply(PiMorphism const& m, BarElement const& alpha);

  //! m1 then m2.  Throws CompositionError unless m1's target is m2's source.
  PiMorphism pi_compose(PiMorphism const& m1, PiMorphism const& m2);

  //! True when every block of q is contained in a block of p.
  bool pi_leq(PiObject const& p, PiObject const& q);

  //! Inclusion p -> q (the containment q.pi -> p.pi) and retraction q -> p
  //! (each block of p goes to the block of q holding its least point).
  //! Throws DomainError unless pi_leq(p, q).
  std::pair<PiMorphism, PiMorphism> pi_inclusion_and_retraction(PiObject const& p,
                                                                PiObject const& q);

  struct PiFactorization {
    //! Fibres of eta, as a coarsening of the target partition.
    OrderedPartition sigma;
    //! The source partition with each stretch of blocks up to an image block
    //! merged into that block; the tail joins the last image block.
    OrderedPartition gamma;
    PiMorphism       retraction;
    PiMorphism       isomorphism;
    PiMorphism       inclusion;
  };

  PiFactorization factorize_pi(PiMorphism const& m);

  class PiCategory {
   public:
    using Object   = PiObject;
    using Morphism = PiMorphism;

    explicit PiCategory(ChainSize n);

    [[nodiscard]] ChainSize chain_size() const noexcept {
      return n_;
    }
    //! Non-identity ordered partitions in increasing order of block sizes.
    [[nodiscard]] std::vector<PiObject> const& objects() const noexcept {
      return objects_;
    }
    [[nodiscard]] std::size_t index_of(PiObject const& a) const;
    [[nodiscard]] std::vector<PiMorphism> hom(PiObject const& a, PiObject const& b) const;

    [[nodiscard]] PiObject source(PiMorphism const& f) const {
      return f.source();
    }
    [[nodiscard]] PiObject target(PiMorphism const& f) const {
      return f.target();
    }
    [[nodiscard]] PiMorphism compose(PiMorphism const& f, PiMorphism const& g) const {
      return pi_compose(f, g);
    }
    [[nodiscard]] PiMorphism identity(PiObject const& a) const {
      return {BlockMap::identity(a.pi)};
    }
    [[nodiscard]] bool is_subobject(PiObject const& a, PiObject const& b) const {
      return pi_leq(a, b);
    }
    [[nodiscard]] PiMorphism inclusion(PiObject const& a, PiObject const& b) const {
      return pi_inclusion_and_retraction(a, b).first;
    }
    [[nodiscard]] PiMorphism retraction(PiObject const& a, PiObject const& b) const {
      return pi_inclusion_and_retraction(a, b).second;
    }
    [[nodiscard]] NormalFactorization<PiMorphism> normal_factorize(PiMorphism const& f) const;
    [[nodiscard]] bool is_isomorphism(PiMorphism const& f) const {
      return f.eta.is_bijective();
    }
    //! idempotent_pi_cone(a, idempotent_for_kernel(a.pi)).
    [[nodiscard]] Cone<PiMorphism> identity_cone(PiObject const& a) const;

    //! The cone with vertex pi whose component at pi_a sends block A_i of pi
    //! to the block of pi_a containing (A_i)u.  Throws ContractError unless u
    //! is constant on every block of pi with value inside that block.
    [[nodiscard]] Cone<PiMorphism> idempotent_pi_cone(PiObject const& pi, OPMap const& u) const;

    [[nodiscard]] std::string label(PiObject const& a) const {
      return to_string(a.pi);
    }
    [[nodiscard]] std::string label(PiMorphism const& f) const {
      return "eta*(" + to_string(f.eta.to()) + " -> " + to_string(f.eta.from()) + ": "
             + to_string(f.eta) + ")";
    }

   private:
    ChainSize             n_;
    std::vector<PiObject> objects_;
  };

  static_assert(CategoryProvider<PiCategory>);

  inline PiObject functor_g(RObject const& a) {
    return {a.kernel};
  }
  inline PiMorphism functor_g(RMorphism const& lambda) {
    return {lambda.eta};
  }

  //! Checks that G is an isomorphism of categories with subobjects.
  FunctorReport check_functor_g(RCategory const& r, PiCategory const& pi, bool exhaustive);

}  // namespace oxn

#endif  // OXN_PARTITION_CATEGORY_HPP_
