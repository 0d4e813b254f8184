// The principal left ideal category L(OX_n) and the principal right ideal
// category R(OX_n), built from the semigroup OX_n itself.
//
// L(OX_n): the ideal S e depends only on the image A of the idempotent e, so
// objects are proper subsets A.  A morphism rho(e, u, f) : S e -> S f with
// u in e S f is determined by the restriction of u to im(e), and is stored
// in that canonical form.
//
// R(OX_n): the ideal e S depends only on ker e, so objects are non-identity
// ordered partitions.  A morphism lambda(e, v, f) : e S -> f S with v in f S e
// is determined by the block map ker f -> ker e sending the class of x to
// the class of e containing (x)v, and is stored in that form.

#ifndef OXN_IDEAL_CATEGORIES_HPP_
#define OXN_IDEAL_CATEGORIES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "oxn/category.hpp"
#include "oxn/chain.hpp"

namespace oxn {

  ////////////////////////////////////////////////////////////////////////
  // L(OX_n)
  ////////////////////////////////////////////////////////////////////////

  struct LObject {
    Subset image;

    auto operator<=>(LObject const&) const = default;
  };

  //! rho(A -> B), stored as the restriction A -> B.
  struct LMorphism {
    SubMap action;

    [[nodiscard]] LObject source() const {
      return {action.domain()};
    }
    [[nodiscard]] LObject target() const {
      return {action.codomain()};
    }

    auto operator<=>(LMorphism const&) const = default;
  };

  //! Canonical form of rho(e_a, u, e_b).  Throws ContractError unless e_a and
  //! e_b are singular idempotents and e_a u = u = u e_b.
  LMorphism l_morphism_from_triple(OPMap const& e_a, OPMap const& u, OPMap const& e_b);

  //! Throws CompositionError unless the target of first is the source of
  //! second.
  LMorphism l_compose(LMorphism const& first, LMorphism const& second);

  //! A semigroup element u = e_A u realising rho, where e_A is
  //! idempotent_for_image(A).
  OPMap l_representative(LMorphism const& rho);

  //! rho = rho(e, g, g) rho(g, u, h) rho(h, h, f) with g the idempotent of
  //! kernel ker u whose image is the least point of A in each class, and
  //! h = idempotent_for_image(im u).
  NormalFactorization<LMorphism> l_normal_factorize(LMorphism const& rho);

  std::string to_string(LMorphism const& rho);

  class LCategory {
   public:
    using Object   = LObject;
    using Morphism = LMorphism;

    explicit LCategory(ChainSize n);

    [[nodiscard]] ChainSize chain_size() const noexcept {
      return n_;
    }
    //! Proper nonempty subsets in increasing order.
    [[nodiscard]] std::vector<LObject> const& objects() const noexcept {
      return objects_;
    }
    [[nodiscard]] std::size_t index_of(LObject const& a) const;
    //! The canonical forms of rho(e_A, u, e_B) over all u in e_A S e_B.
    [[nodiscard]] std::vector<LMorphism> hom(LObject const& a, LObject const& b) const;

    [[nodiscard]] LObject source(LMorphism const& f) const {
      return f.source();
    }
    [[nodiscard]] LObject target(LMorphism const& f) const {
      return f.target();
    }
    [[nodiscard]] LMorphism compose(LMorphism const& f, LMorphism const& g) const {
      return l_compose(f, g);
    }
    [[nodiscard]] LMorphism identity(LObject const& a) const;
    [[nodiscard]] bool      is_subobject(LObject const& a, LObject const& b) const {
      return a.image.is_subset_of(b.image);
    }
    [[nodiscard]] LMorphism inclusion(LObject const& a, LObject const& b) const;
    //! rho(e_B, e_B e_A, e_A) : S e_B -> S e_A for A contained in B.
    [[nodiscard]] LMorphism retraction(LObject const& a, LObject const& b) const;
    [[nodiscard]] NormalFactorization<LMorphism> normal_factorize(LMorphism const& f) const {
      return l_normal_factorize(f);
    }
    [[nodiscard]] bool is_isomorphism(LMorphism const& f) const {
      return f.action.is_bijective();
    }
    [[nodiscard]] Cone<LMorphism> identity_cone(LObject const& a) const;

    //! rho^alpha(S e) = rho(e, e alpha, f) with f an idempotent of image
    //! im(alpha).  Throws ContractError unless alpha is singular.
    [[nodiscard]] Cone<LMorphism> principal_cone(OPMap const& alpha) const;

    [[nodiscard]] std::string label(LObject const& a) const {
      return to_string(a.image);
    }
    [[nodiscard]] std::string label(LMorphism const& f) const {
      return to_string(f);
    }

    [[nodiscard]] std::vector<OPMap> const& elements() const noexcept {
      return elements_;
    }

   private:
    ChainSize            n_;
    std::vector<LObject> objects_;
    std::vector<OPMap>   elements_;
  };

  ////////////////////////////////////////////////////////////////////////
  // R(OX_n)
  ////////////////////////////////////////////////////////////////////////

  struct RObject {
    OrderedPartition kernel;

    auto operator<=>(RObject const&) const = default;
  };

  //! lambda(pi_e -> pi_f), stored as the block map eta : pi_f -> pi_e.
  struct RMorphism {
    BlockMap eta;

    [[nodiscard]] RObject source() const {
      return {eta.to()};
    }
    [[nodiscard]] RObject target() const {
      return {eta.from()};
    }

    auto operator<=>(RMorphism const&) const = default;
  };

  //! Canonical form of lambda(e, v, f): the block map sending the class of x
  //! in ker f to the class of (x)v in ker e.  Throws ContractError unless e
  //! and f are singular idempotents and f v = v = v e.
  RMorphism r_morphism_from_triple(OPMap const& e, OPMap const& v, OPMap const& f);

  //! Throws CompositionError unless the target of first is the source of
  //! second.  The block map of the result is second.eta then first.eta.
  RMorphism r_compose(RMorphism const& first, RMorphism const& second);

  //! v in f S e realising lambda, with e, f the block-minimum idempotents.
  OPMap r_representative(RMorphism const& lambda);

  //! lambda = lambda(e, g, g) lambda(g, v, h) lambda(h, h, f) with
  //! g = e . idempotent_for_image(im v) (so g <= e and im g = im v) and
  //! h = idempotent_for_kernel(ker v).
  NormalFactorization<RMorphism> r_normal_factorize(RMorphism const& lambda);

  std::string to_string(RMorphism const& lambda);

  class RCategory {
   public:
    using Object   = RObject;
    using Morphism = RMorphism;

    explicit RCategory(ChainSize n);

    [[nodiscard]] ChainSize chain_size() const noexcept {
      return n_;
    }
    //! Non-identity ordered partitions in increasing order of block sizes.
    [[nodiscard]] std::vector<RObject> const& objects() const noexcept {
      return objects_;
    }
    [[nodiscard]] std::size_t index_of(RObject const& a) const;
    //! The canonical forms of lambda(e, v, f) over all v in f S e.
    [[nodiscard]] std::vector<RMorphism> hom(RObject const& a, RObject const& b) const;

    [[nodiscard]] RObject source(RMorphism const& f) const {
      return f.source();
    }
    [[nodiscard]] RObject target(RMorphism const& f) const {
      return f.target();
    }
    [[nodiscard]] RMorphism compose(RMorphism const& f, RMorphism const& g) const {
      return r_compose(f, g);
    }
    [[nodiscard]] RMorphism identity(RObject const& a) const;
    //! e S is contained in f S iff ker f refines ker e.
    [[nodiscard]] bool is_subobject(RObject const& a, RObject const& b) const {
      return b.kernel.refines(a.kernel);
    }
    [[nodiscard]] RMorphism inclusion(RObject const& a, RObject const& b) const;
    //! lambda(e_b, e_a, e_a): each block of a goes to the block of b holding
    //! its least point.
    [[nodiscard]] RMorphism retraction(RObject const& a, RObject const& b) const;
    [[nodiscard]] NormalFactorization<RMorphism> normal_factorize(RMorphism const& f) const {
      return r_normal_factorize(f);
    }
    [[nodiscard]] bool is_isomorphism(RMorphism const& f) const {
      return f.eta.is_bijective();
    }
    [[nodiscard]] Cone<RMorphism> identity_cone(RObject const& a) const;

    //! lambda^alpha(e S) = lambda(e, alpha e, f) with f an idempotent of
    //! kernel ker(alpha).  Throws ContractError unless alpha is singular.
    [[nodiscard]] Cone<RMorphism> dual_principal_cone(OPMap const& alpha) const;

    [[nodiscard]] std::string label(RObject const& a) const {
      return to_string(a.kernel);
    }
    [[nodiscard]] std::string label(RMorphism const& f) const {
      return to_string(f);
    }

    [[nodiscard]] std::vector<OPMap> const& elements() const noexcept {
      return elements_;
    }

   private:
    ChainSize            n_;
    std::vector<RObject> objects_;
    std::vector<OPMap>   elements_;
  };

  static_assert(CategoryProvider<LCategory>);
  static_assert(CategoryProvider<RCategory>);

  ////////////////////////////////////////////////////////////////////////
  // Representations of OX_n by cones
  ////////////////////////////////////////////////////////////////////////

  //! OX_n, its elements in enumerate_oxn order, under composition.
  FiniteSemigroup oxn_semigroup(ChainSize n);

  //! The representation alpha -> lambda^alpha of OX_n by normal cones of
  //! R(OX_n).
  struct PhiRepresentation {
    FiniteSemigroup oxn;
    //! The cones lambda^alpha, indexed like oxn.
    std::vector<Cone<RMorphism>> cones;
    //! Distinct cones of the image under cone_mul.
    FiniteSemigroup image;
    ElementMap      phi;
    bool            injective;
    //! phi(a b) = phi(b) . phi(a) in the cone semigroup.
    bool reverses_products;
    //! phi(a b) = phi(a) . phi(b) in the cone semigroup.
    bool preserves_products;
  };

  //! Builds the image of alpha -> lambda^alpha and checks closure (throws
  //! ConstructionError otherwise), injectivity and both product laws.
  PhiRepresentation phi_representation(RCategory const& r);

  //! For R-related alpha != beta: the separator idempotent at the least of
  //! the first pair of differing image points.  Throws ContractError
  //! unless alpha R beta and alpha != beta.
  OPMap separating_idempotent(OPMap const& alpha, OPMap const& beta);

}  // namespace oxn

#endif  // OXN_IDEAL_CATEGORIES_HPP_
