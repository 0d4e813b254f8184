// The power set category P_o(X_n): proper nonempty subsets of the chain with
// order-preserving maps between them, its normal cones, and the functor
// F : L(OX_n) -> P_o(X_n).

#ifndef OXN_POWERSET_CATEGORY_HPP_
#define OXN_POWERSET_CATEGORY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "oxn/category.hpp"
#include "oxn/chain.hpp"
#include "oxn/ideal_categories.hpp"

namespace oxn {

  using PObject   = Subset;
  using PMorphism = SubMap;

  //! f = q u j where q sends each point of the domain to the least point of
  //! its kernel class, u is the bijection induced on those least points and
  //! j is the inclusion of the image.
  NormalFactorization<SubMap> po_normal_factorize(SubMap const& f);

  class PCategory {
   public:
    using Object   = PObject;
    using Morphism = PMorphism;

    explicit PCategory(ChainSize n);

    [[nodiscard]] ChainSize chain_size() const noexcept {
      return n_;
    }
    //! Proper nonempty subsets in increasing order.
    [[nodiscard]] std::vector<Subset> const& objects() const noexcept {
      return objects_;
    }
    [[nodiscard]] std::size_t index_of(Subset const& a) const;
    //! Every order-preserving map a -> b.
    [[nodiscard]] std::vector<SubMap> hom(Subset const& a, Subset const& b) const;

    [[nodiscard]] Subset source(SubMap const& f) const {
      return f.domain();
    }
    [[nodiscard]] Subset target(SubMap const& f) const {
      return f.codomain();
    }
    [[nodiscard]] SubMap compose(SubMap const& f, SubMap const& g) const {
      return oxn::compose(f, g);
    }
    [[nodiscard]] SubMap identity(Subset const& a) const {
      return SubMap::identity(a);
    }
    [[nodiscard]] bool is_subobject(Subset const& a, Subset const& b) const {
      return a.is_subset_of(b);
    }
    [[nodiscard]] SubMap inclusion(Subset const& a, Subset const& b) const {
      return SubMap::inclusion(a, b);
    }
    //! retraction_for_inclusion(a, b).
    [[nodiscard]] SubMap retraction(Subset const& a, Subset const& b) const {
      return retraction_for_inclusion(a, b);
    }
    [[nodiscard]] NormalFactorization<SubMap> normal_factorize(SubMap const& f) const {
      return po_normal_factorize(f);
    }
    [[nodiscard]] bool is_isomorphism(SubMap const& f) const {
      return f.is_bijective();
    }
    //! vertex_cone(a, idempotent_for_image(a)).
    [[nodiscard]] Cone<SubMap> identity_cone(Subset const& a) const;

    //! The cone with vertex a whose component at b is u restricted to b.
    //! Throws ContractError unless u maps into a and fixes a pointwise.
    [[nodiscard]] Cone<SubMap> vertex_cone(Subset const& a, OPMap const& u) const;

    //! The cone with vertex im(alpha) and components alpha restricted.
    [[nodiscard]] Cone<SubMap> cone_of(OPMap const& alpha) const;

    [[nodiscard]] std::string label(Subset const& a) const {
      return to_string(a);
    }
    [[nodiscard]] std::string label(SubMap const& f) const {
      return to_string(f);
    }

   private:
    ChainSize           n_;
    std::vector<Subset> objects_;
  };

  static_assert(CategoryProvider<PCategory>);

  //! (x)alpha is the value of the component at {x}.  Throws ContractError
  //! unless gamma is a normal cone of p.
  OPMap cone_to_opmap(PCategory const& p, Cone<SubMap> const& gamma);

  //! The object part A -> A of F.
  inline Subset functor_f(LObject const& a) {
    return a.image;
  }
  //! The morphism part rho -> its action of F.
  inline SubMap functor_f(LMorphism const& rho) {
    return rho.action;
  }

  //! Checks that F is an isomorphism of categories with subobjects.
  FunctorReport check_functor_f(LCategory const& l, PCategory const& p, bool exhaustive);

}  // namespace oxn

#endif  // OXN_POWERSET_CATEGORY_HPP_
