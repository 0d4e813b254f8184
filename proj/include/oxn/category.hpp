// Finite categories with subobjects, cones, normal cones and the semigroup of
// normal cones.
//
// A category is supplied through the CategoryProvider concept.  Objects are
// enumerated once by the provider and cones store one component per object,
// indexed by the provider's object order.  Morphisms compose from left to
// right: compose(f, g) is "first f, then g".

#ifndef OXN_CATEGORY_HPP_
#define OXN_CATEGORY_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oxn/errors.hpp"
#include "oxn/semigroup.hpp"

namespace oxn {

  //! f = retraction . isomorphism . inclusion (left to right).
  template <typename Morphism>
  struct NormalFactorization {
    Morphism retraction;
    Morphism isomorphism;
    Morphism inclusion;
  };

  //! A cone: components[i] is a morphism from object i to the vertex.
  template <typename Morphism>
  struct Cone {
    std::size_t           vertex;
    std::vector<Morphism> components;

    auto operator<=>(Cone const&) const = default;
  };

  // clang-format off
  template <typename C>
  concept CategoryProvider = requires(C const&                      c,
                                      typename C::Object const&     a,
                                      typename C::Morphism const&   f) {
    typename C::Object;
    typename C::Morphism;
    { c.objects() } -> std::convertible_to<std::vector<typename C::Object> const&>;
    { c.index_of(a) } -> std::convertible_to<std::size_t>;
    { c.hom(a, a) } -> std::convertible_to<std::vector<typename C::Morphism>>;
    { c.source(f) } -> std::convertible_to<typename C::Object>;
    { c.target(f) } -> std::convertible_to<typename C::Object>;
    { c.compose(f, f) } -> std::convertible_to<typename C::Morphism>;
    { c.identity(a) } -> std::convertible_to<typename C::Morphism>;
    { c.is_subobject(a, a) } -> std::convertible_to<bool>;
    // inclusion(a, b) : a -> b, retraction(a, b) : b -> a, for a <= b
    { c.inclusion(a, a) } -> std::convertible_to<typename C::Morphism>;
    { c.retraction(a, a) } -> std::convertible_to<typename C::Morphism>;
    { c.normal_factorize(f) }
        -> std::convertible_to<NormalFactorization<typename C::Morphism>>;
    { c.is_isomorphism(f) } -> std::convertible_to<bool>;
    // a normal cone with vertex a whose component at a is the identity
    { c.identity_cone(a) } -> std::convertible_to<Cone<typename C::Morphism>>;
    { c.label(a) } -> std::convertible_to<std::string>;
    { c.label(f) } -> std::convertible_to<std::string>;
  } && std::totally_ordered<typename C::Morphism>
    && std::totally_ordered<typename C::Object>;
  // clang-format on

  template <CategoryProvider C>
  using ConeOf = Cone<typename C::Morphism>;

  ////////////////////////////////////////////////////////////////////////
  // Cone predicates
  ////////////////////////////////////////////////////////////////////////

  //! Checks that every component goes from its object to the vertex and
  //! that components commute with every inclusion.
  template <CategoryProvider C>
  bool validate_cone(C const& cat, ConeOf<C> const& cone) {
    auto const& objects = cat.objects();
    if (cone.vertex >= objects.size() || cone.components.size() != objects.size()) {
      return false;
    }
    auto const& vertex = objects[cone.vertex];
    for (std::size_t i = 0; i < objects.size(); ++i) {
      auto const& f = cone.components[i];
      if (!(cat.source(f) == objects[i]) || !(cat.target(f) == vertex)) {
        return false;
      }
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
      for (std::size_t j = 0; j < objects.size(); ++j) {
        if (i != j && cat.is_subobject(objects[i], objects[j])
            && !(cat.compose(cat.inclusion(objects[i], objects[j]),
                             cone.components[j])
                 == cone.components[i])) {
          return false;
        }
      }
    }
    return true;
  }

  //! Indices of the objects at which the component is an isomorphism.
  //! Throws ContractError if the cone is invalid.
  template <CategoryProvider C>
  std::vector<std::size_t> normal_set(C const& cat, ConeOf<C> const& cone) {
    if (!validate_cone(cat, cone)) {
      throw ContractError("not a cone");
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cone.components.size(); ++i) {
      if (cat.is_isomorphism(cone.components[i])) {
        out.push_back(i);
      }
    }
    return out;
  }

  template <CategoryProvider C>
  bool is_normal(C const& cat, ConeOf<C> const& cone) {
    return !normal_set(cat, cone).empty();
  }

  //! gamma(c_gamma) is the identity.
  template <CategoryProvider C>
  bool is_idempotent_cone(C const& cat, ConeOf<C> const& cone) {
    return cone.components[cone.vertex]
           == cat.identity(cat.objects()[cone.vertex]);
  }

  ////////////////////////////////////////////////////////////////////////
  // Cone multiplication
  ////////////////////////////////////////////////////////////////////////

  //! The epimorphic component f = q u j  ->  q u.
  template <CategoryProvider C>
  typename C::Morphism epimorphic_component(C const&                    cat,
                                            typename C::Morphism const& f) {
    auto const factors = cat.normal_factorize(f);
    return cat.compose(factors.retraction, factors.isomorphism);
  }

  //! gamma . sigma: post-compose every component of gamma with the
  //! epimorphic component of sigma's component at the vertex of gamma.
  template <CategoryProvider C>
  ConeOf<C> cone_mul(C const& cat, ConeOf<C> const& gamma, ConeOf<C> const& sigma) {
    auto const epi = epimorphic_component(cat, sigma.components[gamma.vertex]);
    ConeOf<C>  out{cat.index_of(cat.target(epi)), {}};
    out.components.reserve(gamma.components.size());
    for (auto const& component : gamma.components) {
      out.components.push_back(cat.compose(component, epi));
    }
    return out;
  }

  template <CategoryProvider C>
  std::string cone_label(C const& cat, ConeOf<C> const& cone) {
    std::string out = "cone(" + cat.label(cat.objects()[cone.vertex]) + ";";
    for (std::size_t i = 0; i < cone.components.size(); ++i) {
      out += (i == 0 ? " " : ", ") + cat.label(cone.components[i]);
    }
    return out + ")";
  }

  //! {"vertex": label, "components": {objectLabel: morphismLabel}}
  template <CategoryProvider C>
  nlohmann::json cone_json(C const& cat, ConeOf<C> const& cone) {
    nlohmann::json components = nlohmann::json::object();
    for (std::size_t i = 0; i < cone.components.size(); ++i) {
      components[cat.label(cat.objects()[i])] = cat.label(cone.components[i]);
    }
    return {{"vertex", cat.label(cat.objects()[cone.vertex])},
            {"components", std::move(components)}};
  }

  //! The semigroup on the given cones under cone_mul.  Throws
  //! ConstructionError naming the product if the set is not closed.
  template <CategoryProvider C>
  FiniteSemigroup cone_semigroup(C const&                      cat,
                                 std::vector<ConeOf<C>> const& cones,
                                 std::uint64_t                 seed = 0) {
    return FiniteSemigroup::build(
        cones,
        [&cat](ConeOf<C> const& x, ConeOf<C> const& y) { return cone_mul(cat, x, y); },
        [&cat](ConeOf<C> const& x) { return cone_label(cat, x); },
        seed);
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration of normal cones
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <CategoryProvider C>
    class ConeEnumerator {
     public:
      using Morphism = typename C::Morphism;

      ConeEnumerator(C const& cat, std::size_t vertex)
          : cat_(cat), objects_(cat.objects()), vertex_(vertex) {
        std::size_t const m = objects_.size();
        below_.assign(m, std::vector<bool>(m, false));
        std::vector<std::size_t> downset(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            below_[i][j] = cat_.is_subobject(objects_[i], objects_[j]);
            downset[j] += below_[i][j] ? 1 : 0;
          }
        }
        // strictly larger objects have strictly larger down-sets, so every
        // object comes after all of its proper supersets
        order_.resize(m);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
          if (downset[x] != downset[y]) {
            return downset[x] > downset[y];
          }
          return objects_[x] < objects_[y];
        });
        supersets_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            if (i != j && below_[i][j]) {
              supersets_[i].push_back(j);
            }
          }
        }
        options_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
          if (supersets_[i].empty()) {
            options_[i] = cat_.hom(objects_[i], objects_[vertex_]);
          }
        }
        components_.resize(m);
      }

      std::vector<Cone<Morphism>> run() {
        search(0);
        return std::move(found_);
      }

     private:
      Morphism restrict_to(std::size_t sub, std::size_t super, Morphism const& f) const {
        return cat_.compose(cat_.inclusion(objects_[sub], objects_[super]), f);
      }

      // A candidate at a maximal object must agree with every assigned
      // maximal object on their common subobjects.
      bool compatible(std::size_t obj, Morphism const& f) const {
        for (std::size_t other : maximal_assigned_) {
          for (std::size_t d = 0; d < objects_.size(); ++d) {
            if (below_[d][obj] && below_[d][other]
                && !(restrict_to(d, obj, f) == restrict_to(d, other, *components_[other]))) {
              return false;
            }
          }
        }
        return true;
      }

      void search(std::size_t depth) {
        if (depth == order_.size()) {
          Cone<Morphism> cone{vertex_, {}};
          cone.components.reserve(components_.size());
          for (auto const& component : components_) {
            cone.components.push_back(*component);
          }
          if (std::any_of(cone.components.begin(), cone.components.end(),
                          [this](Morphism const& f) { return cat_.is_isomorphism(f); })) {
            found_.push_back(std::move(cone));
          }
          return;
        }
        std::size_t const obj = order_[depth];
        auto const&       sup = supersets_[obj];
        if (!sup.empty()) {
          Morphism forced = restrict_to(obj, sup.front(), *components_[sup.front()]);
          for (std::size_t other : sup) {
            if (!(restrict_to(obj, other, *components_[other]) == forced)) {
              return;
            }
          }
          components_[obj] = std::move(forced);
          search(depth + 1);
          return;
        }
        for (auto const& f : options_[obj]) {
          if (!compatible(obj, f)) {
            continue;
          }
          components_[obj] = f;
          maximal_assigned_.push_back(obj);
          search(depth + 1);
          maximal_assigned_.pop_back();
        }
      }

      C const&                                 cat_;
      std::vector<typename C::Object> const&   objects_;
      std::size_t                              vertex_;
      std::vector<std::vector<bool>>           below_;  // below_[i][j]: i <= j
      std::vector<std::size_t>                 order_;
      std::vector<std::vector<std::size_t>>    supersets_;
      std::vector<std::vector<Morphism>>       options_;
      std::vector<std::optional<Morphism>>     components_;
      std::vector<std::size_t>                 maximal_assigned_;
      std::vector<Cone<Morphism>>              found_;
    };
  }  // namespace detail

  //! Every normal cone with the given vertex, by backtracking over the
  //! components at maximal objects (components at smaller objects are
  //! forced by the inclusions).
  template <CategoryProvider C>
  std::vector<ConeOf<C>> enumerate_normal_cones(C const& cat, std::size_t vertex) {
    return detail::ConeEnumerator<C>(cat, vertex).run();
  }

  template <CategoryProvider C>
  std::vector<ConeOf<C>> enumerate_normal_cones(C const& cat) {
    std::vector<ConeOf<C>> out;
    for (std::size_t v = 0; v < cat.objects().size(); ++v) {
      auto cones = enumerate_normal_cones(cat, v);
      out.insert(out.end(),
                 std::make_move_iterator(cones.begin()),
                 std::make_move_iterator(cones.end()));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal category axioms
  ////////////////////////////////////////////////////////////////////////

  struct NormalCategoryReport {
    std::size_t              objects        = 0;
    std::size_t              inclusions     = 0;
    std::size_t              morphisms      = 0;
    std::size_t              identity_cones = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
  };

  //! Checks exhaustively that every inclusion splits through the provider's
  //! retraction, every morphism's normal factorization has the right shape
  //! and recomposes to it, and every object carries an idempotent normal
  //! cone.  At most max_failures failures are recorded.
  template <CategoryProvider C>
  NormalCategoryReport check_normal_category(C const& cat, std::size_t max_failures = 10) {
    NormalCategoryReport report;
    auto const&          objects = cat.objects();
    report.objects               = objects.size();
    auto fail                    = [&](std::string what) {
      if (report.failures.size() < max_failures) {
        report.failures.push_back(std::move(what));
      }
    };
    for (auto const& a : objects) {
      for (auto const& b : objects) {
        if (!cat.is_subobject(a, b)) {
          continue;
        }
        ++report.inclusions;
        auto const j = cat.inclusion(a, b);
        auto const q = cat.retraction(a, b);
        if (!(cat.compose(j, q) == cat.identity(a))) {
          fail("inclusion " + cat.label(j) + " is not split by " + cat.label(q));
        }
      }
    }
    for (auto const& a : objects) {
      for (auto const& b : objects) {
        for (auto const& f : cat.hom(a, b)) {
          ++report.morphisms;
          auto const fac = cat.normal_factorize(f);
          auto const a1  = cat.target(fac.retraction);
          auto const b1  = cat.target(fac.isomorphism);
          bool const shape
              = cat.source(fac.retraction) == a && cat.is_subobject(a1, a)
                && cat.compose(cat.inclusion(a1, a), fac.retraction) == cat.identity(a1)
                && cat.source(fac.isomorphism) == a1
                && cat.is_isomorphism(fac.isomorphism) && cat.is_subobject(b1, b)
                && fac.inclusion == cat.inclusion(b1, b);
          if (!shape) {
            fail("factorization of " + cat.label(f) + " is not retraction/iso/inclusion");
          } else if (!(cat.compose(cat.compose(fac.retraction, fac.isomorphism),
                                   fac.inclusion)
                       == f)) {
            fail("factorization of " + cat.label(f) + " does not recompose");
          }
        }
      }
    }
    for (std::size_t v = 0; v < objects.size(); ++v) {
      auto const cone = cat.identity_cone(objects[v]);
      if (cone.vertex == v && validate_cone(cat, cone) && is_normal(cat, cone)
          && is_idempotent_cone(cat, cone)) {
        ++report.identity_cones;
      } else {
        fail("no idempotent normal cone at " + cat.label(objects[v]));
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Functors
  ////////////////////////////////////////////////////////////////////////

  struct FunctorReport {
    std::size_t              source_objects   = 0;
    std::size_t              target_objects   = 0;
    std::size_t              source_morphisms = 0;
    std::size_t              target_morphisms = 0;
    std::size_t              composable_pairs = 0;
    //! False when only object and hom-set sizes were compared.
    bool                     exhaustive = true;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
  };

  //! Checks that (object_map, morphism_map) is an isomorphism of categories
  //! with subobjects: bijective on objects, bijective on every hom-set,
  //! preserving identities, composition, inclusions and normal
  //! factorizations.  With exhaustive == false only the object count and the
  //! size of every hom-set are compared.
  template <CategoryProvider C, CategoryProvider D, typename ObjectMap, typename MorphismMap>
  FunctorReport check_functor_isomorphism(C const&      source,
                                          D const&      target,
                                          ObjectMap&&   object_map,
                                          MorphismMap&& morphism_map,
                                          bool          exhaustive,
                                          std::size_t   max_failures = 10) {
    FunctorReport report;
    report.exhaustive = exhaustive;
    auto fail         = [&](std::string what) {
      if (report.failures.size() < max_failures) {
        report.failures.push_back(std::move(what));
      }
    };
    auto const& objects    = source.objects();
    report.source_objects  = objects.size();
    report.target_objects  = target.objects().size();
    std::vector<typename D::Object> images;
    for (auto const& a : objects) {
      images.push_back(object_map(a));
    }
    {
      auto sorted = images;
      std::sort(sorted.begin(), sorted.end());
      bool const injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      if (!injective || sorted.size() != target.objects().size()) {
        fail("object map is not a bijection");
      }
    }
    for (auto const& b : target.objects()) {
      for (auto const& c : target.objects()) {
        report.target_morphisms += target.hom(b, c).size();
      }
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
      for (std::size_t j = 0; j < objects.size(); ++j) {
        auto const homs        = source.hom(objects[i], objects[j]);
        auto const target_homs = target.hom(images[i], images[j]);
        report.source_morphisms += homs.size();
        if (homs.size() != target_homs.size()) {
          fail("hom(" + source.label(objects[i]) + ", " + source.label(objects[j])
               + ") has " + std::to_string(homs.size()) + " morphisms, its image "
               + std::to_string(target_homs.size()));
          continue;
        }
        if (!exhaustive) {
          continue;
        }
        std::vector<typename D::Morphism> mapped;
        for (auto const& f : homs) {
          mapped.push_back(morphism_map(f));
        }
        std::sort(mapped.begin(), mapped.end());
        if (!std::equal(mapped.begin(), mapped.end(), target_homs.begin())) {
          fail("morphism map is not a bijection on hom(" + source.label(objects[i]) + ", "
               + source.label(objects[j]) + ")");
        }
        for (auto const& f : homs) {
          auto const fac  = source.normal_factorize(f);
          auto const tfac = target.normal_factorize(morphism_map(f));
          if (!(morphism_map(fac.retraction) == tfac.retraction
                && morphism_map(fac.isomorphism) == tfac.isomorphism
                && morphism_map(fac.inclusion) == tfac.inclusion)) {
            fail("normal factorization of " + source.label(f) + " is not preserved");
          }
        }
      }
    }
    if (!exhaustive) {
      return report;
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (!(morphism_map(source.identity(objects[i])) == target.identity(images[i]))) {
        fail("identity of " + source.label(objects[i]) + " is not preserved");
      }
      for (std::size_t j = 0; j < objects.size(); ++j) {
        if (source.is_subobject(objects[i], objects[j])) {
          if (!target.is_subobject(images[i], images[j])
              || !(morphism_map(source.inclusion(objects[i], objects[j]))
                   == target.inclusion(images[i], images[j]))) {
            fail("inclusion " + source.label(objects[i]) + " <= "
                 + source.label(objects[j]) + " is not preserved");
          }
        } else if (target.is_subobject(images[i], images[j])) {
          fail("image of " + source.label(objects[i]) + ", " + source.label(objects[j])
               + " is comparable but the objects are not");
        }
      }
    }
    for (auto const& a : objects) {
      for (auto const& b : objects) {
        auto const first = source.hom(a, b);
        if (first.empty()) {
          continue;
        }
        for (auto const& c : objects) {
          for (auto const& g : source.hom(b, c)) {
            auto const mg = morphism_map(g);
            for (auto const& f : first) {
              ++report.composable_pairs;
              if (!(morphism_map(source.compose(f, g)) == target.compose(morphism_map(f), mg))) {
                fail("composition " + source.label(f) + " then " + source.label(g)
                     + " is not preserved");
              }
            }
          }
        }
      }
    }
    return report;
  }

}  // namespace oxn

#endif  // OXN_CATEGORY_HPP_
