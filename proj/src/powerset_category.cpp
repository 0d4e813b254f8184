#include "oxn/powerset_category.hpp"

#include <algorithm>

#include "oxn/combinatorics.hpp"
#include "oxn/errors.hpp"

namespace oxn {

  NormalFactorization<SubMap> po_normal_factorize(SubMap const& f) {
    Subset const&             a      = f.domain();
    std::vector<Point> const& values = f.values();
    std::vector<Point>        section;
    std::vector<Point>        retract(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i == 0 || values[i] != values[i - 1]) {
        section.push_back(a[i]);
      }
      retract[i] = section.back();
    }
    Subset const a1(a.chain_size(), section);
    Subset const b1 = f.image();
    return {SubMap(a, a1, std::move(retract)),
            SubMap(a1, b1, b1.elements()),
            SubMap::inclusion(b1, f.codomain())};
  }

  PCategory::PCategory(ChainSize n) : n_(n) {
    int const size = n.value();
    for (unsigned mask = 1; mask + 1 < (1u << size); ++mask) {
      std::vector<Point> elements;
      for (int x = 1; x <= size; ++x) {
        if (mask & (1u << (x - 1))) {
          elements.push_back(x);
        }
      }
      objects_.emplace_back(size, std::move(elements));
    }
    std::sort(objects_.begin(), objects_.end());
  }

  std::size_t PCategory::index_of(Subset const& a) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), a);
    if (it == objects_.end() || !(*it == a)) {
      throw DomainError(to_string(a) + " is not an object of P_o(X_n)");
    }
    return static_cast<std::size_t>(it - objects_.begin());
  }

  std::vector<SubMap> PCategory::hom(Subset const& a, Subset const& b) const {
    std::vector<SubMap> out;
    for (auto const& positions :
         monotone_sequences(static_cast<int>(a.size()), 0, static_cast<int>(b.size()) - 1)) {
      std::vector<Point> values;
      values.reserve(positions.size());
      for (int i : positions) {
        values.push_back(b[static_cast<std::size_t>(i)]);
      }
      out.emplace_back(a, b, std::move(values));
    }
    return out;
  }

  Cone<SubMap> PCategory::identity_cone(Subset const& a) const {
    return vertex_cone(a, idempotent_for_image(a));
  }

  Cone<SubMap> PCategory::vertex_cone(Subset const& a, OPMap const& u) const {
    if (u.degree() != n_.value() || a.chain_size() != n_.value()) {
      throw DimensionError("vertex cone on another chain");
    }
    for (Point x = 1; x <= u.degree(); ++x) {
      if (!a.contains(u(x)) || (a.contains(x) && u(x) != x)) {
        throw ContractError(to_string(u) + " does not retract onto " + to_string(a));
      }
    }
    Cone<SubMap> cone{index_of(a), {}};
    cone.components.reserve(objects_.size());
    for (auto const& b : objects_) {
      cone.components.push_back(restrict(u, b, a));
    }
    return cone;
  }

  Cone<SubMap> PCategory::cone_of(OPMap const& alpha) const {
    if (alpha.degree() != n_.value()) {
      throw DimensionError("cone of a map on another chain");
    }
    Subset const im = image(alpha);
    Cone<SubMap> cone{index_of(im), {}};
    cone.components.reserve(objects_.size());
    for (auto const& b : objects_) {
      cone.components.push_back(restrict(alpha, b, im));
    }
    return cone;
  }

  OPMap cone_to_opmap(PCategory const& p, Cone<SubMap> const& gamma) {
    if (!validate_cone(p, gamma) || !is_normal(p, gamma)) {
      throw ContractError("not a normal cone of P_o(X_n)");
    }
    int const          n = p.chain_size().value();
    std::vector<Point> images(static_cast<std::size_t>(n));
    for (Point x = 1; x <= n; ++x) {
      auto const& component = gamma.components[p.index_of(Subset::singleton(p.chain_size(), x))];
      images[x - 1]         = component(x);
    }
    return OPMap(std::move(images));
  }

  FunctorReport check_functor_f(LCategory const& l, PCategory const& p, bool exhaustive) {
    return check_functor_isomorphism(
        l,
        p,
        [](LObject const& a) { return functor_f(a); },
        [](LMorphism const& rho) { return functor_f(rho); },
        exhaustive);
  }

}  // namespace oxn
