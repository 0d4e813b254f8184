#include "oxn/ideal_categories.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oxn/combinatorics.hpp"
#include "oxn/errors.hpp"

namespace oxn {

  namespace {
    void require_singular_idempotent(OPMap const& e, char const* name) {
      if (!e.is_singular() || !e.is_idempotent()) {
        throw ContractError(std::string(name) + " = " + to_string(e)
                            + " is not a singular idempotent");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // L(OX_n)
  ////////////////////////////////////////////////////////////////////////

  LMorphism l_morphism_from_triple(OPMap const& e_a, OPMap const& u, OPMap const& e_b) {
    require_singular_idempotent(e_a, "e_A");
    require_singular_idempotent(e_b, "e_B");
    if (!(compose(e_a, u) == u) || !(compose(u, e_b) == u)) {
      throw ContractError(to_string(u) + " is not in " + to_string(e_a) + " S "
                          + to_string(e_b));
    }
    return {restrict(u, image(e_a), image(e_b))};
  }

  LMorphism l_compose(LMorphism const& first, LMorphism const& second) {
    return {compose(first.action, second.action)};
  }

  OPMap l_representative(LMorphism const& rho) {
    OPMap const        e_a = idempotent_for_image(rho.action.domain());
    std::vector<Point> images(e_a.images().size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = rho.action(e_a.images()[i]);
    }
    return OPMap(std::move(images));
  }

  NormalFactorization<LMorphism> l_normal_factorize(LMorphism const& rho) {
    Subset const& a   = rho.action.domain();
    Subset const& b   = rho.action.codomain();
    OPMap const   e   = idempotent_for_image(a);
    OPMap const   f   = idempotent_for_image(b);
    OPMap const   u   = l_representative(rho);
    auto const    ker = kernel(u);
    // g: each class of ker u goes to the least point of A inside it
    std::vector<Point> least(ker.block_count(), 0);
    for (Point x : a.elements()) {
      auto& slot = least[ker.block_of(x)];
      if (slot == 0) {
        slot = x;
      }
    }
    std::vector<Point> g_images(static_cast<std::size_t>(u.degree()));
    for (Point x = 1; x <= u.degree(); ++x) {
      g_images[x - 1] = least[ker.block_of(x)];
    }
    OPMap const g(std::move(g_images));
    OPMap const h = idempotent_for_image(image(u));
    return {l_morphism_from_triple(e, g, g),
            l_morphism_from_triple(g, u, h),
            l_morphism_from_triple(h, h, f)};
  }

  std::string to_string(LMorphism const& rho) {
    std::vector<Point> const& values = rho.action.values();
    std::string               out    = "rho(" + to_string(rho.action.domain()) + " -> "
                        + to_string(rho.action.codomain()) + ": [";
    for (std::size_t i = 0; i < values.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(values[i]);
    }
    return out + "])";
  }

  LCategory::LCategory(ChainSize n) : n_(n), elements_(enumerate_oxn(n)) {
    int const size = n.value();
    for (unsigned mask = 1; mask + 1 < (1u << size); ++mask) {
      std::vector<Point> elements;
      for (int x = 1; x <= size; ++x) {
        if (mask & (1u << (x - 1))) {
          elements.push_back(x);
        }
      }
      objects_.push_back({Subset(size, std::move(elements))});
    }
    std::sort(objects_.begin(), objects_.end());
  }

  std::size_t LCategory::index_of(LObject const& a) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), a);
    if (it == objects_.end() || !(*it == a)) {
      throw DomainError(to_string(a.image) + " is not an object of L(OX_n)");
    }
    return static_cast<std::size_t>(it - objects_.begin());
  }

  std::vector<LMorphism> LCategory::hom(LObject const& a, LObject const& b) const {
    OPMap const         e_a = idempotent_for_image(a.image);
    OPMap const         e_b = idempotent_for_image(b.image);
    std::set<LMorphism> out;
    for (auto const& u : elements_) {
      if (oxn::compose(e_a, u) == u && oxn::compose(u, e_b) == u) {
        out.insert(l_morphism_from_triple(e_a, u, e_b));
      }
    }
    return {out.begin(), out.end()};
  }

  LMorphism LCategory::identity(LObject const& a) const {
    OPMap const e = idempotent_for_image(a.image);
    return l_morphism_from_triple(e, e, e);
  }

  LMorphism LCategory::inclusion(LObject const& a, LObject const& b) const {
    if (!is_subobject(a, b)) {
      throw DomainError(to_string(a.image) + " is not contained in "
                        + to_string(b.image));
    }
    OPMap const e_a = idempotent_for_image(a.image);
    return l_morphism_from_triple(e_a, e_a, idempotent_for_image(b.image));
  }

  LMorphism LCategory::retraction(LObject const& a, LObject const& b) const {
    if (!is_subobject(a, b)) {
      throw DomainError(to_string(a.image) + " is not contained in "
                        + to_string(b.image));
    }
    OPMap const e_a = idempotent_for_image(a.image);
    OPMap const e_b = idempotent_for_image(b.image);
    return l_morphism_from_triple(e_b, oxn::compose(e_b, e_a), e_a);
  }

  Cone<LMorphism> LCategory::identity_cone(LObject const& a) const {
    return principal_cone(idempotent_for_image(a.image));
  }

  Cone<LMorphism> LCategory::principal_cone(OPMap const& alpha) const {
    if (alpha.degree() != n_.value()) {
      throw DimensionError("principal cone of a map on another chain");
    }
    if (!alpha.is_singular()) {
      throw ContractError("principal cones need a singular map");
    }
    OPMap const     f = idempotent_for_image(image(alpha));
    Cone<LMorphism> cone{index_of({image(alpha)}), {}};
    cone.components.reserve(objects_.size());
    for (auto const& obj : objects_) {
      OPMap const e = idempotent_for_image(obj.image);
      cone.components.push_back(l_morphism_from_triple(e, oxn::compose(e, alpha), f));
    }
    return cone;
  }

  ////////////////////////////////////////////////////////////////////////
  // R(OX_n)
  ////////////////////////////////////////////////////////////////////////

  RMorphism r_morphism_from_triple(OPMap const& e, OPMap const& v, OPMap const& f) {
    require_singular_idempotent(e, "e");
    require_singular_idempotent(f, "f");
    if (!(compose(f, v) == v) || !(compose(v, e) == v)) {
      throw ContractError(to_string(v) + " is not in " + to_string(f) + " S "
                          + to_string(e));
    }
    auto const               pi_e = kernel(e);
    auto const               pi_f = kernel(f);
    std::vector<std::size_t> targets(pi_f.block_count());
    for (std::size_t i = 0; i < targets.size(); ++i) {
      targets[i] = pi_e.block_of(v(pi_f.first(i)));
    }
    return {BlockMap(pi_f, pi_e, std::move(targets))};
  }

  RMorphism r_compose(RMorphism const& first, RMorphism const& second) {
    if (!(first.target() == second.source())) {
      throw CompositionError("cannot compose " + to_string(first) + " with "
                             + to_string(second));
    }
    return {compose(second.eta, first.eta)};
  }

  OPMap r_representative(RMorphism const& lambda) {
    auto const&        pi_f = lambda.eta.from();
    auto const&        pi_e = lambda.eta.to();
    std::vector<Point> images(static_cast<std::size_t>(pi_f.chain_size()));
    for (Point x = 1; x <= pi_f.chain_size(); ++x) {
      images[x - 1] = pi_e.first(lambda.eta(pi_f.block_of(x)));
    }
    return OPMap(std::move(images));
  }

  NormalFactorization<RMorphism> r_normal_factorize(RMorphism const& lambda) {
    OPMap const e = idempotent_for_kernel(lambda.eta.to());
    OPMap const f = idempotent_for_kernel(lambda.eta.from());
    OPMap const v = r_representative(lambda);
    OPMap const g = compose(e, idempotent_for_image(image(v)));
    OPMap const h = idempotent_for_kernel(kernel(v));
    return {r_morphism_from_triple(e, g, g),
            r_morphism_from_triple(g, v, h),
            r_morphism_from_triple(h, h, f)};
  }

  std::string to_string(RMorphism const& lambda) {
    return "lambda(" + to_string(lambda.eta.to()) + " -> "
           + to_string(lambda.eta.from()) + ": " + to_string(lambda.eta) + ")";
  }

  RCategory::RCategory(ChainSize n) : n_(n), elements_(enumerate_oxn(n)) {
    for (auto& sizes : compositions(n.value())) {
      OrderedPartition pi(n.value(), std::move(sizes));
      if (pi.is_non_identity()) {
        objects_.push_back({std::move(pi)});
      }
    }
    std::sort(objects_.begin(), objects_.end());
  }

  std::size_t RCategory::index_of(RObject const& a) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), a);
    if (it == objects_.end() || !(*it == a)) {
      throw DomainError(to_string(a.kernel) + " is not an object of R(OX_n)");
    }
    return static_cast<std::size_t>(it - objects_.begin());
  }

  std::vector<RMorphism> RCategory::hom(RObject const& a, RObject const& b) const {
    OPMap const         e = idempotent_for_kernel(a.kernel);
    OPMap const         f = idempotent_for_kernel(b.kernel);
    std::set<RMorphism> out;
    for (auto const& v : elements_) {
      if (oxn::compose(f, v) == v && oxn::compose(v, e) == v) {
        out.insert(r_morphism_from_triple(e, v, f));
      }
    }
    return {out.begin(), out.end()};
  }

  RMorphism RCategory::identity(RObject const& a) const {
    OPMap const e = idempotent_for_kernel(a.kernel);
    return r_morphism_from_triple(e, e, e);
  }

  RMorphism RCategory::inclusion(RObject const& a, RObject const& b) const {
    if (!is_subobject(a, b)) {
      throw DomainError(to_string(b.kernel) + " does not refine "
                        + to_string(a.kernel));
    }
    OPMap const e_a = idempotent_for_kernel(a.kernel);
    return r_morphism_from_triple(e_a, e_a, idempotent_for_kernel(b.kernel));
  }

  RMorphism RCategory::retraction(RObject const& a, RObject const& b) const {
    if (!is_subobject(a, b)) {
      throw DomainError(to_string(b.kernel) + " does not refine "
                        + to_string(a.kernel));
    }
    OPMap const e_a = idempotent_for_kernel(a.kernel);
    return r_morphism_from_triple(idempotent_for_kernel(b.kernel), e_a, e_a);
  }

  Cone<RMorphism> RCategory::identity_cone(RObject const& a) const {
    return dual_principal_cone(idempotent_for_kernel(a.kernel));
  }

  Cone<RMorphism> RCategory::dual_principal_cone(OPMap const& alpha) const {
    if (alpha.degree() != n_.value()) {
      throw DimensionError("principal cone of a map on another chain");
    }
    if (!alpha.is_singular()) {
      throw ContractError("principal cones need a singular map");
    }
    OPMap const     f = idempotent_for_kernel(kernel(alpha));
    Cone<RMorphism> cone{index_of({kernel(alpha)}), {}};
    cone.components.reserve(objects_.size());
    for (auto const& obj : objects_) {
      OPMap const e = idempotent_for_kernel(obj.kernel);
      cone.components.push_back(r_morphism_from_triple(e, oxn::compose(alpha, e), f));
    }
    return cone;
  }

  ////////////////////////////////////////////////////////////////////////
  // Representations
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup oxn_semigroup(ChainSize n) {
    return FiniteSemigroup::build(
        enumerate_oxn(n),
        [](OPMap const& f, OPMap const& g) { return compose(f, g); },
        [](OPMap const& f) { return to_string(f); });
  }

  PhiRepresentation phi_representation(RCategory const& r) {
    FiniteSemigroup oxn = oxn_semigroup(r.chain_size());
    auto const&     elements = r.elements();

    std::vector<Cone<RMorphism>>            cones;
    std::map<Cone<RMorphism>, std::size_t>  distinct;
    std::vector<Cone<RMorphism>>            distinct_cones;
    ElementMap                              phi;
    for (auto const& alpha : elements) {
      cones.push_back(r.dual_principal_cone(alpha));
      auto [it, fresh] = distinct.emplace(cones.back(), distinct_cones.size());
      if (fresh) {
        distinct_cones.push_back(cones.back());
      }
      phi.assignment.push_back(static_cast<FiniteSemigroup::index_type>(it->second));
    }
    FiniteSemigroup image    = cone_semigroup(r, distinct_cones);
    bool const      injective = distinct_cones.size() == cones.size();
    bool            reverses = true, preserves = true;
    for (FiniteSemigroup::index_type a = 0; a < oxn.size(); ++a) {
      for (FiniteSemigroup::index_type b = 0; b < oxn.size(); ++b) {
        auto const ab = phi.assignment[oxn.product(a, b)];
        reverses &= ab == image.product(phi.assignment[b], phi.assignment[a]);
        preserves &= ab == image.product(phi.assignment[a], phi.assignment[b]);
      }
    }
    return {std::move(oxn),
            std::move(cones),
            std::move(image),
            std::move(phi),
            injective,
            reverses,
            preserves};
  }

  OPMap separating_idempotent(OPMap const& alpha, OPMap const& beta) {
    if (alpha == beta || !green(alpha, beta, GreenRelation::R)) {
      throw ContractError("separating idempotents need distinct R-related maps");
    }
    auto const im_a = image(alpha);
    auto const im_b = image(beta);
    for (std::size_t i = 0; i < im_a.size(); ++i) {
      if (im_a[i] != im_b[i]) {
        return separator_idempotent(std::min(im_a[i], im_b[i]),
                                    ChainSize(alpha.degree()));
      }
    }
    throw ContractError("R-related maps with equal images are equal");
  }

}  // namespace oxn
