#include "oxn/partition_category.hpp"

#include <algorithm>

#include "oxn/combinatorics.hpp"
#include "oxn/errors.hpp"

namespace oxn {

  std::vector<BarElement> bar_elements(OrderedPartition const& pi) {
    std::vector<BarElement> out;
    for (auto& values :
         monotone_sequences(static_cast<int>(pi.block_count()), 1, pi.chain_size())) {
      out.push_back({pi, std::move(values)});
    }
    return out;
  }

  BarElement apply(PiMorphism const& m, BarElement const& alpha) {
    if (!(alpha.pi == m.eta.to())) {
      throw DomainError("map on " + to_string(alpha.pi) + " cannot be precomposed with "
                        + to_string(m.eta));
    }
    BarElement out{m.eta.from(), {}};
    out.values.reserve(out.pi.block_count());
    for (std::size_t i = 0; i < out.pi.block_count(); ++i) {
      out.values.push_back(alpha.values[m.eta(i)]);
    }
    return out;
  }

  PiMorphism pi_compose(PiMorphism const& m1, PiMorphism const& m2) {
    if (!(m1.target() == m2.source())) {
      throw CompositionError("cannot compose a morphism into " + to_string(m1.eta.from())
                             + " with one out of " + to_string(m2.eta.to()));
    }
    return {compose(m2.eta, m1.eta)};
  }

  bool pi_leq(PiObject const& p, PiObject const& q) {
    return q.pi.refines(p.pi);
  }

  std::pair<PiMorphism, PiMorphism> pi_inclusion_and_retraction(PiObject const& p,
                                                                PiObject const& q) {
    if (!pi_leq(p, q)) {
      throw DomainError(to_string(q.pi) + " does not refine " + to_string(p.pi));
    }
    std::vector<std::size_t> zeta(p.pi.block_count());
    for (std::size_t i = 0; i < zeta.size(); ++i) {
      zeta[i] = q.pi.block_of(p.pi.first(i));
    }
    return {PiMorphism{BlockMap::containment(q.pi, p.pi)},
            PiMorphism{BlockMap(p.pi, q.pi, std::move(zeta))}};
  }

  PiFactorization factorize_pi(PiMorphism const& m) {
    BlockMap const&         eta = m.eta;
    OrderedPartition const& pi1 = eta.to();
    OrderedPartition const& pi2 = eta.from();
    int const               n   = pi1.chain_size();

    // image blocks i_1 < ... < i_k of eta, and the fibre of each block of pi2
    std::vector<std::size_t> image;
    std::vector<int>         sigma_sizes;
    std::vector<std::size_t> fibre(pi2.block_count());
    for (std::size_t b = 0; b < pi2.block_count(); ++b) {
      int const size = pi2.block_sizes()[b];
      if (image.empty() || image.back() != eta(b)) {
        image.push_back(eta(b));
        sigma_sizes.push_back(size);
      } else {
        sigma_sizes.back() += size;
      }
      fibre[b] = image.size() - 1;
    }

    std::vector<int> gamma_sizes(image.size(), 0);
    for (std::size_t a = 0, j = 0; a < pi1.block_count(); ++a) {
      while (j + 1 < image.size() && a > image[j]) {
        ++j;
      }
      gamma_sizes[j] += pi1.block_sizes()[a];
    }

    OrderedPartition sigma(n, std::move(sigma_sizes));
    OrderedPartition gamma(n, std::move(gamma_sizes));
    std::vector<std::size_t> identity(image.size());
    for (std::size_t j = 0; j < identity.size(); ++j) {
      identity[j] = j;
    }
    PiMorphism zeta{BlockMap(gamma, pi1, image)};
    PiMorphism u{BlockMap(sigma, gamma, std::move(identity))};
    PiMorphism v{BlockMap(pi2, sigma, std::move(fibre))};
    return {std::move(sigma), std::move(gamma), std::move(zeta), std::move(u), std::move(v)};
  }

  PiCategory::PiCategory(ChainSize n) : n_(n) {
    for (auto& sizes : compositions(n.value())) {
      OrderedPartition pi(n.value(), std::move(sizes));
      if (pi.is_non_identity()) {
        objects_.push_back({std::move(pi)});
      }
    }
    std::sort(objects_.begin(), objects_.end());
  }

  std::size_t PiCategory::index_of(PiObject const& a) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), a);
    if (it == objects_.end() || !(*it == a)) {
      throw DomainError(to_string(a.pi) + " is not an object of Pi_o(X_n)");
    }
    return static_cast<std::size_t>(it - objects_.begin());
  }

  std::vector<PiMorphism> PiCategory::hom(PiObject const& a, PiObject const& b) const {
    std::vector<PiMorphism> out;
    for (auto const& targets : monotone_sequences(static_cast<int>(b.pi.block_count()),
                                                  0,
                                                  static_cast<int>(a.pi.block_count()) - 1)) {
      out.push_back({BlockMap(b.pi, a.pi, {targets.begin(), targets.end()})});
    }
    return out;
  }

  NormalFactorization<PiMorphism> PiCategory::normal_factorize(PiMorphism const& f) const {
    auto fac = factorize_pi(f);
    return {std::move(fac.retraction), std::move(fac.isomorphism), std::move(fac.inclusion)};
  }

  Cone<PiMorphism> PiCategory::identity_cone(PiObject const& a) const {
    return idempotent_pi_cone(a, idempotent_for_kernel(a.pi));
  }

  Cone<PiMorphism> PiCategory::idempotent_pi_cone(PiObject const& pi, OPMap const& u) const {
    if (u.degree() != n_.value() || pi.pi.chain_size() != n_.value()) {
      throw DimensionError("partition cone on another chain");
    }
    std::vector<Point> section(pi.pi.block_count());
    for (std::size_t i = 0; i < section.size(); ++i) {
      section[i] = u(pi.pi.first(i));
      for (Point x = pi.pi.first(i); x <= pi.pi.last(i); ++x) {
        if (u(x) != section[i] || pi.pi.block_of(u(x)) != i) {
          throw ContractError(to_string(u) + " does not pick one point in each block of "
                              + to_string(pi.pi));
        }
      }
    }
    Cone<PiMorphism> cone{index_of(pi), {}};
    cone.components.reserve(objects_.size());
    for (auto const& c : objects_) {
      std::vector<std::size_t> targets(section.size());
      for (std::size_t i = 0; i < section.size(); ++i) {
        targets[i] = c.pi.block_of(section[i]);
      }
      cone.components.push_back({BlockMap(pi.pi, c.pi, std::move(targets))});
    }
    return cone;
  }

  FunctorReport check_functor_g(RCategory const& r, PiCategory const& pi, bool exhaustive) {
    return check_functor_isomorphism(
        r,
        pi,
        [](RObject const& a) { return functor_g(a); },
        [](RMorphism const& lambda) { return functor_g(lambda); },
        exhaustive);
  }

}  // namespace oxn
