// Acceptance run: one PASS/FAIL line per criterion.  Exit status is 0 only
// when every criterion passes inside its time limit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "oxn/category.hpp"
#include "oxn/errors.hpp"
#include "oxn/ideal_categories.hpp"
#include "oxn/partition_category.hpp"
#include "oxn/powerset_category.hpp"
#include "oxn/semigroup.hpp"

using namespace oxn;

namespace {

  struct Outcome {
    bool        passed = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok && passed) {
        passed = false;
        detail = what;
      }
    }
  };

  struct Criterion {
    int                      id;
    std::string              name;
    std::int64_t             limit_ms;
    std::function<Outcome()> run;
  };

  // J-oracle: the two-sided ideal S^1 a S^1
  std::set<oracle::Map> two_sided_ideal(std::vector<oracle::Map> const& s, oracle::Map const& a) {
    std::set<oracle::Map> out;
    for (auto const& x : oracle::left_ideal(s, a)) {
      for (auto const& y : oracle::right_ideal(s, x)) {
        out.insert(y);
      }
    }
    return out;
  }

  Outcome cardinalities() {
    Outcome                          out;
    std::map<int, std::size_t> const expected{{3, 9}, {4, 34}, {5, 125}, {6, 461}, {7, 1715}};
    std::string                      sizes;
    for (auto const& [n, size] : expected) {
      auto const  maps   = enumerate_oxn(ChainSize(n));
      auto const  brute  = oracle::monotone_singular(n);
      std::size_t closed = static_cast<std::size_t>(oracle::binomial(2 * n - 1, n - 1) - 1);
      out.require(maps.size() == size && closed == size && brute.size() == size,
                  "|OX_" + std::to_string(n) + "| = " + std::to_string(maps.size()));
      for (std::size_t i = 0; i < maps.size() && i < brute.size(); ++i) {
        out.require(maps[i].images() == brute[i], "enumeration differs from brute force");
      }
      sizes += (sizes.empty() ? "" : ",") + std::to_string(maps.size());
    }
    out.detail = out.passed ? "sizes " + sizes : out.detail;
    return out;
  }

  Outcome green_relations() {
    Outcome     out;
    std::size_t pairs = 0;
    for (int n = 3; n <= 5; ++n) {
      auto const maps = enumerate_oxn(ChainSize(n));
      auto const s    = oracle::monotone_singular(n);
      std::vector<std::set<oracle::Map>> left, right, both;
      for (auto const& f : maps) {
        left.push_back(oracle::left_ideal(s, f.images()));
        right.push_back(oracle::right_ideal(s, f.images()));
        both.push_back(two_sided_ideal(s, f.images()));
      }
      for (std::size_t a = 0; a < maps.size(); ++a) {
        for (std::size_t b = 0; b < maps.size(); ++b) {
          ++pairs;
          bool const l = left[a] == left[b];
          bool const r = right[a] == right[b];
          out.require(green(maps[a], maps[b], GreenRelation::L) == l, "L differs");
          out.require(green(maps[a], maps[b], GreenRelation::R) == r, "R differs");
          out.require(green(maps[a], maps[b], GreenRelation::H) == (l && r), "H differs");
          out.require(green(maps[a], maps[b], GreenRelation::J) == (both[a] == both[b]),
                      "J differs");
        }
      }
    }
    out.detail = out.passed ? std::to_string(pairs) + " pairs" : out.detail;
    return out;
  }

  template <CategoryProvider C>
  Outcome axioms(std::string const& name) {
    Outcome     out;
    std::size_t morphisms = 0;
    for (int n = 3; n <= 4; ++n) {
      auto const report = check_normal_category(C(ChainSize(n)));
      morphisms += report.morphisms;
      out.require(report.ok() && report.identity_cones == report.objects,
                  name + " n=" + std::to_string(n) + ": "
                      + (report.failures.empty() ? "missing idempotent cone"
                                                 : report.failures.front()));
    }
    out.detail = out.passed ? name + " " + std::to_string(morphisms) + " morphisms" : out.detail;
    return out;
  }

  Outcome normal_category_axioms() {
    // each category gets its own share of the limit
    Outcome out;
    std::string detail;
    auto run = [&](auto&& f) {
      auto const start = std::chrono::steady_clock::now();
      Outcome    o     = f();
      auto const ms    = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      out.require(o.passed, o.detail);
      out.require(ms < 60000, o.detail + " over 60 s");
      detail += (detail.empty() ? "" : "; ") + o.detail;
    };
    run([] { return axioms<LCategory>("L"); });
    run([] { return axioms<PCategory>("Po"); });
    run([] { return axioms<RCategory>("R"); });
    run([] { return axioms<PiCategory>("Pi"); });
    out.detail = out.passed ? detail : out.detail;
    return out;
  }

  Outcome cones_are_principal() {
    Outcome     out;
    std::string sizes;
    for (int n = 3; n <= 4; ++n) {
      LCategory const           l{ChainSize(n)};
      auto const                cones = enumerate_normal_cones(l);
      std::set<Cone<LMorphism>> enumerated(cones.begin(), cones.end()), principal;
      for (auto const& alpha : l.elements()) {
        principal.insert(l.principal_cone(alpha));
      }
      out.require(enumerated == principal && cones.size() == enumerated.size(),
                  "n=" + std::to_string(n) + ": enumerated cones differ from principal cones");
      sizes += (sizes.empty() ? "" : ",") + std::to_string(enumerated.size());
    }
    out.detail = out.passed ? "cones " + sizes : out.detail;
    return out;
  }

  // the map alpha -> cone_of(alpha) into the semigroup of all normal cones
  template <CategoryProvider C, typename ConeOfAlpha>
  bool element_map_is_isomorphism(C const& cat, FiniteSemigroup const& s,
                                  FiniteSemigroup const& t, std::vector<OPMap> const& elements,
                                  ConeOfAlpha&& cone_of) {
    ElementMap phi;
    for (auto const& alpha : elements) {
      auto const index = t.find(cone_label(cat, cone_of(alpha)));
      if (!index) {
        return false;
      }
      phi.assignment.push_back(*index);
    }
    return is_homomorphism(s, t, phi) && is_bijective(s, t, phi);
  }

  Outcome cone_semigroups_isomorphic() {
    Outcome out;
    for (int n = 3; n <= 5; ++n) {
      ChainSize const size(n);
      auto const      s = oxn_semigroup(size);
      LCategory const l(size);
      PCategory const p(size);
      auto const      tl  = cone_semigroup(l, enumerate_normal_cones(l));
      auto const      tpo = cone_semigroup(p, enumerate_normal_cones(p));
      std::string const at = " at n=" + std::to_string(n);
      out.require(find_isomorphism(s, tl).has_value(), "no isomorphism OX_n -> TL" + at);
      out.require(find_isomorphism(s, tpo).has_value(), "no isomorphism OX_n -> TPo" + at);
      out.require(element_map_is_isomorphism(l, s, tl, l.elements(),
                                             [&](OPMap const& a) { return l.principal_cone(a); }),
                  "alpha -> rho^alpha is not an isomorphism" + at);
      out.require(element_map_is_isomorphism(p, s, tpo, l.elements(),
                                             [&](OPMap const& a) { return p.cone_of(a); }),
                  "alpha -> cone_of(alpha) is not an isomorphism" + at);
    }
    out.detail = out.passed ? "TL and TPo isomorphic to OX_n for n=3,4,5" : out.detail;
    return out;
  }

  Outcome functor_isomorphisms() {
    Outcome out;
    for (int n = 3; n <= 5; ++n) {
      ChainSize const size(n);
      bool const      exhaustive = n <= 4;
      auto const      f = check_functor_f(LCategory(size), PCategory(size), exhaustive);
      auto const      g = check_functor_g(RCategory(size), PiCategory(size), exhaustive);
      std::string const at = " at n=" + std::to_string(n);
      out.require(f.ok(), "F" + at + ": " + (f.ok() ? "" : f.failures.front()));
      out.require(g.ok(), "G" + at + ": " + (g.ok() ? "" : g.failures.front()));
      out.require(f.exhaustive == exhaustive && g.exhaustive == exhaustive, "wrong mode" + at);
    }
    out.detail = out.passed ? "exhaustive n=3,4; counts n=5" : out.detail;
    return out;
  }

  void check_factorization(Outcome& out, PiCategory const& cat, PiMorphism const& m) {
    auto const  f     = factorize_pi(m);
    std::string label = cat.label(m);
    out.require(pi_compose(pi_compose(f.retraction, f.isomorphism), f.inclusion) == m,
                "factors of " + label + " do not recompose");
    out.require(f.isomorphism.eta.is_bijective(), "middle factor of " + label + " not invertible");
    out.require(f.sigma == oracle::fibre_partition(m.eta), "sigma of " + label);
    out.require(f.gamma == oracle::absorbed_partition(m.eta), "gamma of " + label);
    PiObject const gamma{f.gamma};
    out.require(f.retraction.target() == gamma, "retraction of " + label + " misses gamma");
    out.require(pi_leq(gamma, m.source())
                    && pi_compose(pi_inclusion_and_retraction(gamma, m.source()).first,
                                  f.retraction)
                           == cat.identity(gamma),
                "retraction of " + label + " does not split its inclusion");
  }

  Outcome partition_factorization() {
    Outcome     out;
    std::size_t checked = 0;
    for (int n = 3; n <= 4; ++n) {
      PiCategory const cat{ChainSize(n)};
      for (auto const& a : cat.objects()) {
        for (auto const& b : cat.objects()) {
          for (auto const& m : cat.hom(a, b)) {
            check_factorization(out, cat, m);
            ++checked;
          }
        }
      }
    }
    // n = 5: 10^4 draws, uniform over source, target and block map
    PiCategory const                cat{ChainSize(5)};
    std::mt19937_64                 rng(20261018);
    std::size_t const               objects = cat.objects().size();
    std::uniform_int_distribution<std::size_t> pick(0, objects - 1);
    for (int i = 0; i < 10000; ++i) {
      auto const& a = cat.objects()[pick(rng)];
      auto const& b = cat.objects()[pick(rng)];
      // a uniformly random weakly increasing block map b.pi -> a.pi
      std::uniform_int_distribution<std::size_t> value(0, a.pi.block_count() - 1);
      std::vector<std::size_t>                   targets(b.pi.block_count());
      for (auto& t : targets) {
        t = value(rng);
      }
      std::sort(targets.begin(), targets.end());
      check_factorization(out, cat, PiMorphism{BlockMap(b.pi, a.pi, targets)});
      ++checked;
    }
    out.detail = out.passed ? std::to_string(checked) + " morphisms" : out.detail;
    return out;
  }

  Outcome phi_representation_check() {
    Outcome     out;
    std::string laws;
    for (int n = 3; n <= 5; ++n) {
      RCategory const   r{ChainSize(n)};
      std::string const at = " at n=" + std::to_string(n);
      std::optional<PhiRepresentation> maybe;
      try {
        maybe.emplace(phi_representation(r));
      } catch (ConstructionError const& e) {
        out.require(false, std::string("image not closed") + at + ": " + e.what());
        continue;
      }
      auto const& rep = *maybe;
      for (auto const& c : rep.cones) {
        out.require(validate_cone(r, c) && is_normal(r, c), "lambda^alpha not normal" + at);
      }
      out.require(rep.injective, "not injective" + at);
      // lambda cones act on the left: the product is read right to left
      out.require(rep.reverses_products, "phi(ab) != phi(b).phi(a)" + at);
      laws += " n=" + std::to_string(n) + " ab->phi(b)phi(a):"
              + (rep.reverses_products ? "yes" : "no")
              + " ab->phi(a)phi(b):" + (rep.preserves_products ? "yes" : "no");
      std::size_t separated = 0;
      for (std::size_t a = 0; a < r.elements().size(); ++a) {
        for (std::size_t b = 0; b < r.elements().size(); ++b) {
          auto const& alpha = r.elements()[a];
          auto const& beta  = r.elements()[b];
          if (a == b || !green(alpha, beta, GreenRelation::R)) {
            continue;
          }
          OPMap const e = separating_idempotent(alpha, beta);
          auto const  i = r.index_of({kernel(e)});
          out.require(e.is_idempotent() && !(rep.cones[a].components[i] == rep.cones[b].components[i]),
                      "separator fails for " + to_string(alpha) + ", " + to_string(beta));
          ++separated;
        }
      }
      laws += " separated=" + std::to_string(separated);
    }
    out.detail = out.passed ? "injective, closed;" + laws : out.detail;
    return out;
  }

  template <CategoryProvider C>
  void cone_algebra(Outcome& out, C const& cat, std::string const& name) {
    auto const                cones = enumerate_normal_cones(cat);
    std::set<ConeOf<C>> const all(cones.begin(), cones.end());
    std::vector<std::vector<std::size_t>> table(cones.size(), std::vector<std::size_t>(cones.size()));
    std::map<ConeOf<C>, std::size_t> index;
    for (std::size_t i = 0; i < cones.size(); ++i) {
      index.emplace(cones[i], i);
    }
    for (std::size_t a = 0; a < cones.size(); ++a) {
      for (std::size_t b = 0; b < cones.size(); ++b) {
        auto const p  = cone_mul(cat, cones[a], cones[b]);
        auto const it = index.find(p);
        if (it == index.end()) {
          out.require(false, name + ": product of normal cones is not a normal cone");
          return;
        }
        table[a][b] = it->second;
      }
    }
    for (std::size_t a = 0; a < cones.size(); ++a) {
      for (std::size_t b = 0; b < cones.size(); ++b) {
        for (std::size_t c = 0; c < cones.size(); ++c) {
          out.require(table[table[a][b]][c] == table[a][table[b][c]], name + ": not associative");
        }
      }
    }
    // regular: every a has some x with a x a = a
    for (std::size_t a = 0; a < cones.size(); ++a) {
      bool regular = false;
      for (std::size_t x = 0; x < cones.size() && !regular; ++x) {
        regular = table[table[a][x]][a] == a;
      }
      out.require(regular, name + ": cone " + cone_label(cat, cones[a]) + " is not regular");
      bool const unit = cones[a].components[cones[a].vertex]
                        == cat.identity(cat.objects()[cones[a].vertex]);
      out.require((table[a][a] == a) == unit, name + ": idempotence criterion fails");
    }
  }

  Outcome cone_semigroup_algebra() {
    Outcome out;
    for (int n = 3; n <= 4; ++n) {
      std::string const at = " n=" + std::to_string(n);
      cone_algebra(out, LCategory(ChainSize(n)), "L" + at);
      cone_algebra(out, PCategory(ChainSize(n)), "Po" + at);
    }
    out.detail = out.passed ? "L and Po at n=3,4" : out.detail;
    return out;
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "cardinalities", 1000, cardinalities},
      {2, "green-relations", 30000, green_relations},
      {3, "normal-category-axioms", 4 * 60000, normal_category_axioms},
      {4, "normal-cones-are-principal", 60000, cones_are_principal},
      {5, "cone-semigroups-isomorphic-to-oxn", 60000, cone_semigroups_isomorphic},
      {6, "functors-F-and-G", 60000, functor_isomorphisms},
      {7, "partition-factorization", 120000, partition_factorization},
      {8, "phi-representation", 60000, phi_representation_check},
      {9, "cone-semigroup-algebra", 60000, cone_semigroup_algebra},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out.passed = false;
      out.detail = std::string("exception: ") + e.what();
    }
    auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    bool const in_time = ms < c.limit_ms;
    bool const passed  = out.passed && in_time;
    failures += passed ? 0 : 1;
    std::printf("%s  %d  %-34s %7lld ms (limit %lld ms)  %s%s\n",
                passed ? "PASS" : "FAIL",
                c.id,
                c.name.c_str(),
                static_cast<long long>(ms),
                static_cast<long long>(c.limit_ms),
                out.detail.c_str(),
                in_time ? "" : "  [time limit exceeded]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
