#include "oxn/checks.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <set>

#include "oxn/category.hpp"
#include "oxn/combinatorics.hpp"
#include "oxn/errors.hpp"
#include "oxn/ideal_categories.hpp"
#include "oxn/partition_category.hpp"
#include "oxn/powerset_category.hpp"

namespace oxn {

  nlohmann::json CheckReport::to_json() const {
    return {{"check", check},
            {"n", n},
            {"status", passed ? "pass" : "fail"},
            {"counts", counts},
            {"witness", witness},
            {"elapsed_ms", elapsed_ms}};
  }

  std::string CheckReport::to_text() const {
    std::string out = std::string(passed ? "PASS" : "FAIL") + "  " + check
                      + "  n=" + std::to_string(n) + "  [";
    bool first = true;
    for (auto const& [key, value] : counts) {
      out += (first ? "" : " ") + key + "=" + std::to_string(value);
      first = false;
    }
    out += "]  " + std::to_string(elapsed_ms) + " ms";
    if (!witness.is_null()) {
      out += "\n  witness: " + witness.dump();
    }
    return out;
  }

  namespace {

    using Counts = std::map<std::string, std::int64_t>;

    struct Outcome {
      bool           passed = true;
      Counts         counts;
      nlohmann::json witness;

      void fail(nlohmann::json w) {
        if (passed) {
          witness = std::move(w);
        }
        passed = false;
      }
    };

    std::int64_t as_count(std::size_t x) {
      return static_cast<std::int64_t>(x);
    }

    template <CategoryProvider C>
    void record_normal_category(Outcome& out, C const& cat, std::string const& prefix) {
      auto const report = check_normal_category(cat);
      out.counts[prefix + "objects"]        = as_count(report.objects);
      out.counts[prefix + "inclusions"]     = as_count(report.inclusions);
      out.counts[prefix + "morphisms"]      = as_count(report.morphisms);
      out.counts[prefix + "identity_cones"] = as_count(report.identity_cones);
      if (!report.ok()) {
        out.fail({{"category", prefix}, {"failures", report.failures}});
      }
    }

    void record_functor(Outcome& out, FunctorReport const& report) {
      out.counts["source_objects"]   = as_count(report.source_objects);
      out.counts["target_objects"]   = as_count(report.target_objects);
      out.counts["source_morphisms"] = as_count(report.source_morphisms);
      out.counts["target_morphisms"] = as_count(report.target_morphisms);
      out.counts["composable_pairs"] = as_count(report.composable_pairs);
      out.counts["exhaustive"]       = report.exhaustive ? 1 : 0;
      if (report.source_morphisms != report.target_morphisms) {
        out.fail({{"reason", "morphism counts differ"}});
      }
      if (!report.ok()) {
        out.fail({{"failures", report.failures}});
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Individual checks
    ////////////////////////////////////////////////////////////////////////

    Outcome check_counts(ChainSize n, CheckOptions const&) {
      Outcome    out;
      int const  m        = n.value();
      auto const elements = enumerate_oxn(n);
      auto const closed   = static_cast<std::int64_t>(binomial(2 * m - 1, m - 1)) - 1;
      out.counts["oxn"]         = as_count(elements.size());
      out.counts["closed_form"] = closed;
      std::size_t idempotents   = 0;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!elements[i].is_singular() || (i > 0 && !(elements[i - 1] < elements[i]))) {
          out.fail({{"reason", "enumeration is not strictly increasing or not singular"},
                    {"element", to_string(elements[i])}});
          break;
        }
        idempotents += elements[i].is_idempotent() ? 1 : 0;
      }
      out.counts["idempotents"] = as_count(idempotents);
      out.counts["images"]      = (std::int64_t{1} << m) - 2;
      out.counts["kernels"]     = (std::int64_t{1} << (m - 1)) - 1;
      if (out.counts["oxn"] != closed) {
        out.fail({{"reason", "count differs from C(2n-1, n-1) - 1"},
                  {"enumerated", out.counts["oxn"]},
                  {"closed_form", closed}});
      }
      return out;
    }

    Outcome check_green(ChainSize n, CheckOptions const&) {
      Outcome           out;
      auto const        elements = enumerate_oxn(n);
      FiniteSemigroup   s        = oxn_semigroup(n);
      GreenOracle const oracle(s);
      std::size_t       pairs = 0;
      for (GreenRelation rel :
           {GreenRelation::R, GreenRelation::L, GreenRelation::H, GreenRelation::J}) {
        for (std::size_t a = 0; a < elements.size(); ++a) {
          for (std::size_t b = 0; b < elements.size(); ++b) {
            ++pairs;
            bool const direct = green(elements[a], elements[b], rel);
            bool const ideal  = oracle.related(static_cast<FiniteSemigroup::index_type>(a),
                                              static_cast<FiniteSemigroup::index_type>(b),
                                              rel);
            if (direct != ideal) {
              out.fail({{"f", to_string(elements[a])},
                        {"g", to_string(elements[b])},
                        {"relation", to_string(rel)},
                        {"characterization", direct},
                        {"ideal_oracle", ideal}});
            }
          }
        }
      }
      out.counts["pairs"]    = as_count(pairs);
      out.counts["elements"] = as_count(elements.size());
      return out;
    }

    Outcome check_factorize_l(ChainSize n, CheckOptions const&) {
      Outcome out;
      record_normal_category(out, LCategory(n), "");
      return out;
    }

    Outcome check_factorize_r(ChainSize n, CheckOptions const&) {
      Outcome out;
      record_normal_category(out, RCategory(n), "");
      return out;
    }

    Outcome check_factorize_po(ChainSize n, CheckOptions const&) {
      Outcome out;
      record_normal_category(out, PCategory(n), "");
      return out;
    }

    // sigma and gamma recomputed point by point
    OrderedPartition fibre_partition(BlockMap const& eta) {
      auto const&      pi2 = eta.from();
      std::vector<int> labels;
      for (Point x = 1; x <= pi2.chain_size(); ++x) {
        labels.push_back(static_cast<int>(eta(pi2.block_of(x))));
      }
      return OrderedPartition::from_labels(labels);
    }

    OrderedPartition absorbed_partition(BlockMap const& eta) {
      auto const&           pi1 = eta.to();
      std::set<std::size_t> hit(eta.targets().begin(), eta.targets().end());
      std::vector<int>      labels;
      for (Point x = 1; x <= pi1.chain_size(); ++x) {
        std::size_t const a  = pi1.block_of(x);
        auto              it = hit.lower_bound(a);
        labels.push_back(static_cast<int>(it == hit.end() ? *hit.rbegin() : *it));
      }
      return OrderedPartition::from_labels(labels);
    }

    Outcome check_factorize_pi(ChainSize n, CheckOptions const& options) {
      Outcome          out;
      PiCategory const pi(n);
      record_normal_category(out, pi, "");

      std::size_t checked = 0;
      auto        verify  = [&](PiMorphism const& m) {
        ++checked;
        auto const fac   = factorize_pi(m);
        auto const pi1   = m.source();
        auto const pi2   = m.target();
        bool const match = fac.sigma == fibre_partition(m.eta)
                           && fac.gamma == absorbed_partition(m.eta);
        bool const shape
            = pi.compose(pi.compose(fac.retraction, fac.isomorphism), fac.inclusion) == m
              && fac.isomorphism.eta.is_bijective()
              && pi.compose(pi.inclusion({fac.gamma}, pi1), fac.retraction)
                     == pi.identity({fac.gamma})
              && fac.inclusion == pi.inclusion({fac.sigma}, pi2);
        if (!match || !shape) {
          out.fail({{"morphism", pi.label(m)},
                    {"sigma", to_string(fac.sigma)},
                    {"gamma", to_string(fac.gamma)},
                    {"oracle_sigma", to_string(fibre_partition(m.eta))},
                    {"oracle_gamma", to_string(absorbed_partition(m.eta))},
                    {"shape_ok", shape}});
        }
      };

      if (n.value() <= 4) {
        for (auto const& a : pi.objects()) {
          for (auto const& b : pi.objects()) {
            for (auto const& m : pi.hom(a, b)) {
              verify(m);
            }
          }
        }
        out.counts["sampled"] = 0;
      } else {
        std::mt19937_64                            rng(options.seed);
        auto const&                                objects = pi.objects();
        std::uniform_int_distribution<std::size_t> pick(0, objects.size() - 1);
        for (int i = 0; i < 10'000; ++i) {
          auto const& a    = objects[pick(rng)];
          auto const& b    = objects[pick(rng)];
          auto const  homs = pi.hom(a, b);
          std::uniform_int_distribution<std::size_t> choose(0, homs.size() - 1);
          verify(homs[choose(rng)]);
        }
        out.counts["sampled"] = 1;
        out.counts["seed"]    = static_cast<std::int64_t>(options.seed);
      }
      out.counts["factorizations"] = as_count(checked);
      return out;
    }

    Outcome check_cones_principal(ChainSize n, CheckOptions const& options) {
      Outcome         out;
      LCategory const l(n);
      auto            enumerated = enumerate_normal_cones(l);
      std::vector<Cone<LMorphism>> principal;
      for (auto const& alpha : l.elements()) {
        principal.push_back(l.principal_cone(alpha));
      }
      if (options.inject_fault) {
        // overwrite one component of the first cone that admits another
        // morphism there
        bool injected = false;
        for (auto& cone : principal) {
          for (std::size_t i = 0; i < cone.components.size() && !injected; ++i) {
            for (auto const& f : l.hom(l.objects()[i], l.objects()[cone.vertex])) {
              if (!(f == cone.components[i])) {
                cone.components[i] = f;
                injected           = true;
                break;
              }
            }
          }
          if (injected) {
            break;
          }
        }
      }
      std::set<Cone<LMorphism>> const a(enumerated.begin(), enumerated.end());
      std::set<Cone<LMorphism>> const b(principal.begin(), principal.end());
      out.counts["enumerated"]         = as_count(a.size());
      out.counts["principal"]          = as_count(b.size());
      out.counts["principal_distinct"] = b.size() == principal.size() ? 1 : 0;
      for (std::size_t i = 0; i < principal.size(); ++i) {
        if (!a.contains(principal[i])) {
          out.fail({{"reason", "principal cone not found by enumeration"},
                    {"alpha", to_string(l.elements()[i])},
                    {"cone", cone_json(l, principal[i])},
                    {"valid", validate_cone(l, principal[i])}});
        }
      }
      for (auto const& cone : a) {
        if (!b.contains(cone)) {
          out.fail({{"reason", "normal cone is not principal"}, {"cone", cone_json(l, cone)}});
        }
      }
      return out;
    }

    template <CategoryProvider C, typename ConeOfAlpha>
    void record_cone_iso(Outcome& out, C const& cat, ConeOfAlpha&& cone_of_alpha) {
      ChainSize const n        = cat.chain_size();
      auto const      elements = enumerate_oxn(n);
      auto const      cones    = enumerate_normal_cones(cat);
      FiniteSemigroup oxn      = oxn_semigroup(n);
      FiniteSemigroup cone_sg  = cone_semigroup(cat, cones);
      out.counts["oxn"]   = as_count(oxn.size());
      out.counts["cones"] = as_count(cones.size());

      auto const iso = find_isomorphism(oxn, cone_sg);
      out.counts["isomorphism_found"] = iso ? 1 : 0;
      if (!iso) {
        out.fail({{"reason", "no isomorphism between OX_n and the cone semigroup"}});
      }

      ElementMap principal;
      for (auto const& alpha : elements) {
        auto const cone = cone_of_alpha(cat, alpha);
        auto const it   = std::lower_bound(cones.begin(), cones.end(), cone);
        if (it == cones.end() || !(*it == cone)) {
          out.fail({{"reason", "cone of alpha is not an enumerated normal cone"},
                    {"alpha", to_string(alpha)}});
          return;
        }
        principal.assignment.push_back(
            static_cast<FiniteSemigroup::index_type>(it - cones.begin()));
      }
      bool const hom = is_homomorphism(oxn, cone_sg, principal);
      bool const bij = is_bijective(oxn, cone_sg, principal);
      out.counts["alpha_map_homomorphism"] = hom ? 1 : 0;
      out.counts["alpha_map_bijective"]    = bij ? 1 : 0;
      if (!hom || !bij) {
        out.fail({{"reason", "alpha -> cone of alpha is not an isomorphism"},
                  {"homomorphism", hom},
                  {"bijective", bij}});
      }
    }

    Outcome check_tl_iso(ChainSize n, CheckOptions const&) {
      Outcome out;
      record_cone_iso(out, LCategory(n), [](LCategory const& l, OPMap const& alpha) {
        return l.principal_cone(alpha);
      });
      return out;
    }

    Outcome check_tpo_iso(ChainSize n, CheckOptions const&) {
      Outcome out;
      record_cone_iso(out, PCategory(n), [](PCategory const& p, OPMap const& alpha) {
        return p.cone_of(alpha);
      });
      return out;
    }

    Outcome check_f_iso(ChainSize n, CheckOptions const&) {
      Outcome out;
      record_functor(out, check_functor_f(LCategory(n), PCategory(n), n.value() <= 4));
      return out;
    }

    Outcome check_g_iso(ChainSize n, CheckOptions const&) {
      Outcome out;
      record_functor(out, check_functor_g(RCategory(n), PiCategory(n), n.value() <= 4));
      return out;
    }

    Outcome check_phi(ChainSize n, CheckOptions const&) {
      Outcome         out;
      RCategory const r(n);
      // throws ConstructionError when the image is not closed
      PhiRepresentation rep = phi_representation(r);
      auto const& elements = r.elements();
      std::size_t normal   = 0;
      for (std::size_t i = 0; i < rep.cones.size(); ++i) {
        if (validate_cone(r, rep.cones[i]) && is_normal(r, rep.cones[i])) {
          ++normal;
        } else {
          out.fail({{"reason", "dual principal cone is not normal"},
                    {"alpha", to_string(elements[i])}});
        }
      }
      std::size_t separated = 0, related_pairs = 0;
      for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = 0; b < elements.size(); ++b) {
          if (a == b || !green(elements[a], elements[b], GreenRelation::R)) {
            continue;
          }
          ++related_pairs;
          OPMap const       e = separating_idempotent(elements[a], elements[b]);
          std::size_t const c = r.index_of({kernel(e)});
          if (!(compose(elements[a], e) == compose(elements[b], e))
              && !(rep.cones[a].components[c] == rep.cones[b].components[c])) {
            ++separated;
          } else {
            out.fail({{"reason", "separator idempotent does not separate"},
                      {"alpha", to_string(elements[a])},
                      {"beta", to_string(elements[b])},
                      {"e", to_string(e)}});
          }
        }
      }
      bool const image_iso = find_isomorphism(rep.oxn, rep.image).has_value();
      out.counts["oxn"]                    = as_count(rep.oxn.size());
      out.counts["image"]                  = as_count(rep.image.size());
      out.counts["normal_cones"]           = as_count(normal);
      out.counts["injective"]              = rep.injective ? 1 : 0;
      out.counts["R_related_pairs"]        = as_count(related_pairs);
      out.counts["separated_pairs"]        = as_count(separated);
      out.counts["phi_ab_eq_phi_b_phi_a"]  = rep.reverses_products ? 1 : 0;
      out.counts["phi_ab_eq_phi_a_phi_b"]  = rep.preserves_products ? 1 : 0;
      out.counts["image_isomorphic_to_oxn"] = image_iso ? 1 : 0;
      if (!rep.injective) {
        out.fail({{"reason", "alpha -> lambda^alpha is not injective"}});
      }
      // lambda-cones act on the left, so the image is a homomorphic copy
      // of OX_n for the product read right to left.
      if (!rep.reverses_products) {
        out.fail({{"reason", "phi(ab) differs from phi(b) . phi(a)"}});
      }
      return out;
    }

    template <CategoryProvider C>
    void record_cone_regular(Outcome& out, C const& cat, std::string const& prefix) {
      auto const      cones = enumerate_normal_cones(cat);
      FiniteSemigroup s     = cone_semigroup(cat, cones);
      bool const      reg   = is_regular(s);
      std::size_t     idempotents = 0;
      for (auto const& cone : cones) {
        bool const squares = cone_mul(cat, cone, cone) == cone;
        bool const unit
            = cone.components[cone.vertex] == cat.identity(cat.objects()[cone.vertex]);
        idempotents += squares ? 1 : 0;
        if (squares != unit) {
          out.fail({{"category", prefix},
                    {"reason", "idempotence criterion fails"},
                    {"cone", cone_json(cat, cone)}});
        }
      }
      out.counts[prefix + "cones"]       = as_count(cones.size());
      out.counts[prefix + "idempotents"] = as_count(idempotents);
      out.counts[prefix + "regular"]     = reg ? 1 : 0;
      if (!reg) {
        out.fail({{"category", prefix}, {"reason", "cone semigroup is not regular"}});
      }
    }

    Outcome check_cone_regular(ChainSize n, CheckOptions const&) {
      Outcome out;
      record_cone_regular(out, LCategory(n), "L_");
      record_cone_regular(out, PCategory(n), "Po_");
      return out;
    }

    struct Registered {
      CheckInfo                                             info;
      std::function<Outcome(ChainSize, CheckOptions const&)> run;
    };

    std::vector<Registered> const& registry() {
      static std::vector<Registered> const checks = {
          {{"counts", 12, "|OX_n| against C(2n-1, n-1) - 1"}, check_counts},
          {{"green", 5, "Green's relations against principal ideals"}, check_green},
          {{"factorize-L", 5, "normal category axioms of L(OX_n)"}, check_factorize_l},
          {{"factorize-R", 5, "normal category axioms of R(OX_n)"}, check_factorize_r},
          {{"factorize-Po", 5, "normal category axioms of P_o(X_n)"}, check_factorize_po},
          {{"factorize-Pi", 5, "axioms and factorizations of Pi_o(X_n)"}, check_factorize_pi},
          {{"cones-principal", 4, "normal cones of L(OX_n) are principal"},
           check_cones_principal},
          {{"TL-iso", 5, "OX_n is isomorphic to TL(OX_n)"}, check_tl_iso},
          {{"F-iso", 5, "F : L(OX_n) -> P_o(X_n) is an isomorphism"}, check_f_iso},
          {{"G-iso", 5, "G : R(OX_n) -> Pi_o(X_n) is an isomorphism"}, check_g_iso},
          {{"TPo-iso", 5, "OX_n is isomorphic to TP_o(X_n)"}, check_tpo_iso},
          {{"phi-faithful", 5, "alpha -> lambda^alpha is faithful"}, check_phi},
          {{"cone-regular", 4, "cone semigroups are regular"}, check_cone_regular},
      };
      return checks;
    }

  }  // namespace

  std::vector<CheckInfo> const& registered_checks() {
    static std::vector<CheckInfo> const infos = [] {
      std::vector<CheckInfo> out;
      for (auto const& r : registry()) {
        out.push_back(r.info);
      }
      return out;
    }();
    return infos;
  }

  CheckReport run_check(std::string const& name, ChainSize n, CheckOptions const& options) {
    auto const& checks = registry();
    auto        it     = std::find_if(checks.begin(), checks.end(), [&](Registered const& r) {
      return r.info.name == name;
    });
    if (it == checks.end()) {
      throw DomainError("unknown check: " + name);
    }
    if (n.value() > it->info.max_n) {
      throw DomainError("check " + name + " supports n <= " + std::to_string(it->info.max_n));
    }
    auto const  start = std::chrono::steady_clock::now();
    CheckReport report;
    report.check = name;
    report.n     = n.value();
    try {
      Outcome out    = it->run(n, options);
      report.passed  = out.passed;
      report.counts  = std::move(out.counts);
      report.witness = std::move(out.witness);
    } catch (Error const& e) {
      report.passed  = false;
      report.witness = {{"exception", e.what()}};
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
  }

  std::vector<CheckReport> run_all(ChainSize n, CheckOptions const& options) {
    std::vector<CheckReport> out;
    for (auto const& info : registered_checks()) {
      if (n.value() <= info.max_n) {
        out.push_back(run_check(info.name, n, options));
      }
    }
    return out;
  }

  FiniteSemigroup cayley_semigroup(std::string const& selector, ChainSize n) {
    int const m = n.value();
    if (selector == "oxn") {
      if (binomial(2 * m - 1, m - 1) - 1 > max_export_order) {
        throw ResourceError("OX_" + std::to_string(m) + " has more than "
                            + std::to_string(max_export_order) + " elements");
      }
      return oxn_semigroup(n);
    }
    if (selector != "TL" && selector != "TR" && selector != "TPo" && selector != "TPi") {
      throw DomainError("unknown semigroup selector: " + selector);
    }
    if (m > 5) {
      throw ResourceError("cone semigroups are exported for n <= 5 only");
    }
    if (selector == "TL") {
      LCategory const c(n);
      return cone_semigroup(c, enumerate_normal_cones(c));
    }
    if (selector == "TR") {
      RCategory const c(n);
      return cone_semigroup(c, enumerate_normal_cones(c));
    }
    if (selector == "TPo") {
      PCategory const c(n);
      return cone_semigroup(c, enumerate_normal_cones(c));
    }
    PiCategory const c(n);
    return cone_semigroup(c, enumerate_normal_cones(c));
  }

  void export_cayley(std::string const& selector, ChainSize n, std::string const& path) {
    std::string const text = cayley_json(cayley_semigroup(selector, n));
    std::ofstream     file(path);
    if (!file) {
      throw ResourceError("cannot open " + path + " for writing");
    }
    file << text << '\n';
    if (!file) {
      throw ResourceError("failed writing " + path);
    }
  }

}  // namespace oxn
