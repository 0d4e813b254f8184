#include <doctest.h>

#include <set>

#include "oxn/category.hpp"
#include "oxn/errors.hpp"
#include "oxn/ideal_categories.hpp"
#include "oxn/partition_category.hpp"
#include "oxn/powerset_category.hpp"

using namespace oxn;

namespace {
  OPMap m(std::vector<Point> v) {
    return OPMap(std::move(v));
  }

  template <CategoryProvider C>
  std::set<typename C::Object> normal_objects(C const& cat, ConeOf<C> const& cone) {
    std::set<typename C::Object> out;
    for (std::size_t i : normal_set(cat, cone)) {
      out.insert(cat.objects()[i]);
    }
    return out;
  }
}  // namespace

TEST_CASE("validate_cone") {
  LCategory const l(ChainSize(3));
  for (auto const& alpha : l.elements()) {
    CHECK(validate_cone(l, l.principal_cone(alpha)));
  }
  auto cone = l.principal_cone(m({1, 1, 2}));
  // component at {1,3} replaced by the constant map to 1; the component at
  // {3} still sends 3 to 2
  auto const i = l.index_of({Subset(3, {1, 3})});
  cone.components[i] = LMorphism{SubMap(Subset(3, {1, 3}), Subset(3, {1, 2}), {1, 1})};
  CHECK_FALSE(validate_cone(l, cone));
  CHECK_THROWS_AS(normal_set(l, cone), ContractError);

  auto wrong_target = l.principal_cone(m({1, 1, 2}));
  wrong_target.components[0] = l.identity(l.objects()[0]);
  CHECK_FALSE(validate_cone(l, wrong_target));
}

TEST_CASE("normal sets") {
  LCategory const l(ChainSize(3));
  CHECK(normal_objects(l, l.principal_cone(m({1, 1, 2})))
        == std::set<LObject>{{Subset(3, {1, 3})}, {Subset(3, {2, 3})}});
  CHECK(normal_objects(l, l.principal_cone(m({2, 2, 2})))
        == std::set<LObject>{{Subset(3, {1})}, {Subset(3, {2})}, {Subset(3, {3})}});

  // the normal set of rho^alpha is the set of images of idempotents with
  // the kernel of alpha
  for (int n = 3; n <= 4; ++n) {
    LCategory const cat{ChainSize(n)};
    for (auto const& alpha : cat.elements()) {
      std::set<LObject> expected;
      for (auto const& e : cat.elements()) {
        if (e.is_idempotent() && kernel(e) == kernel(alpha)) {
          expected.insert({image(e)});
        }
      }
      CHECK(normal_objects(cat, cat.principal_cone(alpha)) == expected);
    }
  }
}

TEST_CASE("cone_mul") {
  LCategory const l(ChainSize(3));
  CHECK(cone_mul(l, l.principal_cone(m({1, 1, 2})), l.principal_cone(m({2, 2, 3})))
        == l.principal_cone(m({2, 2, 2})));

  // evaluated by hand: sigma at {1,2} sends both points to 2, so every
  // component of the product is constant 2
  auto const product = cone_mul(l, l.principal_cone(m({1, 1, 2})), l.principal_cone(m({2, 2, 3})));
  CHECK(l.objects()[product.vertex].image == Subset(3, {2}));
  for (auto const& c : product.components) {
    for (Point v : c.action.values()) {
      CHECK(v == 2);
    }
  }

  // sigma with an isomorphism at the vertex of gamma keeps sigma's vertex
  auto const gamma = l.principal_cone(m({1, 1, 3}));
  auto const sigma = l.principal_cone(m({1, 2, 2}));
  REQUIRE(l.is_isomorphism(sigma.components[gamma.vertex]));
  CHECK(cone_mul(l, gamma, sigma).vertex == sigma.vertex);
}

TEST_CASE("cone algebra over all normal cones") {
  auto run = [](auto const& cat) {
    auto const cones = enumerate_normal_cones(cat);
    for (auto const& g : cones) {
      bool const unit = g.components[g.vertex] == cat.identity(cat.objects()[g.vertex]);
      CHECK((cone_mul(cat, g, g) == g) == unit);
      for (auto const& s : cones) {
        auto const p = cone_mul(cat, g, s);
        CHECK(validate_cone(cat, p));
        CHECK(is_normal(cat, p));
      }
    }
    auto const sg = cone_semigroup(cat, cones);
    CHECK(is_regular(sg));
    return cones.size();
  };
  CHECK(run(LCategory(ChainSize(3))) == 9);
  CHECK(run(LCategory(ChainSize(4))) == 34);
  CHECK(run(PCategory(ChainSize(3))) == 9);
  CHECK(run(PCategory(ChainSize(4))) == 34);
  CHECK(run(RCategory(ChainSize(3))) == 14);
  CHECK(run(PiCategory(ChainSize(4))) == 34);
}

TEST_CASE("cone_mul is associative on normal cones at n = 3") {
  LCategory const l(ChainSize(3));
  auto const      cones = enumerate_normal_cones(l);
  for (auto const& a : cones) {
    for (auto const& b : cones) {
      for (auto const& c : cones) {
        CHECK(cone_mul(l, cone_mul(l, a, b), c) == cone_mul(l, a, cone_mul(l, b, c)));
      }
    }
  }
}

TEST_CASE("idempotent cones alone are not closed") {
  LCategory const              l(ChainSize(3));
  std::vector<Cone<LMorphism>> idempotents;
  for (auto const& cone : enumerate_normal_cones(l)) {
    if (is_idempotent_cone(l, cone)) {
      idempotents.push_back(cone);
    }
  }
  CHECK(idempotents.size() == 7);
  CHECK_THROWS_AS(cone_semigroup(l, idempotents), ConstructionError);
  CHECK(cone_semigroup(l, {idempotents.front()}).size() == 1);
}

TEST_CASE("enumerate_normal_cones per vertex") {
  PCategory const p(ChainSize(3));
  auto const      at12 = enumerate_normal_cones(p, p.index_of(Subset(3, {1, 2})));
  CHECK(at12.size() == 2);
  std::set<OPMap> maps;
  for (auto const& c : at12) {
    maps.insert(cone_to_opmap(p, c));
  }
  CHECK(maps == std::set<OPMap>{m({1, 1, 2}), m({1, 2, 2})});

  for (int n = 3; n <= 4; ++n) {
    PCategory const cat{ChainSize(n)};
    for (std::size_t v = 0; v < cat.objects().size(); ++v) {
      std::size_t expected = 0;
      for (auto const& alpha : enumerate_oxn(ChainSize(n))) {
        expected += image(alpha) == cat.objects()[v] ? 1 : 0;
      }
      CHECK(enumerate_normal_cones(cat, v).size() == expected);
    }
  }
}

TEST_CASE("normal category axioms") {
  for (int n = 3; n <= 4; ++n) {
    ChainSize const size(n);
    CHECK(check_normal_category(LCategory(size)).ok());
    CHECK(check_normal_category(RCategory(size)).ok());
    CHECK(check_normal_category(PCategory(size)).ok());
    CHECK(check_normal_category(PiCategory(size)).ok());
  }
  auto const report = check_normal_category(LCategory(ChainSize(3)));
  CHECK(report.objects == 6);
  CHECK(report.morphisms == 63);
  CHECK(report.identity_cones == 6);
}

TEST_CASE("cone serialisation") {
  LCategory const l(ChainSize(3));
  auto const      j = cone_json(l, l.principal_cone(m({1, 1, 2})));
  CHECK(j["vertex"] == "{1,2}");
  CHECK(j["components"]["{3}"] == "rho({3} -> {1,2}: [2])");
  CHECK(j["components"].size() == 6);
  CHECK(cone_label(l, l.principal_cone(m({1, 1, 1}))).rfind("cone({1};", 0) == 0);
}
