#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "oxn/checks.hpp"
#include "oxn/errors.hpp"
#include "oxn/ideal_categories.hpp"

using namespace oxn;

TEST_CASE("registry") {
  std::set<std::string> names;
  for (auto const& info : registered_checks()) {
    names.insert(info.name);
    CHECK(info.max_n >= 4);
    CHECK_FALSE(info.summary.empty());
  }
  for (auto const* expected : {"counts", "green", "factorize-L", "factorize-Po", "factorize-Pi",
                               "cones-principal", "TL-iso", "F-iso", "G-iso", "TPo-iso",
                               "phi-faithful", "cone-regular"}) {
    CHECK(names.count(expected) == 1);
  }
  CHECK(names.count("all") == 0);
  CHECK_THROWS_AS(run_check("bogus", ChainSize(3)), DomainError);
  CHECK_THROWS_AS(run_check("TL-iso", ChainSize(6)), DomainError);
}

TEST_CASE("every check passes at n = 3") {
  auto const reports = run_all(ChainSize(3));
  CHECK(reports.size() == registered_checks().size());
  for (auto const& r : reports) {
    INFO(r.to_text());
    CHECK(r.passed);
    CHECK(r.witness.is_null());
    CHECK(r.n == 3);
  }
}

TEST_CASE("counts at n = 12") {
  auto const r = run_check("counts", ChainSize(12));
  CHECK(r.passed);
  CHECK(r.counts.at("oxn") == 1352077);
  CHECK(r.counts.at("idempotents") == 46367);
}

TEST_CASE("report formats") {
  auto const r = run_check("green", ChainSize(3));
  auto const j = r.to_json();
  CHECK(j.at("check") == "green");
  CHECK(j.at("n") == 3);
  CHECK(j.at("status") == "pass");
  CHECK(j.at("counts").is_object());
  CHECK(j.at("witness").is_null());
  CHECK(j.at("elapsed_ms").is_number_integer());
  CHECK(r.to_text().rfind("PASS  green  n=3  [", 0) == 0);
}

TEST_CASE("an injected fault is reported with a witness") {
  for (int n = 3; n <= 4; ++n) {
    CheckOptions options;
    options.inject_fault = true;
    auto const r         = run_check("cones-principal", ChainSize(n), options);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.witness.is_null());
    CHECK(r.to_json().at("status") == "fail");
    CHECK(r.to_text().rfind("FAIL", 0) == 0);
    CHECK(r.to_text().find("witness: ") != std::string::npos);
  }
}

TEST_CASE("Cayley export") {
  CHECK(cayley_semigroup("oxn", ChainSize(3)).size() == 9);
  auto const tl = cayley_semigroup("TL", ChainSize(3));
  CHECK(find_isomorphism(oxn_semigroup(ChainSize(3)), tl).has_value());
  CHECK(cayley_semigroup("TR", ChainSize(3)).size() == 14);
  CHECK_THROWS_AS(cayley_semigroup("oxn", ChainSize(12)), ResourceError);
  CHECK_THROWS_AS(cayley_semigroup("TL", ChainSize(6)), ResourceError);
  CHECK_THROWS_AS(cayley_semigroup("bogus", ChainSize(3)), DomainError);

  auto const path = std::filesystem::temp_directory_path() / "oxn_test_export.json";
  export_cayley("TPo", ChainSize(3), path.string());
  std::ifstream     in(path);
  std::string const text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto const        back = from_cayley_json(text);
  CHECK(back.size() == 9);
  CHECK(find_isomorphism(oxn_semigroup(ChainSize(3)), back).has_value());
  std::filesystem::remove(path);
}
