// Named verification suites over OX_n and its categories, with structured
// reports, and Cayley-table export.

#ifndef OXN_CHECKS_HPP_
#define OXN_CHECKS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oxn/chain.hpp"
#include "oxn/semigroup.hpp"

namespace oxn {

  struct CheckReport {
    std::string                          check;
    int                                  n = 0;
    bool                                 passed = false;
    std::map<std::string, std::int64_t>  counts;
    //! null when the check passed.
    nlohmann::json                       witness;
    std::int64_t                         elapsed_ms = 0;

    //! {"check", "n", "status": "pass"|"fail", "counts", "witness",
    //! "elapsed_ms"}
    [[nodiscard]] nlohmann::json to_json() const;
    //! One summary line, followed by the witness when the check failed.
    [[nodiscard]] std::string to_text() const;
  };

  struct CheckOptions {
    //! Seed for sampled suites.
    std::uint64_t seed = 0;
    //! Corrupt one principal cone before comparing in cones-principal.
    bool inject_fault = false;
  };

  struct CheckInfo {
    std::string name;
    //! Largest chain size the check accepts.
    int         max_n;
    std::string summary;
  };

  //! The registered checks in registration order ("all" is not listed).
  std::vector<CheckInfo> const& registered_checks();

  //! Throws DomainError for an unknown check or an n above the check's
  //! limit.
  CheckReport run_check(std::string const& name, ChainSize n, CheckOptions const& options = {});

  //! Every registered check whose limit admits n, in registration order.
  std::vector<CheckReport> run_all(ChainSize n, CheckOptions const& options = {});

  //! Largest table side that export_cayley will write.
  constexpr std::size_t max_export_order = 2000;

  //! The semigroup named by selector: "oxn", "TL", "TR", "TPo" or "TPi"
  //! (the cone semigroups of all normal cones).  Throws DomainError for an
  //! unknown selector and ResourceError when the table would exceed
  //! max_export_order or a cone semigroup is requested for n > 5.
  FiniteSemigroup cayley_semigroup(std::string const& selector, ChainSize n);

  //! Writes cayley_json(cayley_semigroup(selector, n)) to path.
  void export_cayley(std::string const& selector, ChainSize n, std::string const& path);

}  // namespace oxn

#endif  // OXN_CHECKS_HPP_
