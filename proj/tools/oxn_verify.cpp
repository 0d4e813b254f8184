// oxn-verify: runs the verification suites over OX_n and exports Cayley
// tables.
//
//   oxn-verify <check> --n N [--format text|json] [--out PATH] [--seed S]
//   oxn-verify --check <check> --n N ...
//   oxn-verify export <oxn|TL|TR|TPo|TPi> --n N --out PATH
//   oxn-verify list
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oxn/checks.hpp"
#include "oxn/errors.hpp"

namespace {

  constexpr int exit_pass  = 0;
  constexpr int exit_fail  = 1;
  constexpr int exit_usage = 2;

  int usage_error(std::string const& message) {
    std::cerr << "oxn-verify: " << message << '\n';
    return exit_usage;
  }

  bool emit(std::string const& text, std::string const& path) {
    if (path.empty()) {
      std::cout << text << '\n';
      return true;
    }
    std::ofstream file(path);
    file << text << '\n';
    return static_cast<bool>(file);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for the semigroup OX_n and its normal categories"};
  app.require_subcommand(0, 1);

  std::string   check;
  int           n = 3;
  std::string   format = "text";
  std::string   out;
  std::uint64_t seed         = 0;
  bool          inject_fault = false;

  app.add_option("check,--check", check, "check to run, or 'all'");
  app.add_option("--n", n, "chain length")->capture_default_str();
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out, "write the report to this file");
  app.add_option("--seed", seed, "seed for sampled suites")->capture_default_str();
  app.add_flag("--inject-fault", inject_fault)->group("");

  auto*       export_cmd = app.add_subcommand("export", "write a Cayley table as JSON");
  std::string selector;
  int         export_n = 3;
  std::string export_path;
  export_cmd->add_option("selector", selector, "oxn, TL, TR, TPo or TPi")->required();
  export_cmd->add_option("--n", export_n, "chain length")->required();
  export_cmd->add_option("--out", export_path, "output file")->required();

  auto* list_cmd = app.add_subcommand("list", "list the registered checks");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (list_cmd->parsed()) {
      for (auto const& info : oxn::registered_checks()) {
        std::cout << info.name << "  (n <= " << info.max_n << ")  " << info.summary << '\n';
      }
      return exit_pass;
    }
    if (export_cmd->parsed()) {
      oxn::export_cayley(selector, oxn::ChainSize(export_n), export_path);
      return exit_pass;
    }

    std::string const& name = check;
    if (name.empty()) {
      return usage_error("no check given; run 'oxn-verify list'");
    }

    oxn::ChainSize const           size(n);
    oxn::CheckOptions const        options{seed, inject_fault};
    std::vector<oxn::CheckReport> reports;
    if (name == "all") {
      reports = oxn::run_all(size, options);
    } else {
      reports.push_back(oxn::run_check(name, size, options));
    }

    bool        passed = true;
    std::string text;
    if (format == "json") {
      nlohmann::json doc = nlohmann::json::array();
      for (auto const& r : reports) {
        doc.push_back(r.to_json());
        passed &= r.passed;
      }
      text = (name == "all" ? doc : doc.front()).dump(2);
    } else {
      for (auto const& r : reports) {
        text += (text.empty() ? "" : "\n") + r.to_text();
        passed &= r.passed;
      }
    }
    if (!emit(text, out)) {
      std::cerr << "oxn-verify: cannot write " << out << '\n';
      return exit_fail;
    }
    return passed ? exit_pass : exit_fail;
  } catch (oxn::ResourceError const& e) {
    std::cerr << "oxn-verify: " << e.what() << '\n';
    return exit_fail;
  } catch (oxn::DomainError const& e) {
    return usage_error(e.what());
  } catch (oxn::Error const& e) {
    std::cerr << "oxn-verify: " << e.what() << '\n';
    return exit_fail;
  }
}
