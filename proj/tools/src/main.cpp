// equidim: command-line front end. Exit codes: 0 computed, 2 invalid input,
// 3 resource cap, 1 internal consistency failure.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "equidim/errors.hpp"
#include "equidim_cli/report.hpp"

namespace {

using equidim::cli::Json;

int fail(int code, const std::string& kind, const std::string& message, const std::string& pointer) {
  Json diag = {{"error", kind}, {"message", message}};
  if (!pointer.empty()) diag["pointer"] = pointer;
  std::cerr << diag.dump() << "\n";
  return code;
}

std::size_t workers_from_env() {
  const char* v = std::getenv("EQUIDIM_WORKERS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  return (*end == '\0' && n > 0) ? static_cast<std::size_t>(n) : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equidimensionality and cofreeness of diagonalizable actions on toric quotients"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  auto* json_flag = app.add_flag("--json", "compact JSON report (default)");
  app.add_flag("--pretty", pretty, "indented JSON report")->excludes(json_flag);

  std::string input;
  equidim::cli::CommandArgs args;
  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"analyze", "full pipeline report"},
      {"invariants", "Hilbert bases of R and R^G, stability, facets"},
      {"class-group", "Cl(R) and Cl(R^G)"},
      {"dchi", "minimal effective divisor D(chi)"},
      {"free", "freeness of R_chi over R^G"},
      {"obstruction", "t factorization and the obstruction subgroup"},
      {"equidim", "equidimensionality verdict"},
      {"cofree", "cofreeness verdict"},
      {"sweep", "reduced class groups over a character box"},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", input, "input JSON document")->required();
    std::string name = c.name;
    if (name == "class-group") sub->add_option("--of", args.of, "R or RG");
    if (name == "dchi" || name == "free") sub->add_option("--chi", args.chi, "comma-separated character")->required();
    if (name == "equidim") sub->add_flag("--oracle-only", args.oracle_only, "null-fiber oracle only");
    if (name == "cofree") sub->add_option("--degree-cap", args.degree_cap, "bounded oracle degree cap");
    if (name == "sweep") sub->add_option("--bound", args.bound, "sweep bound k")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "invalid-arguments", e.what(), "");
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    auto spec = equidim::cli::read_input_file(input);
    spec.options.workers = workers_from_env();
    Json report = equidim::cli::run_command(command, spec, args);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << equidim::cli::render(std::move(report), pretty, ms);
    return 0;
  } catch (const equidim::InputError& e) {
    return fail(2, "invalid-input", e.what(), e.pointer().empty() ? "/" : e.pointer());
  } catch (const equidim::ResourceCapError& e) {
    return fail(3, "resource-cap", e.what(), "");
  } catch (const equidim::CharacterNotRealized& e) {
    return fail(2, "invalid-input", e.what(), "--chi");
  } catch (const std::exception& e) {
    return fail(1, "internal", e.what(), "");
  }
}
