#pragma once

#include <optional>
#include <string>

#include "equidim_cli/input.hpp"

namespace equidim::cli {

// Invariant factors use 0 for an infinite cyclic factor; orders outside 64
// bits are decimal strings; infinite orders are the string "infinite".
Json to_json(const Integer& x);
Json to_json(const std::vector<Integer>& v);
Json to_json(const Order& o);
Json to_json(const Point& p);
Json to_json(const std::vector<Point>& v);
Json to_json(const std::vector<Character>& v);
Json to_json(const FiniteAbelianData& d);
Json to_json(const NullFiberResult& r);
Json to_json(const BoundedCofreeness& r);
Json to_json(const CofreeDecision& d);
Json to_json(const ObstructionData& d);

struct CommandArgs {
  std::optional<std::string> of;   // class-group: "R" or "RG"
  std::optional<std::string> chi;  // dchi, free
  bool oracle_only = false;        // equidim
  std::optional<int> degree_cap;   // cofree
  std::optional<int> bound;        // sweep
};

// Report for one command, without the timing member. Throws InputError,
// ResourceCapError or InvariantViolation.
Json run_command(const std::string& command, const InputSpec& spec, const CommandArgs& args);

Json analysis_report(const InputSpec& spec, const Analysis& r);

// The textual report; `timing_ms` is added under "timing" when present.
std::string render(Json report, bool pretty, std::optional<double> timing_ms);

}  // namespace equidim::cli
