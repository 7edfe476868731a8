#pragma once

#include <string>

#include <json.hpp>

#include "equidim/pipeline.hpp"

namespace equidim::cli {

using Json = nlohmann::json;

struct InputSpec {
  WeightedAction action;
  PipelineOptions options;
};

// Throws InputError carrying a JSON pointer to the offending member.
InputSpec parse_input(const Json& doc);
InputSpec parse_input_text(const std::string& text);
InputSpec read_input_file(const std::string& path);

// Canonical form of the spec, options filled in; parse_input(echo(s)) == s.
Json echo(const InputSpec& spec);

bool operator==(const InputSpec& a, const InputSpec& b);

// "1,-2,0" against the character group of the action; pointer names the flag.
Character parse_character(const std::string& csv, const CharacterGroup& g, const std::string& flag);

}  // namespace equidim::cli
