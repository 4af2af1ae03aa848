#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ctl/weights.hpp"

namespace ctl {

using Json = nlohmann::ordered_json;

// Deterministic JSON renderings of the core objects.
Json json_of(const Cyclotomic& z);
Json json_of(const FqScalar& s);
Json json_of(const Perm& p);
Json json_of(const Character& chi);
Json json_of(const Weight& w, const ReductionContext& ctx);
Json json_of(const Verdict& v);
Json json_table(GroupPtr g);
Json json_blocks(GroupPtr g, int p);
Json json_factor_set(const FactorSet& fs);
Json json_proj_rep(const ProjRep& p);

// Parsed command; `execute` produces the deterministic report payload.
// Exit status: 0 success, 1 verdict failure, 2 input error.
struct RunResult {
  int exit_code = 0;
  Json payload;
  std::string text;  // human rendering of the same payload
};

RunResult execute_command(const std::vector<std::string>& args);

// Group parsing shared by the CLI and spec files: a named family or the
// two-line text format.
GroupPtr parse_group_spec(const std::string& spec);

}  // namespace ctl
