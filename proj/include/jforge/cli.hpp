#pragma once

#include <string>
#include <vector>

namespace jforge {

struct CliResult {
  int exit_code = 0;   // 0 = predicates pass, 1 = a checked property fails, 2 = input error
  std::string out;     // canonical JSON report
};

/// The whole command surface:
///   check [--jordan] [--pe] [--symplectic] [--manin] FILE
///   analyze --albert|--casimir|--radical|--index|--fitting|--reductive FILE
///   construct tstar|central|sdp|gsd|de|gde|sympde|manin-de|drinfeld ... [-o OUT]
///   peel gde|de|symp|manin|symp-manin FILE ... [-o OUT]
///   tkk build FILE [--lift OP.json] [--check-d1]
///   catalog get NAME [--param k=v]... [-o OUT]
///   catalog list
/// Identical inputs produce byte-identical reports.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace jforge
