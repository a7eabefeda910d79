#pragma once

#include "toric/fan.hpp"
#include "toric/zeta.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace toric {

/// Parsed fan file: validated fan data plus the optional named PL functions.
struct FanFile {
  FanData fan;
  std::map<std::string, std::vector<Rational>> plFunctions;
};

/// JSON fan format:
///   { "rank": 2,
///     "rays": [[1,0],[0,1],[-1,-1]],
///     "max_cones": [[0,1],[1,2],[2,0]],
///     "pl_functions": { "anticanonical": ["1","1","1"] } }
/// Throws Error("io-error") / Error("parse-error(<field>)").
FanFile parseFanFile(const std::string& path);
FanFile parseFanJson(const std::string& text);
std::string emitFanJson(const FanFile& file);

/// CSV with header "B,N,ties", rows ordered by B.
/// Throws Error("invariant-violation") when N is not nondecreasing.
void emitCsv(const std::vector<CountRow>& rows, std::ostream& out);
std::vector<CountRow> parseCsv(std::istream& in);

}  // namespace toric
