#pragma once

// Compiled reduction instances: everything a solver or replay needs, as an
// immutable value.  The gadget map records where each source-language object
// landed on the board so strategies, solvers and renderers can find them.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bghard/board.hpp"
#include "bghard/script.hpp"

namespace bghard {

enum class Variant { kskr, uskr, usur };

const char* variant_name(Variant variant);

struct GadgetEntry {
  std::string kind;      // "variable" or "clause"
  int source_index = 0;  // 1-based index of the variable or clause
  int window_lo = 0;
  int window_hi = 0;
  // Named anchor points (local indices and roles) resolved to absolute
  // coordinates.
  std::map<std::string, int> anchors;

  bool operator==(const GadgetEntry&) const = default;
};

struct GadgetMap {
  std::vector<GadgetEntry> entries;

  const GadgetEntry* find(const std::string& kind, int source_index) const;

  bool operator==(const GadgetMap&) const = default;
};

struct ReductionInstance {
  Variant variant = Variant::kskr;
  BoardConfig config;
  Position initial;
  RollSource rolls;
  OpponentStrategy opponent;
  GadgetMap gadgets;
  std::int64_t win_horizon = 0;
  std::string provenance;  // digest of the source formula

  bool operator==(const ReductionInstance&) const = default;
};

// FNV-1a digest of a string, rendered as 16 hex digits; used for instance
// provenance.
std::string digest_hex(const std::string& text);

}  // namespace bghard
