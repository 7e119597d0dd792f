#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fourcolor/derivation.hpp"
#include "fourcolor/lset.hpp"

namespace fourcolor {

/// A named predicate evaluated on every explored nonempty state.
struct Probe {
  std::string id;
  std::function<bool(const LSet&)> predicate;
};

/// True iff some member lacks letter c, or some member lacks letter d.
bool check_probe_missing_letter(const LSet& set);
Probe missing_letter_probe();

struct SearchConfig {
  int max_depth = 6;
  /// States longer than this are counted as pruned, not stored.
  int max_length = 7;
  /// Upper bound on stored canonical states.
  std::uint64_t max_states = 50'000'000;
  SymmetryGroup canon = SymmetryGroup::CdSwap;
  std::vector<Probe> probes;
  Alphabet alphabet{4};

  /// Throws PreconditionError on out-of-range limits.
  void validate() const;
};

struct ProbeVerdict {
  std::string id;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<LSet> first_failure;
  int first_failure_depth = -1;
};

struct SearchReport {
  /// Distinct canonical states first reached at each depth (goal included).
  std::vector<std::uint64_t> states_per_depth;
  std::uint64_t transitions_expanded = 0;
  std::uint64_t pruned_by_length = 0;
  bool goal_found = false;
  int goal_depth = -1;
  /// Present iff goal_found; replays from the start state to the empty set.
  std::optional<DerivationScript> witness;
  std::vector<ProbeVerdict> probes;
  bool truncated_depth = false;
  bool truncated_length = false;
  bool truncated_memory = false;

  std::uint64_t total_states() const;
  /// Machine-readable `key=value` lines sorted by key.
  std::string key_values() const;
  /// Human-readable per-depth table.
  std::string table() const;
};

/// Called once per stored canonical state in discovery order.
using StateVisitor = std::function<void(int depth, const LSet& state)>;

/// Breadth-first exploration from `start`; stops at the first empty set.
SearchReport bfs(const LSet& start, const SearchConfig& config, const StateVisitor& visit = {});

struct ReachableState {
  int depth = 0;
  LSet state;
};

/// Every distinct canonical state bfs stores, nondecreasing depth.
std::vector<ReachableState> reachable_states(const LSet& start, const SearchConfig& config);

struct WitnessVerdict {
  bool valid = false;
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

/// Valid iff replaying `steps` from `start` succeeds and ends at the empty set.
WitnessVerdict verify_witness(const LSet& start, const std::vector<TransitionLabel>& steps);

}  // namespace fourcolor
