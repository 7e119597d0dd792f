#include "fourcolor/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace fourcolor {

bool check_probe_missing_letter(const LSet& set) {
  const Alphabet alphabet = set.alphabet();
  if (alphabet.size() < 4) return !set.empty();
  for (const auto& s : set.members()) {
    const auto& letters = s.letters();
    const bool has_c = std::find(letters.begin(), letters.end(), Letter{2}) != letters.end();
    const bool has_d = std::find(letters.begin(), letters.end(), Letter{3}) != letters.end();
    if (!has_c || !has_d) return true;
  }
  return false;
}

Probe missing_letter_probe() { return {"missing-letter", check_probe_missing_letter}; }

void SearchConfig::validate() const {
  if (max_depth < 0) throw PreconditionError("max_depth must be >= 0");
  if (max_length < 3) throw PreconditionError("max_length must be >= 3");
  if (max_length > alphabet.max_length())
    throw PreconditionError("max_length " + std::to_string(max_length) +
                            " exceeds the longest supported string for k=" +
                            std::to_string(alphabet.size()));
  if (max_states < 1) throw PreconditionError("max_states must be >= 1");
}

namespace {

struct Node {
  const LSet* state = nullptr;
  std::int64_t parent = -1;
  TransitionLabel label;
  int depth = 0;
};

/// Turns a chain of canonical states into labels valid from the actual start.
std::vector<TransitionLabel> lift_witness(const LSet& start, const std::vector<const LSet*>& chain,
                                          std::span<const Symmetry> group) {
  std::vector<TransitionLabel> steps;
  LSet actual = start;
  for (std::size_t t = 1; t < chain.size(); ++t) {
    const LSet& target = *chain[t];
    bool advanced = false;
    for (TransitionLabel label : labels_for_length(actual.length())) {
      LSet next = apply_set(actual, label);
      const bool hit = target.empty() ? next.empty() : canonicalize(next, group) == target;
      if (hit) {
        steps.push_back(label);
        actual = std::move(next);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw Error("internal: witness chain broken at step " + std::to_string(t));
  }
  return steps;
}

}  // namespace

SearchReport bfs(const LSet& start, const SearchConfig& config, const StateVisitor& visit) {
  config.validate();
  if (start.alphabet() != config.alphabet)
    throw PreconditionError("start state alphabet k=" + std::to_string(start.alphabet().size()) +
                            " differs from configured k=" +
                            std::to_string(config.alphabet.size()));
  if (start.length() < 3)
    throw PreconditionError("start state needs length >= 3, got " + std::to_string(start.length()));

  const auto group = group_elements(config.canon, start.alphabet());
  SearchReport report;
  for (const auto& p : config.probes) {
    ProbeVerdict verdict;
    verdict.id = p.id;
    report.probes.push_back(std::move(verdict));
  }

  std::unordered_map<LSet, std::uint32_t> index;
  std::vector<Node> nodes;

  auto insert = [&](LSet canonical, std::int64_t parent, TransitionLabel label,
                    int depth) -> std::int64_t {
    auto [it, inserted] = index.try_emplace(std::move(canonical), static_cast<std::uint32_t>(nodes.size()));
    if (!inserted) return -1;
    nodes.push_back({&it->first, parent, label, depth});
    if (report.states_per_depth.size() <= static_cast<std::size_t>(depth))
      report.states_per_depth.resize(static_cast<std::size_t>(depth) + 1, 0);
    ++report.states_per_depth[static_cast<std::size_t>(depth)];
    const LSet& state = it->first;
    if (!state.empty()) {
      for (std::size_t p = 0; p < config.probes.size(); ++p) {
        auto& verdict = report.probes[p];
        ++verdict.checked;
        if (!config.probes[p].predicate(state)) {
          if (verdict.failed++ == 0) {
            verdict.first_failure = state;
            verdict.first_failure_depth = depth;
          }
        }
      }
    }
    if (visit) visit(depth, state);
    return static_cast<std::int64_t>(nodes.size() - 1);
  };

  auto finish_goal = [&](std::int64_t goal) {
    report.goal_found = true;
    report.goal_depth = nodes[static_cast<std::size_t>(goal)].depth;
    std::vector<const LSet*> chain;
    for (std::int64_t n = goal; n >= 0; n = nodes[static_cast<std::size_t>(n)].parent)
      chain.push_back(nodes[static_cast<std::size_t>(n)].state);
    std::reverse(chain.begin(), chain.end());
    report.witness = DerivationScript{start, lift_witness(start, chain, group)};
  };

  insert(canonicalize(start, group), -1, {}, 0);
  if (start.empty()) {
    finish_goal(0);
    return report;
  }

  std::vector<std::uint32_t> frontier{0};
  for (int depth = 0; depth < config.max_depth && !frontier.empty(); ++depth) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t id : frontier) {
      const LSet& state = *nodes[id].state;
      for (TransitionLabel label : labels_for_length(state.length())) {
        if (label.result_length(state.length()) > config.max_length) {
          ++report.pruned_by_length;
          report.truncated_length = true;
          continue;
        }
        ++report.transitions_expanded;
        LSet child = apply_set(state, label);
        if (child.empty()) {
          // All empty sets are one goal state regardless of nominal length.
          finish_goal(insert(std::move(child), id, label, depth + 1));
          return report;
        }
        if (nodes.size() >= config.max_states) {
          if (index.find(canonicalize(child, group)) == index.end()) {
            report.truncated_memory = true;
            return report;
          }
          continue;
        }
        const auto added = insert(canonicalize(child, group), id, label, depth + 1);
        if (added >= 0) next.push_back(static_cast<std::uint32_t>(added));
      }
    }
    frontier = std::move(next);
  }
  report.truncated_depth = !frontier.empty();
  return report;
}

std::vector<ReachableState> reachable_states(const LSet& start, const SearchConfig& config) {
  std::vector<ReachableState> out;
  bfs(start, config, [&](int depth, const LSet& state) { out.push_back({depth, state}); });
  return out;
}

WitnessVerdict verify_witness(const LSet& start, const std::vector<TransitionLabel>& steps) {
  std::vector<LSet> states;
  try {
    states = replay({start, steps});
  } catch (const PreconditionError& e) {
    return {false, e.what()};
  }
  if (!states.back().empty())
    return {false, "script ends at " + states.back().str() + ", not the empty set"};
  return {true, {}};
}

std::uint64_t SearchReport::total_states() const {
  std::uint64_t total = 0;
  for (auto c : states_per_depth) total += c;
  return total;
}

std::string SearchReport::key_values() const {
  std::map<std::string, std::string> kv;
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  std::string counts;
  for (std::size_t d = 0; d < states_per_depth.size(); ++d) {
    if (d > 0) counts += ",";
    counts += std::to_string(states_per_depth[d]);
  }
  kv["states_per_depth"] = counts;
  kv["states_total"] = std::to_string(total_states());
  kv["transitions_expanded"] = std::to_string(transitions_expanded);
  kv["pruned_by_length"] = std::to_string(pruned_by_length);
  kv["goal_found"] = flag(goal_found);
  kv["goal_depth"] = std::to_string(goal_depth);
  std::string witness_text;
  if (witness) {
    for (std::size_t n = 0; n < witness->steps.size(); ++n) {
      if (n > 0) witness_text += ",";
      witness_text += witness->steps[n].str();
    }
  }
  kv["witness"] = witness ? witness_text : "none";
  kv["truncated_depth"] = flag(truncated_depth);
  kv["truncated_length"] = flag(truncated_length);
  kv["truncated_memory"] = flag(truncated_memory);
  for (const auto& p : probes) {
    kv["probe." + p.id + ".checked"] = std::to_string(p.checked);
    kv["probe." + p.id + ".failed"] = std::to_string(p.failed);
    if (p.first_failure)
      kv["probe." + p.id + ".first_failure"] = p.first_failure->str();
  }
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

std::string SearchReport::table() const {
  std::ostringstream out;
  out << "depth  states\n";
  for (std::size_t d = 0; d < states_per_depth.size(); ++d) {
    std::string count = std::to_string(states_per_depth[d]);
    out << std::string(5 - std::min<std::size_t>(5, std::to_string(d).size()), ' ') << d << "  "
        << std::string(count.size() < 12 ? 12 - count.size() : 0, ' ') << count << "\n";
  }
  out << "total  " << total_states() << "\n";
  if (goal_found) out << "empty set reached at depth " << goal_depth << "\n";
  else out << "empty set not reached within bounds\n";
  for (const auto& p : probes) {
    out << "probe " << p.id << ": " << p.failed << " of " << p.checked << " states fail\n";
    if (p.first_failure)
      out << "  VIOLATION at depth " << p.first_failure_depth << ": " << p.first_failure->str() << "\n";
  }
  return out.str();
}

}  // namespace fourcolor
