// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "fourcolor/coloring.hpp"
#include "fourcolor/search.hpp"
#include "fourcolor/shelling.hpp"
#include "oracles.hpp"

using namespace fourcolor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && secs > time_limit_s) o = {false, "runtime " + std::to_string(secs) + "s over limit"};
  if (!o.pass) ++failures;
  std::printf("[%s] %d. %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, name, secs,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

SearchConfig search_config(int k) {
  SearchConfig c;
  c.max_depth = 6;
  c.max_length = 7;
  c.canon = SymmetryGroup::CdSwap;
  c.alphabet = Alphabet(k);
  c.probes.push_back(missing_letter_probe());
  return c;
}

}  // namespace

int main() {
  criterion(1, "apply_set equals the per-string definition", 60.0, [] {
    Outcome o;
    const Alphabet A(4);
    for (int l = 3; l <= 5; ++l) {
      std::uint64_t universe = 1;
      for (int t = 0; t < l; ++t) universe *= 4;
      for (std::uint64_t code = 0; code < universe; ++code) {
        const auto s = ColorString::decode(code, l, A);
        const auto single = LSet::from_codes(A, l, {code});
        for (auto label : labels_for_length(l)) {
          const auto naive = oracle::apply_string(s.str(), label.i, label.j, 4);
          o.require(oracle::to_strings(apply_set(single, label)) == naive, "singleton " + s.str() + " " + label.str());
          o.require(oracle::to_strings(apply_string(s, label)) == naive, "apply_string " + s.str());
        }
      }
    }
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10000; ++trial) {
      const int l = 3 + static_cast<int>(rng() % 6);
      const auto L = oracle::random_lset(rng, l, 4, 64);
      const auto labels = labels_for_length(l);
      const auto label = labels[rng() % labels.size()];
      o.require(oracle::to_strings(apply_set(L, label)) ==
                    oracle::apply_set(oracle::to_strings(L), label.i, label.j, 4),
                "random set " + L.str() + " " + label.str());
    }
    return o;
  });

  criterion(2, "permutation and reversal equivariance", 60.0, [] {
    Outcome o;
    std::vector<LetterPermutation> perms;
    auto p = identity_permutation(Alphabet(4));
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    o.require(perms.size() == 24, "expected 24 permutations");
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 1000; ++trial) {
      const int l = 3 + static_cast<int>(rng() % 6);
      const auto L = oracle::random_lset(rng, l, 4, 24);
      const auto labels = labels_for_length(l);
      const auto label = labels[rng() % labels.size()];
      const auto image = apply_set(L, label);
      for (const auto& perm : perms)
        o.require(apply_set(permute(L, perm), label) == permute(image, perm), "permutation, " + L.str());
      o.require(reverse(image) == apply_set(reverse(L), {l + 1 - label.j, l + 1 - label.i}),
                "reversal, " + L.str());
    }
    return o;
  });

  criterion(3, "bounded search from S (k=4, depth 6, length 7) never reaches the empty set", 180.0, [] {
    Outcome o;
    const auto r = bfs(LSet::start(), search_config(4));
    o.require(!r.goal_found, "empty set reached");
    o.require(r.probes.at(0).failed == 0, "missing-letter probe violated");
    o.require(r.probes.at(0).checked == r.total_states(), "probe did not see every state");
    o.require(!r.truncated_memory, "state budget exhausted");
    // Snapshot from the first verified run.
    o.require(r.states_per_depth == std::vector<std::uint64_t>{1, 2, 6, 23, 92, 255, 779},
              "per-depth counts changed");
    return o;
  });

  criterion(4, "string replay equals coloring oracle (all depth <= 3, 200 random depth <= 8)", 300.0, [] {
    Outcome o;
    const auto scripts = fixtures::all_scripts(3);
    for (const auto& s : scripts) {
      const auto r = roundtrip_check({LSet::start(), s});
      o.require(r.ok, "exhaustive script mismatch at prefix " + std::to_string(r.mismatch_prefix.value_or(-1)));
    }
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = fixtures::random_script(rng, 1 + static_cast<int>(rng() % 8));
      o.require(roundtrip_check({LSet::start(), s}).ok, "random script mismatch");
    }
    return o;
  });

  criterion(5, "shelling pipeline on octahedron and icosahedron", 60.0, [] {
    Outcome o;
    for (const char* name : {"octahedron", "icosahedron"}) {
      const auto g = fixtures::catalog(name);
      const auto order = compute_shelling_order(g, g.outer()[0], g.outer()[1]);
      const auto check = check_shelling(g, order.order);
      o.require(check.ok, std::string(name) + ": " + check.reason);
      const auto script = derivation_from_order(g, order.order);
      o.require(script.steps == order.labels, std::string(name) + ": labels differ");
      const auto states = replay(script);
      o.require(states.back().length() == 3 && !states.back().empty(),
                std::string(name) + ": final state " + states.back().str());
      for (std::size_t t = 0; t < states.size(); ++t)
        o.require(boundary_string_set(g, order.order, static_cast<int>(t) + 3) == states[t],
                  std::string(name) + ": boundary strings differ at step " + std::to_string(t));
    }
    return o;
  });

  criterion(6, "coloring counts match brute force", 120.0, [] {
    Outcome o;
    const auto k4 = fixtures::catalog("k4");
    o.require(count_colorings(k4, {}, Alphabet(4)) == 24, "K4");
    o.require(oracle::brute_force_colorings(k4, 4) == 24, "K4 brute force");
    const auto octa = fixtures::catalog("octahedron");
    const auto brute = oracle::brute_force_colorings(octa, 4);
    o.require(brute == 96, "octahedron brute force");
    o.require(count_colorings(octa, {}, Alphabet(4)) == brute, "octahedron");
    const auto ico = fixtures::catalog("icosahedron");
    const ColoringSeed seed{{0, 0}, {1, 1}, {2, 2}};
    o.require(count_colorings(ico, seed, Alphabet(5)) ==
                  oracle::brute_force_colorings(ico, 5, {{0, 0}, {1, 1}, {2, 2}}),
              "icosahedron k=5 seeded");
    return o;
  });

  criterion(7, "bounded search from {acb} with five letters never reaches the empty set", 300.0, [] {
    Outcome o;
    const auto r = bfs(LSet::start(Alphabet(5)), search_config(5));
    o.require(!r.goal_found, "empty set reached");
    o.require(!r.truncated_memory, "state budget exhausted");
    return o;
  });

  criterion(8, "negative control: {acbd} derives the empty set via (1,4)", 1.0, [] {
    Outcome o;
    o.require(verify_witness(LSet::of({"acbd"}), {{1, 4}}).valid, "witness rejected");
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
