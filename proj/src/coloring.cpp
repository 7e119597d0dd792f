#include "fourcolor/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "fourcolor/shelling.hpp"

namespace fourcolor {

namespace {

constexpr Letter kUnset = 0xff;

}  // namespace

void enumerate_colorings(const PlaneGraph& g, const ColoringSeed& seed, Alphabet alphabet,
                         const std::function<bool(const Coloring&)>& visit,
                         std::span<const Vertex> order) {
  const int n = g.vertex_count();
  const int k = alphabet.size();
  Coloring color(static_cast<std::size_t>(n), kUnset);
  for (auto [v, x] : seed) {
    if (v < 0 || v >= n) throw PreconditionError("seed vertex " + std::to_string(v + 1) + " out of range");
    if (x >= k) throw PreconditionError("seed letter outside alphabet for vertex " + std::to_string(v + 1));
    if (color[static_cast<std::size_t>(v)] != kUnset && color[static_cast<std::size_t>(v)] != x)
      throw PreconditionError("vertex " + std::to_string(v + 1) + " seeded twice with different letters");
    color[static_cast<std::size_t>(v)] = x;
  }
  for (auto [v, x] : seed)
    for (Vertex u : g.rotation(v))
      if (color[static_cast<std::size_t>(u)] == x)
        throw PreconditionError("seed is improper: adjacent vertices " + std::to_string(v + 1) + " and " +
                                std::to_string(u + 1) + " share letter " + Alphabet::display(x));

  std::vector<Vertex> free;
  if (order.empty()) {
    free.resize(static_cast<std::size_t>(n));
    std::iota(free.begin(), free.end(), 0);
  } else {
    if (static_cast<int>(order.size()) != n) throw PreconditionError("vertex order must list every vertex");
    free.assign(order.begin(), order.end());
  }
  std::erase_if(free, [&](Vertex v) { return color[static_cast<std::size_t>(v)] != kUnset; });

  // Iterative backtracking over `free`.
  const std::size_t depth_total = free.size();
  if (depth_total == 0) {
    visit(color);
    return;
  }
  std::size_t depth = 0;
  std::vector<int> next_letter(depth_total, 0);
  while (true) {
    const Vertex v = free[depth];
    auto& slot = color[static_cast<std::size_t>(v)];
    int x = next_letter[depth];
    for (; x < k; ++x) {
      bool ok = true;
      for (Vertex u : g.rotation(v))
        if (color[static_cast<std::size_t>(u)] == x) {
          ok = false;
          break;
        }
      if (ok) break;
    }
    if (x >= k) {
      slot = kUnset;
      next_letter[depth] = 0;
      if (depth == 0) return;
      --depth;
      continue;
    }
    slot = static_cast<Letter>(x);
    next_letter[depth] = x + 1;
    if (depth + 1 == depth_total) {
      if (!visit(color)) return;
      continue;
    }
    ++depth;
  }
}

std::uint64_t count_colorings(const PlaneGraph& g, const ColoringSeed& seed, Alphabet alphabet,
                              std::span<const Vertex> order) {
  std::uint64_t count = 0;
  enumerate_colorings(g, seed, alphabet, [&](const Coloring&) { return ++count, true; }, order);
  return count;
}

LSet boundary_string_set(const PlaneGraph& g, std::span<const Vertex> order, int i, Alphabet alphabet) {
  if (i < 3 || i > static_cast<int>(order.size()))
    throw PreconditionError("prefix size " + std::to_string(i) + " outside 3.." + std::to_string(order.size()));
  if (alphabet.size() < 3) throw PreconditionError("seeding a, b, c needs at least 3 letters");
  const auto prefix = order.first(static_cast<std::size_t>(i));
  const auto sub = induced_subgraph(g, prefix);
  // Local identifiers follow `prefix`, so v1, v2, v3 are 0, 1, 2.
  const auto walk = boundary_path(sub.graph.outer(), 0, 1);
  const int l = static_cast<int>(walk.size());

  std::vector<Vertex> local_order(static_cast<std::size_t>(i));
  std::iota(local_order.begin(), local_order.end(), 0);
  std::vector<std::uint64_t> codes;
  const auto k = static_cast<std::uint64_t>(alphabet.size());
  enumerate_colorings(sub.graph, {{0, 0}, {1, 1}, {2, 2}}, alphabet,
                      [&](const Coloring& color) {
                        std::uint64_t code = 0;
                        for (Vertex w : walk) code = code * k + color[static_cast<std::size_t>(w)];
                        codes.push_back(code);
                        return true;
                      },
                      local_order);
  return LSet::from_codes(alphabet, l, std::move(codes));
}

RoundtripResult roundtrip_check(const DerivationScript& script) {
  const auto built = build_from_derivation(script);
  const auto states = replay(script);
  for (std::size_t t = 0; t < states.size(); ++t) {
    auto colored = boundary_string_set(built.graph, built.order.order, static_cast<int>(t) + 3,
                                       script.start.alphabet());
    if (colored != states[t]) return {false, static_cast<int>(t), states[t], std::move(colored)};
  }
  return {};
}

}  // namespace fourcolor
