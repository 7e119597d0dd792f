#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fourcolor/alphabet.hpp"
#include "fourcolor/color_string.hpp"

namespace fourcolor {

/// Edge label {i, j} of the automaton, 1-indexed, 1 <= i < j <= l.
struct TransitionLabel {
  int i = 1;
  int j = 2;

  /// Length of the state produced from an l-set.
  constexpr int result_length(int l) const noexcept { return l + i + 2 - j; }
  constexpr bool valid_for(int l) const noexcept { return 1 <= i && i < j && j <= l; }

  std::string str() const;

  friend constexpr bool operator==(TransitionLabel, TransitionLabel) = default;
  friend constexpr auto operator<=>(TransitionLabel, TransitionLabel) = default;
};

/// A set of strings that all have length exactly l; one automaton state.
///
/// Members are held as a sorted, duplicate-free vector of base-k codes. The
/// empty set keeps a nominal length so it can keep being derived from.
class LSet {
public:
  LSet() : LSet(Alphabet(4), 0) {}
  LSet(Alphabet alphabet, int length);

  /// Sorts and deduplicates; every code must be below k^length.
  static LSet from_codes(Alphabet alphabet, int length, std::vector<std::uint64_t> codes);
  static LSet from_strings(Alphabet alphabet, int length, std::span<const std::string> members);
  /// Length taken from the first member; at least one member required.
  static LSet of(std::initializer_list<std::string_view> members, Alphabet alphabet = Alphabet(4));
  static LSet empty_set(int length, Alphabet alphabet = Alphabet(4)) { return {alphabet, length}; }

  /// The start state {"acb"}.
  static LSet start(Alphabet alphabet = Alphabet(4));

  Alphabet alphabet() const noexcept { return alphabet_; }
  int length() const noexcept { return length_; }
  std::size_t size() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }
  std::span<const std::uint64_t> codes() const noexcept { return codes_; }

  bool contains(const ColorString& s) const;
  std::vector<ColorString> members() const;
  std::vector<std::string> strings() const;

  /// Set-theoretic union; both operands must share alphabet and length.
  LSet unite(const LSet& other) const;
  bool is_subset_of(const LSet& other) const;

  /// "{acb, adb}" style rendering for diagnostics.
  std::string str() const;

  friend bool operator==(const LSet&, const LSet&) = default;

  /// Lexicographic order of the sorted member sequences.
  static bool lex_less(const LSet& a, const LSet& b);

private:
  Alphabet alphabet_;
  int length_ = 0;
  std::vector<std::uint64_t> codes_;
};

/// Tuning for apply_set. A dense bitmap over the k^l' universe is used to
/// collect results when it fits `dense_budget_bits` and is not much larger
/// than the expected output; otherwise results are sorted and deduplicated.
struct ApplyOptions {
  enum class Strategy { Automatic, Sorted, Dense };
  Strategy strategy = Strategy::Automatic;
  std::uint64_t dense_budget_bits = std::uint64_t{1} << 24;
};

/// Set of s_1..s_i c s_j..s_l for every letter c absent from s_i..s_j.
LSet apply_string(const ColorString& s, TransitionLabel label);

/// Union of apply_string over the members of `set`.
LSet apply_set(const LSet& set, TransitionLabel label, const ApplyOptions& options = {});

/// All C(l,2) transitions of `set`, labels in lexicographic order.
std::vector<std::pair<TransitionLabel, LSet>> successors(const LSet& set);

/// Labels valid for an l-set, lexicographic.
std::vector<TransitionLabel> labels_for_length(int l);

/// Raises PreconditionError unless the transition is defined.
void check_transition(int length, TransitionLabel label);

// Symmetries ----------------------------------------------------------------

/// Bijection on letters; perm[x] is the image of letter x.
using LetterPermutation = std::vector<Letter>;

LetterPermutation identity_permutation(Alphabet alphabet);
LetterPermutation swap_permutation(Alphabet alphabet, Letter x, Letter y);

LSet permute(const LSet& set, const LetterPermutation& perm);
LSet reverse(const LSet& set);

/// A letter relabeling optionally combined with reading strings backwards.
struct Symmetry {
  LetterPermutation perm;
  bool reversed = false;
};

LSet apply_symmetry(const LSet& set, const Symmetry& symmetry);

enum class SymmetryGroup {
  None,            ///< identity only
  CdSwap,          ///< {id, c<->d}
  CdSwapReversal,  ///< generated by c<->d and (reverse, a<->b)
  Full,            ///< all letter permutations
};

std::string_view to_string(SymmetryGroup group);
SymmetryGroup parse_symmetry_group(std::string_view name);

/// Elements of the group for the given alphabet; identity first.
std::vector<Symmetry> group_elements(SymmetryGroup group, Alphabet alphabet);

/// Lexicographically least image of `set` under the group.
LSet canonicalize(const LSet& set, SymmetryGroup group);
LSet canonicalize(const LSet& set, std::span<const Symmetry> elements);

}  // namespace fourcolor

template <>
struct std::hash<fourcolor::LSet> {
  std::size_t operator()(const fourcolor::LSet& set) const noexcept;
};
