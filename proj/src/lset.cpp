#include "fourcolor/lset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace fourcolor {

namespace {

using Code = std::uint64_t;

constexpr int kMaxLetters = 64;

void check_length(Alphabet alphabet, int length) {
  if (length < 0 || length > alphabet.max_length())
    throw PreconditionError("string length " + std::to_string(length) +
                            " unsupported for alphabet of size " +
                            std::to_string(alphabet.size()) + " (max " +
                            std::to_string(alphabet.max_length()) + ")");
}

/// k^0 .. k^length.
std::array<Code, kMaxLetters + 1> powers(Alphabet alphabet, int length) {
  std::array<Code, kMaxLetters + 1> pw{};
  pw[0] = 1;
  for (int t = 1; t <= length; ++t) pw[t] = pw[t - 1] * static_cast<Code>(alphabet.size());
  return pw;
}

int decode_into(Code code, int length, int k, std::array<Letter, kMaxLetters>& out) {
  for (int t = length - 1; t >= 0; --t) {
    out[t] = static_cast<Letter>(code % static_cast<Code>(k));
    code /= static_cast<Code>(k);
  }
  return length;
}

Code encode(const std::array<Letter, kMaxLetters>& letters, int length, int k) {
  Code code = 0;
  for (int t = 0; t < length; ++t) code = code * static_cast<Code>(k) + letters[t];
  return code;
}

}  // namespace

std::string TransitionLabel::str() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// LSet ------------------------------------------------------------------------

LSet::LSet(Alphabet alphabet, int length) : alphabet_(alphabet), length_(length) {
  check_length(alphabet, length);
}

LSet LSet::from_codes(Alphabet alphabet, int length, std::vector<std::uint64_t> codes) {
  LSet set(alphabet, length);
  const Code universe = powers(alphabet, length)[length];
  for (Code c : codes) {
    if (c >= universe) throw PreconditionError("member code out of range for length " + std::to_string(length));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  set.codes_ = std::move(codes);
  return set;
}

LSet LSet::from_strings(Alphabet alphabet, int length, std::span<const std::string> members) {
  std::vector<Code> codes;
  codes.reserve(members.size());
  for (const auto& m : members) {
    auto s = ColorString::parse(m, alphabet);
    if (s.length() != length)
      throw PreconditionError("member \"" + m + "\" has length " + std::to_string(s.length()) +
                              ", expected " + std::to_string(length));
    codes.push_back(s.code());
  }
  return from_codes(alphabet, length, std::move(codes));
}

LSet LSet::of(std::initializer_list<std::string_view> members, Alphabet alphabet) {
  if (members.size() == 0) throw PreconditionError("LSet::of needs at least one member");
  std::vector<std::string> owned(members.begin(), members.end());
  return from_strings(alphabet, static_cast<int>(owned.front().size()), owned);
}

LSet LSet::start(Alphabet alphabet) { return of({"acb"}, alphabet); }

bool LSet::contains(const ColorString& s) const {
  if (s.alphabet() != alphabet_ || s.length() != length_) return false;
  return std::binary_search(codes_.begin(), codes_.end(), s.code());
}

std::vector<ColorString> LSet::members() const {
  std::vector<ColorString> out;
  out.reserve(codes_.size());
  for (Code c : codes_) out.push_back(ColorString::decode(c, length_, alphabet_));
  return out;
}

std::vector<std::string> LSet::strings() const {
  std::vector<std::string> out;
  out.reserve(codes_.size());
  for (Code c : codes_) out.push_back(ColorString::decode(c, length_, alphabet_).str());
  return out;
}

LSet LSet::unite(const LSet& other) const {
  if (other.alphabet_ != alphabet_ || other.length_ != length_)
    throw PreconditionError("union of sets with different alphabet or length");
  LSet out(alphabet_, length_);
  out.codes_.reserve(codes_.size() + other.codes_.size());
  std::set_union(codes_.begin(), codes_.end(), other.codes_.begin(), other.codes_.end(),
                 std::back_inserter(out.codes_));
  return out;
}

bool LSet::is_subset_of(const LSet& other) const {
  if (other.alphabet_ != alphabet_ || other.length_ != length_) return empty();
  return std::includes(other.codes_.begin(), other.codes_.end(), codes_.begin(), codes_.end());
}

std::string LSet::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& s : strings()) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  return out + "}";
}

bool LSet::lex_less(const LSet& a, const LSet& b) {
  return std::lexicographical_compare(a.codes_.begin(), a.codes_.end(), b.codes_.begin(),
                                      b.codes_.end());
}

// Transitions -----------------------------------------------------------------

void check_transition(int length, TransitionLabel label) {
  if (length < 3)
    throw PreconditionError("transitions need length >= 3, state has length " +
                            std::to_string(length));
  if (label.i < 1)
    throw PreconditionError("label " + label.str() + ": i=" + std::to_string(label.i) +
                            " must be >= 1");
  if (label.j <= label.i)
    throw PreconditionError("label " + label.str() + ": j=" + std::to_string(label.j) +
                            " must exceed i=" + std::to_string(label.i));
  if (label.j > length)
    throw PreconditionError("label " + label.str() + ": j=" + std::to_string(label.j) +
                            " exceeds length " + std::to_string(length));
}

LSet apply_string(const ColorString& s, TransitionLabel label) {
  return apply_set(LSet::from_codes(s.alphabet(), s.length(), {s.code()}), label,
                   {ApplyOptions::Strategy::Sorted});
}

LSet apply_set(const LSet& set, TransitionLabel label, const ApplyOptions& options) {
  const int l = set.length();
  check_transition(l, label);
  const Alphabet alphabet = set.alphabet();
  const int k = alphabet.size();
  const int out_length = label.result_length(l);
  check_length(alphabet, out_length);

  LSet out(alphabet, out_length);
  if (set.empty()) return out;

  const auto pw = powers(alphabet, std::max(l, out_length));
  const int tail_len = l - label.j + 1;  // s_j..s_l
  const Code prefix_div = pw[l - label.i];
  const Code tail_mod = pw[tail_len];
  const Code tail_mul = pw[tail_len];
  const std::uint32_t full = alphabet.full_mask();

  const Code universe = pw[out_length];
  const std::uint64_t expected = set.size() * static_cast<std::uint64_t>(k - 1);
  bool dense = false;
  switch (options.strategy) {
    case ApplyOptions::Strategy::Dense:
      dense = universe <= options.dense_budget_bits;
      break;
    case ApplyOptions::Strategy::Sorted:
      break;
    case ApplyOptions::Strategy::Automatic:
      dense = universe <= options.dense_budget_bits && universe / 64 <= 4 * expected;
      break;
  }

  auto emit_all = [&](auto&& emit) {
    for (Code code : set.codes()) {
      std::uint32_t present = 0;
      for (int t = label.i; t <= label.j; ++t)
        present |= std::uint32_t{1} << ((code / pw[l - t]) % static_cast<Code>(k));
      std::uint32_t absent = full & ~present;
      if (absent == 0) continue;
      const Code head = (code / prefix_div) * static_cast<Code>(k);
      const Code tail = code % tail_mod;
      while (absent != 0) {
        const int c = std::countr_zero(absent);
        absent &= absent - 1;
        emit((head + static_cast<Code>(c)) * tail_mul + tail);
      }
    }
  };

  std::vector<Code> codes;
  if (dense) {
    std::vector<std::uint64_t> bits((universe + 63) / 64, 0);
    emit_all([&](Code c) { bits[c >> 6] |= std::uint64_t{1} << (c & 63); });
    for (std::size_t w = 0; w < bits.size(); ++w) {
      std::uint64_t word = bits[w];
      while (word != 0) {
        codes.push_back(static_cast<Code>(w) * 64 + static_cast<Code>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  } else {
    codes.reserve(expected);
    emit_all([&](Code c) { codes.push_back(c); });
  }
  return LSet::from_codes(alphabet, out_length, std::move(codes));
}

std::vector<TransitionLabel> labels_for_length(int l) {
  std::vector<TransitionLabel> labels;
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) labels.push_back({i, j});
  return labels;
}

std::vector<std::pair<TransitionLabel, LSet>> successors(const LSet& set) {
  if (set.length() < 3)
    throw PreconditionError("transitions need length >= 3, state has length " +
                            std::to_string(set.length()));
  std::vector<std::pair<TransitionLabel, LSet>> out;
  for (TransitionLabel label : labels_for_length(set.length()))
    out.emplace_back(label, apply_set(set, label));
  return out;
}

// Symmetries ------------------------------------------------------------------

LetterPermutation identity_permutation(Alphabet alphabet) {
  LetterPermutation perm(static_cast<std::size_t>(alphabet.size()));
  std::iota(perm.begin(), perm.end(), Letter{0});
  return perm;
}

LetterPermutation swap_permutation(Alphabet alphabet, Letter x, Letter y) {
  auto perm = identity_permutation(alphabet);
  if (x >= perm.size() || y >= perm.size()) throw PreconditionError("swap letter outside alphabet");
  std::swap(perm[x], perm[y]);
  return perm;
}

LSet apply_symmetry(const LSet& set, const Symmetry& symmetry) {
  const Alphabet alphabet = set.alphabet();
  const int k = alphabet.size();
  if (symmetry.perm.size() != static_cast<std::size_t>(k))
    throw PreconditionError("permutation size " + std::to_string(symmetry.perm.size()) +
                            " does not match alphabet size " + std::to_string(k));
  std::uint32_t seen = 0;
  for (Letter x : symmetry.perm) {
    if (x >= k || (seen >> x & 1U))
      throw PreconditionError("letter map is not a bijection on the alphabet");
    seen |= 1U << x;
  }

  const int l = set.length();
  std::vector<Code> codes;
  codes.reserve(set.size());
  std::array<Letter, kMaxLetters> letters{};
  std::array<Letter, kMaxLetters> image{};
  for (Code c : set.codes()) {
    decode_into(c, l, k, letters);
    for (int t = 0; t < l; ++t) {
      const int src = symmetry.reversed ? l - 1 - t : t;
      image[t] = symmetry.perm[letters[src]];
    }
    codes.push_back(encode(image, l, k));
  }
  return LSet::from_codes(alphabet, l, std::move(codes));
}

LSet permute(const LSet& set, const LetterPermutation& perm) {
  return apply_symmetry(set, {perm, false});
}

LSet reverse(const LSet& set) {
  return apply_symmetry(set, {identity_permutation(set.alphabet()), true});
}

std::string_view to_string(SymmetryGroup group) {
  switch (group) {
    case SymmetryGroup::None: return "none";
    case SymmetryGroup::CdSwap: return "cd";
    case SymmetryGroup::CdSwapReversal: return "cd-rev";
    case SymmetryGroup::Full: return "full";
  }
  return "none";
}

SymmetryGroup parse_symmetry_group(std::string_view name) {
  if (name == "none") return SymmetryGroup::None;
  if (name == "cd") return SymmetryGroup::CdSwap;
  if (name == "cd-rev") return SymmetryGroup::CdSwapReversal;
  if (name == "full") return SymmetryGroup::Full;
  throw PreconditionError("unknown symmetry group \"" + std::string(name) +
                          "\" (expected none, cd, cd-rev or full)");
}

std::vector<Symmetry> group_elements(SymmetryGroup group, Alphabet alphabet) {
  const auto id = identity_permutation(alphabet);
  std::vector<Symmetry> out{{id, false}};
  switch (group) {
    case SymmetryGroup::None:
      break;
    case SymmetryGroup::CdSwap:
      if (alphabet.size() >= 4) out.push_back({swap_permutation(alphabet, 2, 3), false});
      break;
    case SymmetryGroup::CdSwapReversal: {
      if (alphabet.size() < 4) {
        out.push_back({swap_permutation(alphabet, 0, 1), true});
        break;
      }
      const auto cd = swap_permutation(alphabet, 2, 3);
      auto ab_cd = swap_permutation(alphabet, 0, 1);
      std::swap(ab_cd[2], ab_cd[3]);
      out.push_back({cd, false});
      out.push_back({swap_permutation(alphabet, 0, 1), true});
      out.push_back({ab_cd, true});
      break;
    }
    case SymmetryGroup::Full: {
      auto perm = id;
      while (std::next_permutation(perm.begin(), perm.end())) out.push_back({perm, false});
      break;
    }
  }
  return out;
}

LSet canonicalize(const LSet& set, std::span<const Symmetry> elements) {
  LSet best = set;
  for (const auto& g : elements) {
    LSet image = apply_symmetry(set, g);
    if (LSet::lex_less(image, best)) best = std::move(image);
  }
  return best;
}

LSet canonicalize(const LSet& set, SymmetryGroup group) {
  if (group == SymmetryGroup::None) return set;
  const auto elements = group_elements(group, set.alphabet());
  return canonicalize(set, elements);
}

}  // namespace fourcolor

std::size_t std::hash<fourcolor::LSet>::operator()(const fourcolor::LSet& set) const noexcept {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t h = mix(static_cast<std::uint64_t>(set.length()) * 16 +
                        static_cast<std::uint64_t>(set.alphabet().size()));
  for (std::uint64_t c : set.codes()) h = mix(h ^ c);
  return static_cast<std::size_t>(h);
}
