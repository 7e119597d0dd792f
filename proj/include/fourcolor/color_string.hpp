#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fourcolor/alphabet.hpp"

namespace fourcolor {

/// A word over a k-letter alphabet.
///
/// Strings of one length are ordered lexicographically (a < b < c ...), which
/// coincides with numeric order of their base-k codes, first letter most
/// significant.
class ColorString {
public:
  ColorString() = default;
  ColorString(Alphabet alphabet, std::vector<Letter> letters);

  static ColorString parse(std::string_view text, Alphabet alphabet = Alphabet(4));
  static ColorString decode(std::uint64_t code, int length, Alphabet alphabet);

  Alphabet alphabet() const noexcept { return alphabet_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  /// 1-indexed access.
  Letter at(int position) const { return letters_.at(static_cast<std::size_t>(position - 1)); }

  std::uint64_t code() const noexcept;
  std::string str() const;

  friend bool operator==(const ColorString&, const ColorString&) = default;
  friend auto operator<=>(const ColorString& a, const ColorString& b) {
    return a.letters_ <=> b.letters_;
  }

private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

}  // namespace fourcolor
