#pragma once

#include <cstdint>
#include <string>

#include "fourcolor/error.hpp"

namespace fourcolor {

using Letter = std::uint8_t;

/// A k-letter alphabet, letters 0..k-1 displayed as a, b, c, ...
class Alphabet {
public:
  static constexpr int kMinSize = 2;
  static constexpr int kMaxSize = 8;

  constexpr Alphabet() = default;
  explicit Alphabet(int size) : size_(size) {
    if (size < kMinSize || size > kMaxSize)
      throw PreconditionError("alphabet size must be in [2, 8], got " +
                              std::to_string(size));
  }

  constexpr int size() const noexcept { return size_; }

  /// Longest string length whose base-k code fits in 63 bits.
  int max_length() const noexcept {
    int l = 0;
    std::uint64_t universe = 1;
    while (universe <= (std::uint64_t{1} << 63) / static_cast<std::uint64_t>(size_)) {
      universe *= static_cast<std::uint64_t>(size_);
      ++l;
    }
    return l;
  }

  static constexpr char display(Letter x) noexcept {
    return static_cast<char>('a' + x);
  }

  Letter parse(char ch) const {
    int x = ch - 'a';
    if (x < 0 || x >= size_)
      throw PreconditionError(std::string("letter '") + ch +
                              "' is outside alphabet of size " +
                              std::to_string(size_));
    return static_cast<Letter>(x);
  }

  /// Bitmask with one bit per letter.
  constexpr std::uint32_t full_mask() const noexcept {
    return (std::uint32_t{1} << size_) - 1;
  }

  friend constexpr bool operator==(Alphabet, Alphabet) = default;

private:
  int size_ = 4;
};

}  // namespace fourcolor
