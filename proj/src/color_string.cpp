#include "fourcolor/color_string.hpp"

#include <algorithm>

namespace fourcolor {

ColorString::ColorString(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter x : letters_) {
    if (x >= alphabet_.size())
      throw PreconditionError("letter index " + std::to_string(x) +
                              " outside alphabet of size " +
                              std::to_string(alphabet_.size()));
  }
}

ColorString ColorString::parse(std::string_view text, Alphabet alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) letters.push_back(alphabet.parse(ch));
  return {alphabet, std::move(letters)};
}

ColorString ColorString::decode(std::uint64_t code, int length, Alphabet alphabet) {
  std::vector<Letter> letters(static_cast<std::size_t>(length));
  const auto k = static_cast<std::uint64_t>(alphabet.size());
  for (int t = length - 1; t >= 0; --t) {
    letters[static_cast<std::size_t>(t)] = static_cast<Letter>(code % k);
    code /= k;
  }
  if (code != 0) throw PreconditionError("code does not fit the declared length");
  return {alphabet, std::move(letters)};
}

std::uint64_t ColorString::code() const noexcept {
  const auto k = static_cast<std::uint64_t>(alphabet_.size());
  std::uint64_t code = 0;
  for (Letter x : letters_) code = code * k + x;
  return code;
}

std::string ColorString::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(Alphabet::display(x));
  return out;
}

}  // namespace fourcolor
