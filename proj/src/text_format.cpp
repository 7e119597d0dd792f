#include "fourcolor/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fourcolor {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

int parse_int(std::string_view token, std::size_t line, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("expected integer " + std::string(what) + ", got \"" + std::string(token) + "\"",
                     line);
  return value;
}

int parse_keyed_int(std::string_view token, std::string_view key, std::size_t line) {
  if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=')
    throw ParseError("expected " + std::string(key) + "=<int>, got \"" + std::string(token) + "\"",
                     line);
  return parse_int(token.substr(key.size() + 1), line, key);
}

/// Parses one l-set block whose header sits on `lines[first]`.
LSet parse_lset_lines(const std::vector<std::string_view>& lines, std::size_t first,
                      std::size_t last) {
  while (first < last && split_ws(lines[first]).empty()) ++first;
  if (first >= last) throw ParseError("missing lset header", first + 1);
  const auto header = split_ws(lines[first]);
  if (header.size() != 3 || header[0] != "lset")
    throw ParseError("expected header `lset k=<k> l=<l>`", first + 1);
  const int k = parse_keyed_int(header[1], "k", first + 1);
  const int l = parse_keyed_int(header[2], "l", first + 1);
  Alphabet alphabet;
  try {
    alphabet = Alphabet(k);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), first + 1);
  }
  std::vector<std::uint64_t> codes;
  for (std::size_t n = first + 1; n < last; ++n) {
    const auto tokens = split_ws(lines[n]);
    if (tokens.empty()) continue;
    if (tokens.size() != 1) throw ParseError("expected one member string per line", n + 1);
    if (static_cast<int>(tokens[0].size()) != l)
      throw ParseError("member \"" + std::string(tokens[0]) + "\" has length " +
                           std::to_string(tokens[0].size()) + ", header says l=" + std::to_string(l),
                       n + 1);
    try {
      codes.push_back(ColorString::parse(tokens[0], alphabet).code());
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), n + 1);
    }
  }
  try {
    return LSet::from_codes(alphabet, l, std::move(codes));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), first + 1);
  }
}

}  // namespace

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

std::string format_lset(const LSet& set) {
  std::string out = "lset k=" + std::to_string(set.alphabet().size()) +
                    " l=" + std::to_string(set.length()) + "\n";
  for (const auto& s : set.strings()) {
    out += s;
    out += '\n';
  }
  return out;
}

LSet parse_lset(std::string_view text) {
  const auto lines = split_lines(text);
  return parse_lset_lines(lines, 0, lines.size());
}

std::string format_lset_stream(const std::vector<LSet>& sets) {
  std::string out;
  for (std::size_t n = 0; n < sets.size(); ++n) {
    if (n > 0) out += "---\n";
    out += format_lset(sets[n]);
  }
  return out;
}

std::vector<LSet> parse_lset_stream(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<LSet> out;
  std::size_t begin = 0;
  for (std::size_t n = 0; n <= lines.size(); ++n) {
    const bool sep = n == lines.size() || split_ws(lines[n]) == std::vector<std::string_view>{"---"};
    if (!sep) continue;
    out.push_back(parse_lset_lines(lines, begin, n));
    begin = n + 1;
  }
  return out;
}

std::string format_deriv(const std::vector<TransitionLabel>& steps) {
  std::string out = "deriv\n";
  for (auto s : steps) out += std::to_string(s.i) + " " + std::to_string(s.j) + "\n";
  return out;
}

std::vector<TransitionLabel> parse_deriv(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t n = 0;
  while (n < lines.size() && split_ws(lines[n]).empty()) ++n;
  if (n >= lines.size() || split_ws(lines[n]) != std::vector<std::string_view>{"deriv"})
    throw ParseError("expected header `deriv`", n + 1);
  std::vector<TransitionLabel> steps;
  for (++n; n < lines.size(); ++n) {
    const auto tokens = split_ws(lines[n]);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError("expected `i j`", n + 1);
    TransitionLabel label{parse_int(tokens[0], n + 1, "i"), parse_int(tokens[1], n + 1, "j")};
    if (label.i < 1 || label.j <= label.i)
      throw ParseError("label needs 1 <= i < j, got " + label.str(), n + 1);
    steps.push_back(label);
  }
  return steps;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot open file for writing");
  out << contents;
  if (!out) throw Error(path + ": write failed");
}

}  // namespace fourcolor
