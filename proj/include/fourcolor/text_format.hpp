#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fourcolor/lset.hpp"

namespace fourcolor {

// ".lset":  `lset k=<k> l=<l>` then one member per line, sorted ascending.
// ".deriv": `deriv` then one `i j` pair per line, 1-indexed.
// Streams of l-sets are separated by a line holding `---`.

std::string format_lset(const LSet& set);
LSet parse_lset(std::string_view text);

std::string format_lset_stream(const std::vector<LSet>& sets);
std::vector<LSet> parse_lset_stream(std::string_view text);

std::string format_deriv(const std::vector<TransitionLabel>& steps);
std::vector<TransitionLabel> parse_deriv(std::string_view text);

/// Whole file contents; throws Error naming the path when unreadable.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

/// Splits into lines without terminators; a trailing newline adds no line.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace fourcolor
