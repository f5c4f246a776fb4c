#pragma once

#include <string>
#include <string_view>

#include "tourney/tournament.hpp"

namespace tourney {

// ".tour" text format: a decimal order n on the first line, then n lines of n
// characters from {0,1}; row i column j is 1 iff i -> j. The final newline is
// optional and nothing else is accepted.

/// Throws Error(ParseError) with "line L, column C" in the message, or the
/// validation error of Tournament::from_rows.
Tournament parse_tour(std::string_view text);

/// Canonical writer; always ends with a newline.
std::string write_tour(const Tournament& t);

Tournament read_tour_file(const std::string& path);
void write_tour_file(const std::string& path, const Tournament& t);

}  // namespace tourney
