#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

inline constexpr int kMaxCanonicalOrder = 16;

/// Isomorphism-class key: the lexicographically smallest row-major adjacency
/// string ('0'/'1', n*n characters) over all vertex relabelings.
struct CanonicalForm {
  int n = 0;
  std::string key;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Relabeling that realises the canonical form: vertex k of the canonical
/// tournament is vertex labeling[k] of the input.
std::vector<int> canonical_labeling(const Tournament& t);

CanonicalForm canonical_form(const Tournament& t);

/// The relabeled tournament whose adjacency string is the canonical key.
Tournament canonical_tournament(const Tournament& t);

bool is_isomorphic(const Tournament& a, const Tournament& b);

/// Row-major '0'/'1' adjacency string without any relabeling.
std::string adjacency_string(const Tournament& t);

}  // namespace tourney
