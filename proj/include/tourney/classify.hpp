#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "tourney/tournament.hpp"

namespace tourney {

enum class Side { Plus, Minus, Both };

// Predicates on the subtournament induced by a vertex subset. The empty set
// counts as regular, near regular and transitive.
bool subset_is_transitive(const Tournament& t, VertexSet s);
bool subset_is_regular(const Tournament& t, VertexSet s);
bool subset_is_near_regular(const Tournament& t, VertexSet s);
bool subset_is_doubly_regular(const Tournament& t, VertexSet s);
bool subset_is_nearly_doubly_regular(const Tournament& t, VertexSet s);

bool is_transitive(const Tournament& t);
bool is_regular(const Tournament& t);
bool is_near_regular(const Tournament& t);

bool is_locally_transitive(const Tournament& t, Side side);
/// Every out-set (in-set) induces a regular or near-regular tournament, by parity of its size.
bool is_locally_regular(const Tournament& t, Side side);

/// Regular, n = 3 (mod 4), and |N+(i) & N+(j)| = (n-3)/4 on every arc.
bool is_doubly_regular(const Tournament& t);
/// Regular, n = 1 (mod 4), and every out-set induces a near-regular tournament.
bool is_nearly_doubly_regular(const Tournament& t);

/// Regular and every out-set induces a doubly-regular tournament.
bool is_rldr(const Tournament& t);
/// Regular and every out-set induces a nearly-doubly-regular tournament.
bool is_rlndr(const Tournament& t);

/// Every two distinct vertices have a common out-neighbour.
bool aat_positive(const Tournament& t);

/// Landau's criterion for a non-decreasing score sequence. Throws NotSorted.
bool landau_feasible(std::span<const int> scores);

struct ClassificationReport {
  // Key order is the serialisation order.
  static constexpr std::array<std::string_view, 15> kFlagNames{
      "strong",
      "transitive",
      "regular",
      "near_regular",
      "doubly_regular",
      "nearly_doubly_regular",
      "locally_transitive_plus",
      "locally_transitive_minus",
      "locally_transitive",
      "locally_regular_plus",
      "locally_regular_minus",
      "locally_regular",
      "rldr",
      "rlndr",
      "aat_positive",
  };

  int n = 0;
  std::array<bool, kFlagNames.size()> flags{};
  std::optional<int> semi_degree;

  bool flag(std::string_view name) const;
};

ClassificationReport classify(const Tournament& t);

}  // namespace tourney
