#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "tourney/error.hpp"

namespace tourney {

inline constexpr int kMaxOrder = 64;

using Row = std::uint64_t;

/// A subset of the vertices of some host tournament, as a bitmask.
struct VertexSet {
  Row mask = 0;

  static constexpr VertexSet all(int n) noexcept {
    return VertexSet{n >= 64 ? ~Row{0} : (Row{1} << n) - 1};
  }
  static constexpr VertexSet single(int v) noexcept { return VertexSet{Row{1} << v}; }

  constexpr int size() const noexcept { return std::popcount(mask); }
  constexpr bool empty() const noexcept { return mask == 0; }
  constexpr bool contains(int v) const noexcept { return (mask >> v) & 1U; }

  constexpr VertexSet operator&(VertexSet o) const noexcept { return {mask & o.mask}; }
  constexpr VertexSet operator|(VertexSet o) const noexcept { return {mask | o.mask}; }
  constexpr bool operator==(const VertexSet&) const = default;

  /// Members in increasing order.
  std::vector<int> members() const;
};

/// An orientation of the complete graph on n vertices, stored as out-neighbourhood
/// bitmasks. Instances are immutable and always satisfy the tournament invariants.
class Tournament {
 public:
  /// Validating constructor: checks loops, completeness/antisymmetry and row width.
  static Tournament from_rows(int n, std::span<const Row> rows);

  /// Builds a tournament by asking `dominates(i, j)` once for every pair i < j;
  /// a true answer orients i -> j, otherwise j -> i.
  template <class Pred>
  static Tournament from_pair_rule(int n, Pred&& dominates) {
    Tournament t(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (dominates(i, j))
          t.out_[i] |= Row{1} << j;
        else
          t.out_[j] |= Row{1} << i;
      }
    return t;
  }

  /// Pair k (in the order (0,1),(0,2),...,(0,n-1),(1,2),...) is oriented low->high
  /// iff bit k of `code` is set. Requires n(n-1)/2 <= 64.
  static Tournament from_upper_code(int n, std::uint64_t code);

  int order() const noexcept { return n_; }
  Row out_row(int v) const noexcept { return out_[v]; }
  Row in_row(int v) const noexcept { return all_mask() & ~out_[v] & ~(Row{1} << v); }
  VertexSet out_set(int v) const noexcept { return {out_row(v)}; }
  VertexSet in_set(int v) const noexcept { return {in_row(v)}; }
  VertexSet vertices() const noexcept { return VertexSet::all(n_); }
  bool arc(int from, int to) const noexcept { return (out_[from] >> to) & 1U; }
  int out_degree(int v) const noexcept { return std::popcount(out_[v]); }
  int in_degree(int v) const noexcept { return n_ - 1 - out_degree(v); }

  std::span<const Row> rows() const noexcept { return {out_.data(), static_cast<std::size_t>(n_)}; }

  /// Vertex at position k of the result is perm[k] of this tournament.
  Tournament relabeled(std::span<const int> perm) const;

  bool operator==(const Tournament& o) const noexcept;

 private:
  explicit Tournament(int n);
  Row all_mask() const noexcept { return VertexSet::all(n_).mask; }

  int n_;
  std::array<Row, kMaxOrder> out_{};
};

/// Vertices of S taken in increasing order, arcs preserved.
Tournament induced(const Tournament& t, VertexSet s);

/// All arcs reversed.
Tournament converse(const Tournament& t);

/// Replaces vertex i of `outer` with replacements[i]; arcs between blocks follow `outer`.
Tournament compose(const Tournament& outer, std::span<const Tournament> replacements);

/// Strongly connected components listed so that each one dominates all later ones.
struct StrongDecomposition {
  std::vector<VertexSet> components;

  bool strong() const noexcept { return components.size() == 1; }
};

StrongDecomposition strong_decomposition(const Tournament& t);

/// Strongness of the subtournament induced on S (S non-empty).
bool is_strong_subset(const Tournament& t, VertexSet s);

inline int upper_pair_count(int n) noexcept { return n * (n - 1) / 2; }

}  // namespace tourney
