#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Connection set of a rotational tournament on Z_n: i -> j iff (j - i) mod n is in `residues`.
struct RotationalSymbol {
  int n = 0;
  std::vector<int> residues;

  /// Throws BadSymbol unless n is odd and S holds exactly one of d, -d for each d != 0.
  void validate() const;
};

/// TT_n with vertex 0 the source: i -> j iff i < j.
Tournament gen_transitive(int n);

Tournament gen_rotational(const RotationalSymbol& sym);

/// Regular locally transitive tournament: symbol {1, ..., (n-1)/2}.
Tournament gen_rlt(int n);

/// Quadratic residue tournament on Z_p, p prime and p = 3 (mod 4).
Tournament gen_qr(int p);

/// Quadratic residue tournament on GF(q), q = p^k with p = 3 (mod 4) prime and k odd.
/// Elements are indexed by their base-p coefficient vectors. Equals gen_qr(q) when k = 1.
Tournament gen_qr_field(int q);

/// T_1 => T_2 => ... => T_k (earlier blocks dominate later ones).
Tournament gen_chain(std::span<const Tournament> blocks);

/// Named tournaments: delta, st4, mixed9_a, mixed9_b, delta_tt2, delta_delta, kz7,
/// dr7, delta_o_tt3_o, delta_tt2_o_tt2, delta_o_delta_o.
Tournament gen_named(std::string_view name);
std::vector<std::string> named_tournaments();

/// Each pair oriented by an independent fair coin from a seeded mt19937_64.
Tournament gen_random(int n, std::uint64_t seed);

/// The two order-9 regular tournaments (besides the nearly-doubly-regular ones and
/// Delta.Delta) in which no out-set contains a sink, verbatim in ".tour" format.
extern const std::string_view kMixedNineA;
extern const std::string_view kMixedNineB;

}  // namespace tourney
