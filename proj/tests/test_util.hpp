#pragma once

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "tourney/error.hpp"
#include "tourney/tournament.hpp"

#define EXPECT_ERRC(stmt, errc)                                         \
  do {                                                                  \
    try {                                                               \
      (void)(stmt);                                                     \
      ADD_FAILURE() << #stmt " did not throw";                          \
    } catch (const tourney::Error& e_) {                                \
      EXPECT_EQ(e_.code(), errc) << e_.what();                          \
    }                                                                   \
  } while (0)

namespace testutil {

inline std::vector<int> shuffled_labels(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline std::string fixture(const std::string& name) { return std::string(TOURNEY_FIXTURE_DIR) + "/" + name; }

}  // namespace testutil
