#include <gtest/gtest.h>

#include "u2mp/lattice.hpp"

using namespace u2mp;

// For a basis (r1, r2) and a primitive r3 strictly inside cone(r2, -r1),
// (r1, r3) and (r3, r2) are both bases exactly when r3 = r2 - r1.
TEST(BasisExtension, BasisExtensionIsUnique) {
  std::size_t pairs = 0, hits = 0;
  for (std::int64_t a = -10; a <= 10; ++a) {
    for (std::int64_t b = -10; b <= 10; ++b) {
      for (std::int64_t c = -10; c <= 10; ++c) {
        for (std::int64_t d = -10; d <= 10; ++d) {
          const Weight r1{a, b}, r2{c, d};
          if (!is_lattice_basis(r1, r2)) continue;
          ++pairs;
          // Strictly inside cone(r2, -r1): r3 = m r2 - n r1, m, n >= 1 coprime.
          for (std::int64_t m = 1; m <= 6; ++m) {
            for (std::int64_t n = 1; n <= 6; ++n) {
              const Weight r3{m * c - n * a, m * d - n * b};
              if (!is_primitive(r3)) continue;
              const bool both = is_lattice_basis(r1, r3) && is_lattice_basis(r3, r2);
              const bool diff = r3 == Weight{c - a, d - b};
              ASSERT_EQ(both, diff) << to_string(r1) << to_string(r2) << to_string(r3);
              hits += both ? 1 : 0;
            }
          }
        }
      }
    }
  }
  EXPECT_GT(pairs, 0u);
  EXPECT_EQ(hits, pairs);
}
