#ifndef SWT_TEST_SUITE_HPP
#define SWT_TEST_SUITE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "swt/presentation.hpp"
#include "swt/presentation_io.hpp"

namespace swt::testing {

struct SuiteShape {
  int max_g = 2;
  int max_handles = 2;
  int max_genus = 3;  // bound on g + N
  int max_words = 8;
  int min_handles = 0;
};

/// Deterministic list of random presentations with the given shape.
inline std::vector<Presentation> random_suite(int count, std::uint64_t seed, const SuiteShape& shape) {
  std::mt19937_64 rng(seed);
  std::vector<Presentation> out;
  while (static_cast<int>(out.size()) < count) {
    const int g = static_cast<int>(rng() % (shape.max_g + 1));
    const int n = shape.min_handles + static_cast<int>(rng() % (shape.max_handles - shape.min_handles + 1));
    if (g + n > shape.max_genus) continue;
    const int words = static_cast<int>(rng() % (shape.max_words + 1));
    const std::uint64_t s = rng();
    out.push_back(generate_fixture(g, n, words, s, "g" + std::to_string(g) + "N" + std::to_string(n) + "w" +
                                                     std::to_string(words) + "s" + std::to_string(s)));
  }
  return out;
}

}  // namespace swt::testing

#endif  // SWT_TEST_SUITE_HPP
