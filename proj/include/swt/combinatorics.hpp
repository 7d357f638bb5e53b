#ifndef SWT_COMBINATORICS_HPP
#define SWT_COMBINATORICS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace swt {

using IndexList = std::vector<int>;

/// All k-element subsets of {0..n-1}, each ascending, in lexicographic order.
inline std::vector<IndexList> k_subsets(int n, int k) {
  std::vector<IndexList> out;
  if (k < 0 || k > n) return out;
  IndexList cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Parity of a permutation of {0..n-1} given by its images: 0 even, 1 odd.
inline int permutation_parity(std::span<const int> perm) {
  std::vector<bool> seen(perm.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    parity ^= static_cast<int>((len + 1) % 2);
  }
  return parity;
}

/// Sign (+1/-1) of the permutation that sorts `seq` ascending, or 0 when
/// `seq` has a repeated entry.
inline int sorting_sign(std::span<const int> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) sign = -sign;
    }
  return sign;
}

/// Calls f(parts) for every composition of `total` into `count` parts, each
/// part >= min_part, in lexicographic order of the part vector.
inline void for_each_composition(int total, int count, int min_part,
                                 const std::function<void(std::span<const int>)>& f) {
  if (count == 0) {
    if (total == 0) f({});
    return;
  }
  std::vector<int> parts(count);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == count - 1) {
      if (remaining >= min_part) {
        parts[pos] = remaining;
        f(parts);
      }
      return;
    }
    for (int p = min_part; remaining - p >= min_part * (count - pos - 1); ++p) {
      parts[pos] = p;
      rec(pos + 1, remaining - p);
    }
  };
  rec(0, total);
}

}  // namespace swt

#endif  // SWT_COMBINATORICS_HPP
