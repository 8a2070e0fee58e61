#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace hve::test {

/// Calls f on every vector in {1..n}^w.
inline void for_each_value_vector(std::size_t n, std::size_t w,
                                  const std::function<void(const std::vector<std::uint64_t>&)>& f) {
  std::vector<std::uint64_t> v(w, 1);
  for (;;) {
    f(v);
    std::size_t i = 0;
    while (i < w && v[i] == n) v[i++] = 1;
    if (i == w) return;
    ++v[i];
  }
}

/// Every interval [lo, hi] within {1..n}.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> all_intervals(std::size_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t lo = 1; lo <= n; ++lo)
    for (std::uint64_t hi = lo; hi <= n; ++hi) out.emplace_back(lo, hi);
  return out;
}

/// Every subset of {1..n}, including the empty set.
inline std::vector<std::set<std::uint64_t>> all_subsets(std::size_t n) {
  std::vector<std::set<std::uint64_t>> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::set<std::uint64_t> s;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) s.insert(j + 1);
    out.push_back(std::move(s));
  }
  return out;
}

/// Calls f on every w-tuple of choices from `options`.
template <class T>
void for_each_tuple(const std::vector<T>& options, std::size_t w,
                    const std::function<void(const std::vector<T>&)>& f) {
  std::vector<std::size_t> idx(w, 0);
  std::vector<T> cur(w, options.front());
  for (;;) {
    for (std::size_t i = 0; i < w; ++i) cur[i] = options[idx[i]];
    f(cur);
    std::size_t i = 0;
    while (i < w && idx[i] + 1 == options.size()) idx[i++] = 0;
    if (i == w) return;
    ++idx[i];
  }
}

}  // namespace hve::test
