#pragma once

#include <initializer_list>
#include <vector>

#include "hve/api/pattern.hpp"

namespace hve::test {

inline constexpr int kStar = -1;
inline constexpr int kQuery = -2;  // '?'

/// Small-integer pattern: kStar for '*', kQuery for '?'.
inline PatternVector pattern(const std::vector<int>& v) {
  std::vector<Slot> s;
  for (int x : v) {
    if (x == kStar)
      s.emplace_back(Wildcard{});
    else if (x == kQuery)
      s.emplace_back(Delegatable{});
    else
      s.emplace_back(Scalar::from_u64(static_cast<std::uint64_t>(x)));
  }
  return PatternVector(s);
}

inline AttributeVector attrs(std::initializer_list<std::uint64_t> v) {
  return AttributeVector::from_integers(std::vector<std::uint64_t>(v));
}

}  // namespace hve::test
