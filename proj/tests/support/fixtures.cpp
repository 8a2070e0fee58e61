#include "fixtures.hpp"

#include <stdexcept>

namespace hve::test {

std::uint64_t uniform(RandomSource& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t v = 0;
    rng.fill({reinterpret_cast<std::uint8_t*>(&v), sizeof v});
    if (v < limit) return v % n;
  }
}

Bytes random_bytes(RandomSource& rng, std::size_t n) {
  Bytes b(n);
  rng.fill(b);
  return b;
}

std::vector<std::uint64_t> random_small_vector(RandomSource& rng, std::size_t l,
                                               std::uint64_t alphabet) {
  std::vector<std::uint64_t> x(l);
  for (auto& v : x) v = uniform(rng, alphabet);
  return x;
}

PatternVector matching_pattern(RandomSource& rng, const std::vector<std::uint64_t>& x) {
  std::vector<Slot> slots;
  for (std::uint64_t v : x) {
    if (uniform(rng, 2) == 0)
      slots.emplace_back(Wildcard{});
    else
      slots.emplace_back(Scalar::from_u64(v));
  }
  return PatternVector(std::move(slots));
}

PatternVector non_matching_pattern(RandomSource& rng, const std::vector<std::uint64_t>& x,
                                   std::uint64_t alphabet) {
  const std::size_t bad = uniform(rng, x.size());
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == bad) {
      const std::uint64_t other = (x[i] + 1 + uniform(rng, alphabet - 1)) % alphabet;
      slots.emplace_back(Scalar::from_u64(other));
    } else if (uniform(rng, 2) == 0) {
      slots.emplace_back(Wildcard{});
    } else {
      // Other fixed slots may or may not match.
      slots.emplace_back(Scalar::from_u64(uniform(rng, 3) == 0 ? uniform(rng, alphabet) : x[i]));
    }
  }
  return PatternVector(std::move(slots));
}

AttributeVector to_attributes(const std::vector<std::uint64_t>& x) {
  return AttributeVector::from_integers(x);
}

}  // namespace hve::test
