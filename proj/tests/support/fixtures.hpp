#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hve/api/pattern.hpp"
#include "hve/core/random.hpp"

namespace hve::test {

/// Seeded generator; tests are reproducible by construction.
inline DeterministicRandom rng_for(std::uint64_t seed) { return DeterministicRandom(seed); }

/// Uniform integer in [0, n).
std::uint64_t uniform(RandomSource& rng, std::uint64_t n);

Bytes random_bytes(RandomSource& rng, std::size_t n);

/// Attribute vector over the small alphabet {0, ..., alphabet-1}.
std::vector<std::uint64_t> random_small_vector(RandomSource& rng, std::size_t l,
                                               std::uint64_t alphabet);

/// Pattern over {0, ..., alphabet-1, *} matching x in exactly the requested way.
PatternVector matching_pattern(RandomSource& rng, const std::vector<std::uint64_t>& x);
PatternVector non_matching_pattern(RandomSource& rng, const std::vector<std::uint64_t>& x,
                                   std::uint64_t alphabet);

AttributeVector to_attributes(const std::vector<std::uint64_t>& x);

}  // namespace hve::test
