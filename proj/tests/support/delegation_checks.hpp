#pragma once

#include <vector>

#include "fixtures.hpp"
#include "scheme_checks.hpp"
#include "hve/schemes/dhve.hpp"

namespace hve::test {

/// Queries `delegated` and `fresh` against the same ciphertexts and counts
/// disagreements in match outcome or payload. Attributes are drawn from a
/// two-letter alphabet so both outcomes occur often.
inline TrialStats delegation_agreement(RandomSource& rng, const Dhve3::KeyPair& kp,
                                       const Dhve3::Token& delegated, const Dhve3::Token& fresh,
                                       std::size_t n, std::size_t* matches = nullptr) {
  TrialStats st;
  for (std::size_t k = 0; k < n; ++k) {
    const auto xv = random_small_vector(rng, kp.pk.length(), 2);
    const Bytes payload = random_bytes(rng, 1 + uniform(rng, 16));
    const auto ct = Dhve3::encrypt(rng, to_attributes(xv), payload, kp.pk);
    const MatchResult a = Dhve3::query(ct, delegated, kp.pk);
    const MatchResult b = Dhve3::query(ct, fresh, kp.pk);
    ++st.trials;
    if (a.is_match() != b.is_match() || (a.is_match() && a.payload() != b.payload()) ||
        (a.is_match() && a.payload() != payload))
      ++st.failures;
    if (matches && a.is_match()) ++*matches;
  }
  return st;
}

/// One delegation step: slot `k` set to `value` (or '*' when value < 0).
struct Step {
  std::size_t k;
  int value;
};

/// Applies steps to a token for `start` and returns (final pattern, token).
inline std::pair<PatternVector, Dhve3::Token> apply_steps(RandomSource& rng,
                                                          const Dhve3::KeyPair& kp,
                                                          PatternVector sigma,
                                                          const std::vector<Step>& steps) {
  Dhve3::Token tk = Dhve3::gen_token(rng, sigma, kp.sk, kp.pk);
  for (const Step& s : steps) {
    sigma = s.value < 0 ? sigma.with(s.k, Wildcard{})
                        : sigma.with(s.k, Scalar::from_u64(static_cast<std::uint64_t>(s.value)));
    tk = Dhve3::delegate(rng, sigma, tk, kp.pk);
  }
  return {sigma, tk};
}

}  // namespace hve::test
