#pragma once

// Payload sealing: the scheme encrypts a uniformly random GT "mask"; the
// payload itself travels under XChaCha20-Poly1305 keyed from that mask. A
// wrong decapsulation yields a wrong key and the tag check fails, which is
// how a query reports "no match".

#include <cstddef>
#include <optional>
#include <span>

#include "hve/core/groups.hpp"

namespace hve {

inline constexpr std::size_t kDefaultMaxPayload = std::size_t{1} << 20;
inline constexpr std::size_t kSealNonceBytes = 24;
inline constexpr std::size_t kSealTagBytes = 16;

/// nonce || ciphertext || tag
struct SealedPayload {
  Bytes blob;

  std::size_t tag_len() const { return kSealTagBytes; }
  std::size_t payload_size() const { return blob.size() - kSealNonceBytes - kSealTagBytes; }

  friend bool operator==(const SealedPayload&, const SealedPayload&) = default;
};

struct Sealing {
  GT mask;
  SealedPayload sealed;
};

class MatchResult {
 public:
  static MatchResult matched(Bytes payload) { return MatchResult(std::move(payload)); }
  static MatchResult no_match() { return MatchResult(); }

  bool is_match() const { return payload_.has_value(); }
  explicit operator bool() const { return is_match(); }
  /// Precondition: is_match().
  const Bytes& payload() const { return *payload_; }

 private:
  MatchResult() = default;
  explicit MatchResult(Bytes p) : payload_(std::move(p)) {}

  std::optional<Bytes> payload_;
};

/// Throws UsageError if payload exceeds max_payload.
Sealing seal(RandomSource& rng, std::span<const std::uint8_t> payload,
             std::size_t max_payload = kDefaultMaxPayload);

/// Seal under a caller-chosen mask.
SealedPayload seal_with_mask(RandomSource& rng, const GT& mask,
                             std::span<const std::uint8_t> payload,
                             std::size_t max_payload = kDefaultMaxPayload);

/// Authentication failure (including a malformed blob) is NoMatch.
MatchResult open(const GT& candidate_mask, const SealedPayload& sealed);

}  // namespace hve
