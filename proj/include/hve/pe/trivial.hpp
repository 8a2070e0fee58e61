#pragma once

// Predicate encryption for an explicit family {f_1..f_m} built from m
// independent public-key encryptions. Slot j of a ciphertext carries the
// payload when f_j(x) = 1 and a reserved "bottom" plaintext otherwise.
// Used as a reference oracle for small enumerable families.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hve/api/pattern.hpp"
#include "hve/api/sealed.hpp"

namespace hve::pe {

/// Hashed ElGamal over G1 with the payload sealing layer as the DEM.
struct PkeKeyPair {
  G1 pk;
  Scalar sk;
};

struct PkeCiphertext {
  G1 ephemeral;
  SealedPayload sealed;
};

PkeKeyPair pke_keygen(RandomSource& rng);
PkeCiphertext pke_encrypt(RandomSource& rng, const G1& pk, std::span<const std::uint8_t> msg);
/// nullopt when authentication fails.
std::optional<Bytes> pke_decrypt(const Scalar& sk, const PkeCiphertext& ct);

struct TrivialPk {
  std::vector<G1> pks;
  std::size_t size() const { return pks.size(); }
};

struct TrivialSk {
  std::vector<Scalar> sks;
  std::size_t size() const { return sks.size(); }
};

struct TrivialToken {
  std::size_t j = 0;
  Scalar sk;
};

struct TrivialCt {
  std::vector<PkeCiphertext> slots;
  std::size_t size() const { return slots.size(); }
};

struct TrivialKeys {
  TrivialPk pk;
  TrivialSk sk;
};

/// Throws UsageError on an empty family.
TrivialKeys tpe_setup(RandomSource& rng, std::span<const PatternVector> family);
/// Throws UsageError when j >= m.
TrivialToken tpe_gen_token(std::size_t j, const TrivialSk& sk);
TrivialCt tpe_encrypt(RandomSource& rng, const AttributeVector& x,
                      std::span<const std::uint8_t> payload, const TrivialPk& pk,
                      std::span<const PatternVector> family);
MatchResult tpe_query(const TrivialCt& ct, const TrivialToken& tk);

}  // namespace hve::pe
