#include "hve/pe/trivial.hpp"

#include <string>

#include "hve/core/error.hpp"

namespace hve::pe {
namespace {

constexpr std::uint8_t kBottom = 0x00;
constexpr std::uint8_t kPayload = 0x01;

GT mask_from_shared(const G1& shared) {
  const auto bytes = shared.serialize();
  return GT::generator().pow(hash_to_scalar(bytes, "hve/tpe/kdf/v1"));
}

}  // namespace

PkeKeyPair pke_keygen(RandomSource& rng) {
  Scalar sk = Scalar::random_nonzero(rng);
  return {G1::generator().pow(sk), sk};
}

PkeCiphertext pke_encrypt(RandomSource& rng, const G1& pk, std::span<const std::uint8_t> msg) {
  const Scalar k = Scalar::random_nonzero(rng);
  PkeCiphertext ct;
  ct.ephemeral = G1::generator().pow(k);
  ct.sealed = seal_with_mask(rng, mask_from_shared(pk.pow(k)), msg);
  return ct;
}

std::optional<Bytes> pke_decrypt(const Scalar& sk, const PkeCiphertext& ct) {
  MatchResult r = open(mask_from_shared(ct.ephemeral.pow(sk)), ct.sealed);
  if (!r) return std::nullopt;
  return r.payload();
}

TrivialKeys tpe_setup(RandomSource& rng, std::span<const PatternVector> family) {
  if (family.empty()) throw UsageError("predicate family must not be empty");
  TrivialKeys keys;
  for (std::size_t j = 0; j < family.size(); ++j) {
    auto kp = pke_keygen(rng);
    keys.pk.pks.push_back(kp.pk);
    keys.sk.sks.push_back(kp.sk);
  }
  return keys;
}

TrivialToken tpe_gen_token(std::size_t j, const TrivialSk& sk) {
  if (j >= sk.size())
    throw UsageError("predicate index " + std::to_string(j) + " out of range (m = " +
                     std::to_string(sk.size()) + ")");
  return {j, sk.sks[j]};
}

TrivialCt tpe_encrypt(RandomSource& rng, const AttributeVector& x,
                      std::span<const std::uint8_t> payload, const TrivialPk& pk,
                      std::span<const PatternVector> family) {
  if (family.size() != pk.size()) throw UsageError("family size does not match public key");
  Bytes full;
  full.reserve(payload.size() + 1);
  full.push_back(kPayload);
  full.insert(full.end(), payload.begin(), payload.end());
  const std::uint8_t bottom[] = {kBottom};

  TrivialCt ct;
  ct.slots.reserve(family.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (predicate_eval(family[j], x))
      ct.slots.push_back(pke_encrypt(rng, pk.pks[j], full));
    else
      ct.slots.push_back(pke_encrypt(rng, pk.pks[j], bottom));
  }
  return ct;
}

MatchResult tpe_query(const TrivialCt& ct, const TrivialToken& tk) {
  if (tk.j >= ct.size())
    throw UsageError("token index " + std::to_string(tk.j) + " out of range for ciphertext");
  auto plain = pke_decrypt(tk.sk, ct.slots[tk.j]);
  if (!plain || plain->empty() || (*plain)[0] != kPayload) return MatchResult::no_match();
  return MatchResult::matched(Bytes(plain->begin() + 1, plain->end()));
}

}  // namespace hve::pe
