#pragma once

// Uniform four-algorithm interface shared by all HVE schemes:
//
//   setup(rng, l)                  -> KeyPair {pk, sk}
//   gen_token(rng, sigma, sk, pk)  -> Token
//   encrypt(rng, x, payload, pk)   -> Ciphertext
//   query(ct, tk, pk)              -> MatchResult
//
// Each scheme supplies the algebraic core in "raw" form, encrypting and
// recovering a bare GT element; SchemeOps adds payload sealing on top.

#include <concepts>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hve/api/pattern.hpp"
#include "hve/api/sealed.hpp"
#include "hve/core/codec.hpp"
#include "hve/core/error.hpp"
#include "hve/core/groups.hpp"

namespace hve {

template <class Derived>
struct SchemeOps {
  template <class PublicKey>
  static auto encrypt(RandomSource& rng, const AttributeVector& x,
                      std::span<const std::uint8_t> payload, const PublicKey& pk) {
    Sealing sealing = seal(rng, payload);
    auto ct = Derived::encrypt_raw(rng, x, sealing.mask, pk);
    ct.sealed = std::move(sealing.sealed);
    return ct;
  }

  template <class Ciphertext, class Token, class PublicKey>
  static MatchResult query(const Ciphertext& ct, const Token& tk, const PublicKey& pk) {
    if (!ct.sealed) throw UsageError("ciphertext carries no sealed payload");
    return open(Derived::query_raw(ct, tk, pk), *ct.sealed);
  }
};

template <class S>
concept HveScheme = requires(RandomSource& rng, std::size_t l, const PatternVector& sigma,
                             const AttributeVector& x, std::span<const std::uint8_t> payload,
                             const GT& m, const typename S::PublicKey& pk,
                             const typename S::SecretKey& sk, const typename S::Token& tk,
                             const typename S::Ciphertext& ct, std::span<const std::uint8_t> bytes) {
  { S::kSchemeId } -> std::convertible_to<std::string_view>;
  { S::setup(rng, l) } -> std::same_as<typename S::KeyPair>;
  { S::gen_token(rng, sigma, sk, pk) } -> std::same_as<typename S::Token>;
  { S::encrypt(rng, x, payload, pk) } -> std::same_as<typename S::Ciphertext>;
  { S::encrypt_raw(rng, x, m, pk) } -> std::same_as<typename S::Ciphertext>;
  { S::query(ct, tk, pk) } -> std::same_as<MatchResult>;
  { S::query_raw(ct, tk, pk) } -> std::same_as<GT>;
  { pk.length() } -> std::convertible_to<std::size_t>;
  { tk.group_element_count() } -> std::convertible_to<std::size_t>;
  { ct.group_element_count() } -> std::convertible_to<std::size_t>;
  { ct.gt_element_count() } -> std::convertible_to<std::size_t>;
  { pk.serialize() } -> std::same_as<Bytes>;
  { sk.serialize() } -> std::same_as<Bytes>;
  { tk.serialize() } -> std::same_as<Bytes>;
  { ct.serialize() } -> std::same_as<Bytes>;
  { S::PublicKey::deserialize(bytes) } -> std::same_as<typename S::PublicKey>;
  { S::SecretKey::deserialize(bytes) } -> std::same_as<typename S::SecretKey>;
  { S::Token::deserialize(bytes) } -> std::same_as<typename S::Token>;
  { S::Ciphertext::deserialize(bytes) } -> std::same_as<typename S::Ciphertext>;
};

namespace detail {

/// Common input checks for gen_token / encrypt.
void check_pattern(const PatternVector& sigma, std::size_t l, bool allow_delegatable);
void check_attributes(const AttributeVector& x, std::size_t l);

std::vector<Scalar> random_scalars(RandomSource& rng, std::size_t n);

void write_indices(codec::Writer& w, std::span<const std::size_t> idx);
/// Strictly ascending, each < l.
std::vector<std::size_t> read_indices(codec::Reader& r, std::size_t l);

void write_sealed(codec::Writer& w, const std::optional<SealedPayload>& sealed);
std::optional<SealedPayload> read_sealed(codec::Reader& r);

/// Records carry their length as u32; bounded to keep decoders sane.
inline constexpr std::size_t kMaxLength = 1u << 16;

}  // namespace detail

}  // namespace hve
