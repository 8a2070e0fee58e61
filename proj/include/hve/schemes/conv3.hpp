#pragma once

// Key and ciphertext material shared by the two schemes built on the
// 3-dimensional basis (LL3 and DHVE3). Ciphertexts are B2-blinded on side
// 1; tokens live in span{B12} on side 2 and are B3-blinded.

#include <optional>
#include <string_view>
#include <vector>

#include "hve/api/scheme.hpp"
#include "hve/product/product_group.hpp"

namespace hve::conv3 {

struct PublicKey {
  std::uint8_t suite_id = 1;
  Basis3Elements<G1> basis;
  Side2 b3_hat;  // side-2 copy of B3, for token re-randomization
  Side1 v, w1, w2;
  std::vector<Side1> u, h;
  GT omega;

  std::size_t length() const { return u.size(); }
  /// 6l + 21 side-1 group elements (Omega and b3_hat excluded).
  std::size_t group_element_count() const { return 3 * (4 + 3 + u.size() + h.size()); }
  Bytes serialize_as(std::string_view kind) const;
  static PublicKey deserialize_as(std::span<const std::uint8_t> bytes, std::string_view kind);
  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct SecretKey {
  std::uint8_t suite_id = 1;
  Side2 v2, w21, w22;
  std::vector<Side2> u2, h2;
  Side2 b12_alpha;
  Side2 b3_hat;

  std::size_t length() const { return u2.size(); }
  Bytes serialize_as(std::string_view kind) const;
  static SecretKey deserialize_as(std::span<const std::uint8_t> bytes, std::string_view kind);
  friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

struct Ciphertext {
  std::uint8_t suite_id = 1;
  GT c0;
  Side1 c1, c2, c3;
  std::vector<Side1> c4;
  std::optional<SealedPayload> sealed;

  std::size_t length() const { return c4.size(); }
  /// 3l + 9
  std::size_t group_element_count() const { return 3 * (3 + c4.size()); }
  std::size_t gt_element_count() const { return 1; }
  Bytes serialize_as(std::string_view kind) const;
  static Ciphertext deserialize_as(std::span<const std::uint8_t> bytes, std::string_view kind);
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct Trapdoor {
  Basis3Trapdoor basis;
  Scalar v, w1, w2, alpha;
  std::vector<Scalar> u, h;
  Scalar z_v, z_w1, z_w2;
  std::vector<Scalar> z_u, z_h;
};

struct EncryptRandomness {
  Scalar t, z1, z2, z3;
  std::vector<Scalar> z4;
};

Trapdoor sample_trapdoor(RandomSource& rng, std::size_t l);
std::pair<PublicKey, SecretKey> keys_from_trapdoor(const Trapdoor& td, const GroupSuite& suite);

EncryptRandomness sample_encrypt_randomness(RandomSource& rng, std::size_t l);
Ciphertext encrypt_raw_with(const AttributeVector& x, const GT& m, const PublicKey& pk,
                            const EncryptRandomness& rnd);

/// Suite and length agreement between records.
void check_compatible(const Ciphertext& ct, const PublicKey& pk);

}  // namespace hve::conv3
