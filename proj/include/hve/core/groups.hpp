#pragma once

// Prime-order pairing groups over BLS12-381.
//
// All three groups are written multiplicatively to match the algebra of the
// schemes: `a * b` is the group operation, `a.pow(s)` exponentiation and
// `a.inverse()` the inverse. G1 and G2 are the two source groups, GT the
// target group; `pair(G1, G2)` is the optimal ate pairing.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <blst.h>

#include "hve/core/random.hpp"

namespace hve {

using Bytes = std::vector<std::uint8_t>;

/// Element of Z_p, p the prime group order.
class Scalar {
 public:
  static constexpr std::size_t kBytes = 32;

  Scalar();  // zero

  static Scalar zero() { return Scalar(); }
  static Scalar one();
  static Scalar from_u64(std::uint64_t v);
  static Scalar from_i64(std::int64_t v);
  /// Interprets `bytes` as a big-endian integer of any length, reduced mod p.
  static Scalar from_bytes_reduced(std::span<const std::uint8_t> bytes);
  /// Strict decode: 32 big-endian bytes encoding a value < p.
  static Scalar from_canonical(std::span<const std::uint8_t> bytes);
  /// Uniform in [0, p).
  static Scalar random(RandomSource& rng);
  static Scalar random_nonzero(RandomSource& rng);

  std::array<std::uint8_t, kBytes> to_bytes() const;  // big-endian
  std::string to_hex() const;

  bool is_zero() const;
  Scalar inverse() const;  // precondition: nonzero

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Little-endian canonical form consumed by the curve multiplication.
  blst_scalar to_blst() const;

 private:
  blst_fr v_;
};

/// Deterministic hash into Z_p with domain separation.
Scalar hash_to_scalar(std::span<const std::uint8_t> bytes, std::string_view domain_tag);
Scalar hash_to_scalar(std::string_view text, std::string_view domain_tag);

/// Order p of all three groups, big-endian.
std::array<std::uint8_t, Scalar::kBytes> group_order_bytes();

class G1 {
 public:
  static constexpr std::size_t kBytes = 48;  // compressed

  G1();  // identity
  static G1 identity() { return G1(); }
  static G1 generator();
  static G1 deserialize(std::span<const std::uint8_t> bytes);

  std::array<std::uint8_t, kBytes> serialize() const;
  bool is_identity() const;

  G1 operator*(const G1& o) const;
  G1& operator*=(const G1& o) { return *this = *this * o; }
  G1 pow(const Scalar& s) const;
  G1 inverse() const;

  friend bool operator==(const G1& a, const G1& b);

  const blst_p1& raw() const { return p_; }

 private:
  blst_p1 p_;
};

class G2 {
 public:
  static constexpr std::size_t kBytes = 96;  // compressed

  G2();  // identity
  static G2 identity() { return G2(); }
  static G2 generator();
  static G2 deserialize(std::span<const std::uint8_t> bytes);

  std::array<std::uint8_t, kBytes> serialize() const;
  bool is_identity() const;

  G2 operator*(const G2& o) const;
  G2& operator*=(const G2& o) { return *this = *this * o; }
  G2 pow(const Scalar& s) const;
  G2 inverse() const;

  friend bool operator==(const G2& a, const G2& b);

  const blst_p2& raw() const { return p_; }

 private:
  blst_p2 p_;
};

class GT {
 public:
  static constexpr std::size_t kBytes = 576;

  GT();  // one
  static GT one() { return GT(); }
  /// e(g, g_hat) for the standard generators.
  static const GT& generator();
  static GT random(RandomSource& rng);
  static GT deserialize(std::span<const std::uint8_t> bytes);

  Bytes serialize() const;
  bool is_one() const;

  GT operator*(const GT& o) const;
  GT& operator*=(const GT& o) { return *this = *this * o; }
  GT pow(const Scalar& s) const;
  GT inverse() const;

  friend bool operator==(const GT& a, const GT& b);

 private:
  friend GT final_exponentiation(const blst_fp12& f);
  blst_fp12 f_;
};

/// Bilinear map e: G1 x G2 -> GT.
GT pair(const G1& x, const G2& y);

/// Product of e(xs[i], ys[i]); one shared final exponentiation. Every index
/// counts as one base pairing, including identity arguments.
GT pair_product(std::span<const G1> xs, std::span<const G2> ys);

/// Base pairings executed by this process since the last reset.
std::uint64_t pairing_count();
void reset_pairing_count();

/// Counts base pairings executed within a scope.
class PairingCounter {
 public:
  PairingCounter() : start_(pairing_count()) {}
  std::uint64_t count() const { return pairing_count() - start_; }

 private:
  std::uint64_t start_;
};

/// Whether logical symmetric-group elements are carried natively or as
/// (G1, G2) pairs sharing one exponent.
enum class SuiteMode : std::uint8_t { symmetric = 1, asymmetric = 2 };

/// Description of the pairing group suite in use. Immutable.
struct GroupSuite {
  std::uint8_t id;
  std::string name;
  SuiteMode mode;
  bool symmetric_emulated;  // symmetric mode realized with (G1, G2) pairs

  std::array<std::uint8_t, Scalar::kBytes> order() const { return group_order_bytes(); }
  G1 g() const { return G1::generator(); }
  G2 g_hat() const { return G2::generator(); }
  const GT& gt_generator() const { return GT::generator(); }

  static const GroupSuite& bls12_381_asymmetric();
  static const GroupSuite& bls12_381_symmetric();
  static const GroupSuite& by_id(std::uint8_t id);
  static const GroupSuite& by_name(std::string_view name);
  static const GroupSuite& default_suite() { return bls12_381_asymmetric(); }
};

/// Logical element of a symmetric group emulated over a Type-3 curve:
/// (g^x, g_hat^x). Pairing two of them pairs the first half of the left with
/// the second half of the right.
struct SymElement {
  G1 g1;
  G2 g2;

  static SymElement generator() { return {G1::generator(), G2::generator()}; }
  static SymElement from_exponent(const Scalar& x);

  SymElement operator*(const SymElement& o) const { return {g1 * o.g1, g2 * o.g2}; }
  SymElement pow(const Scalar& s) const { return {g1.pow(s), g2.pow(s)}; }

  /// The two halves carry the same exponent.
  bool consistent() const;

  friend bool operator==(const SymElement& a, const SymElement& b) = default;
};

GT pair(const SymElement& x, const SymElement& y);

}  // namespace hve
