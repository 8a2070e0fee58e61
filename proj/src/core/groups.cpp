#include "hve/core/groups.hpp"

#include <atomic>
#include <cstring>
#include <mutex>

#include <sodium.h>

#include "hve/core/error.hpp"

namespace hve {

GT final_exponentiation(const blst_fp12& f);

namespace {

std::atomic<std::uint64_t> g_pairings{0};

blst_fr fr_from_be32(const std::uint8_t* be) {
  // Any 256-bit value; the Montgomery conversion reduces mod p.
  std::uint64_t limbs[4];
  for (int i = 0; i < 4; ++i) {
    std::uint64_t w = 0;
    for (int j = 0; j < 8; ++j) w = (w << 8) | be[(3 - i) * 8 + j];
    limbs[i] = w;
  }
  blst_fr out;
  blst_fr_from_uint64(&out, limbs);
  return out;
}

// 2^256 mod p
const Scalar& two_pow_256() {
  static const Scalar v = [] {
    Scalar acc = Scalar::one();
    const Scalar base = Scalar::from_u64(std::uint64_t{1} << 32);
    for (int i = 0; i < 8; ++i) acc *= base;
    return acc;
  }();
  return v;
}

GT raw_pair(const G1& x, const G2& y) {
  if (x.is_identity() || y.is_identity()) return GT::one();
  blst_p1_affine xa;
  blst_p2_affine ya;
  blst_p1_to_affine(&xa, &x.raw());
  blst_p2_to_affine(&ya, &y.raw());
  blst_fp12 ml;
  blst_miller_loop(&ml, &ya, &xa);
  return final_exponentiation(ml);
}

constexpr char kHexDigits[] = "0123456789abcdef";

}  // namespace

// ---- Scalar ---------------------------------------------------------------

Scalar::Scalar() { std::memset(&v_, 0, sizeof v_); }

Scalar Scalar::one() { return from_u64(1); }

Scalar Scalar::from_u64(std::uint64_t v) {
  const std::uint64_t limbs[4] = {v, 0, 0, 0};
  Scalar s;
  blst_fr_from_uint64(&s.v_, limbs);
  return s;
}

Scalar Scalar::from_i64(std::int64_t v) {
  if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
  return -from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1);
}

Scalar Scalar::from_bytes_reduced(std::span<const std::uint8_t> bytes) {
  Scalar acc;
  std::size_t head = bytes.size() % 32;
  if (head != 0) {
    std::uint8_t chunk[32] = {};
    std::memcpy(chunk + (32 - head), bytes.data(), head);
    acc.v_ = fr_from_be32(chunk);
  }
  for (std::size_t off = head; off < bytes.size(); off += 32) {
    Scalar digit;
    digit.v_ = fr_from_be32(bytes.data() + off);
    acc = acc * two_pow_256() + digit;
  }
  return acc;
}

Scalar Scalar::from_canonical(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kBytes) throw DecodeError("scalar: expected 32 bytes");
  blst_scalar s;
  blst_scalar_from_bendian(&s, bytes.data());
  if (!blst_scalar_fr_check(&s)) throw DecodeError("scalar: value not below group order");
  Scalar out;
  blst_fr_from_scalar(&out.v_, &s);
  return out;
}

Scalar Scalar::random(RandomSource& rng) {
  // 512 bits reduced mod p: statistical distance from uniform < 2^-256.
  std::array<std::uint8_t, 64> buf;
  rng.fill(buf);
  Scalar s = from_bytes_reduced(buf);
  sodium_memzero(buf.data(), buf.size());
  return s;
}

Scalar Scalar::random_nonzero(RandomSource& rng) {
  for (;;) {
    Scalar s = random(rng);
    if (!s.is_zero()) return s;
  }
}

std::array<std::uint8_t, Scalar::kBytes> Scalar::to_bytes() const {
  blst_scalar s;
  blst_scalar_from_fr(&s, &v_);
  std::array<std::uint8_t, kBytes> out;
  blst_bendian_from_scalar(out.data(), &s);
  return out;
}

std::string Scalar::to_hex() const {
  std::string out;
  for (std::uint8_t b : to_bytes()) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0xf]);
  }
  return out;
}

bool Scalar::is_zero() const { return *this == Scalar(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw UsageError("scalar: inverse of zero");
  Scalar out;
  blst_fr_inverse(&out.v_, &v_);
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar out;
  blst_fr_add(&out.v_, &v_, &o.v_);
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar out;
  blst_fr_sub(&out.v_, &v_, &o.v_);
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar out;
  blst_fr_mul(&out.v_, &v_, &o.v_);
  return out;
}

Scalar Scalar::operator-() const { return Scalar() - *this; }

bool operator==(const Scalar& a, const Scalar& b) {
  return std::memcmp(&a.v_, &b.v_, sizeof a.v_) == 0;
}

blst_scalar Scalar::to_blst() const {
  blst_scalar s;
  blst_scalar_from_fr(&s, &v_);
  return s;
}

Scalar hash_to_scalar(std::span<const std::uint8_t> bytes, std::string_view domain_tag) {
  crypto_generichash_blake2b_state st;
  crypto_generichash_blake2b_init(&st, nullptr, 0, 64);
  std::uint8_t tag_len[8];
  std::uint64_t n = domain_tag.size();
  for (int i = 7; i >= 0; --i, n >>= 8) tag_len[i] = static_cast<std::uint8_t>(n & 0xff);
  crypto_generichash_blake2b_update(&st, tag_len, sizeof tag_len);
  crypto_generichash_blake2b_update(
      &st, reinterpret_cast<const unsigned char*>(domain_tag.data()), domain_tag.size());
  crypto_generichash_blake2b_update(&st, bytes.data(), bytes.size());
  std::array<std::uint8_t, 64> digest;
  crypto_generichash_blake2b_final(&st, digest.data(), digest.size());
  return Scalar::from_bytes_reduced(digest);
}

Scalar hash_to_scalar(std::string_view text, std::string_view domain_tag) {
  return hash_to_scalar(
      std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()), domain_tag);
}

std::array<std::uint8_t, Scalar::kBytes> group_order_bytes() {
  // r = 0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001
  static constexpr std::array<std::uint8_t, 32> r = {
      0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8,
      0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe,
      0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x01};
  return r;
}

// ---- G1 -------------------------------------------------------------------

G1::G1() { std::memset(&p_, 0, sizeof p_); }

G1 G1::generator() {
  G1 g;
  g.p_ = *blst_p1_generator();
  return g;
}

G1 G1::deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kBytes) throw DecodeError("G1: expected 48 bytes");
  blst_p1_affine a;
  if (blst_p1_uncompress(&a, bytes.data()) != BLST_SUCCESS)
    throw DecodeError("G1: not a point on the curve");
  if (!blst_p1_affine_in_g1(&a)) throw DecodeError("G1: point outside the prime-order subgroup");
  G1 out;
  blst_p1_from_affine(&out.p_, &a);
  if (blst_p1_affine_is_inf(&a)) out = G1();
  auto again = out.serialize();
  if (!std::equal(again.begin(), again.end(), bytes.begin()))
    throw DecodeError("G1: non-canonical encoding");
  return out;
}

std::array<std::uint8_t, G1::kBytes> G1::serialize() const {
  std::array<std::uint8_t, kBytes> out;
  blst_p1_compress(out.data(), &p_);
  return out;
}

bool G1::is_identity() const { return blst_p1_is_inf(&p_); }

G1 G1::operator*(const G1& o) const {
  G1 out;
  blst_p1_add_or_double(&out.p_, &p_, &o.p_);
  return out;
}

G1 G1::pow(const Scalar& s) const {
  const blst_scalar k = s.to_blst();
  G1 out;
  blst_p1_mult(&out.p_, &p_, k.b, 255);
  return out;
}

G1 G1::inverse() const {
  G1 out = *this;
  blst_p1_cneg(&out.p_, true);
  return out;
}

bool operator==(const G1& a, const G1& b) { return blst_p1_is_equal(&a.p_, &b.p_); }

// ---- G2 -------------------------------------------------------------------

G2::G2() { std::memset(&p_, 0, sizeof p_); }

G2 G2::generator() {
  G2 g;
  g.p_ = *blst_p2_generator();
  return g;
}

G2 G2::deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kBytes) throw DecodeError("G2: expected 96 bytes");
  blst_p2_affine a;
  if (blst_p2_uncompress(&a, bytes.data()) != BLST_SUCCESS)
    throw DecodeError("G2: not a point on the curve");
  if (!blst_p2_affine_in_g2(&a)) throw DecodeError("G2: point outside the prime-order subgroup");
  G2 out;
  blst_p2_from_affine(&out.p_, &a);
  if (blst_p2_affine_is_inf(&a)) out = G2();
  auto again = out.serialize();
  if (!std::equal(again.begin(), again.end(), bytes.begin()))
    throw DecodeError("G2: non-canonical encoding");
  return out;
}

std::array<std::uint8_t, G2::kBytes> G2::serialize() const {
  std::array<std::uint8_t, kBytes> out;
  blst_p2_compress(out.data(), &p_);
  return out;
}

bool G2::is_identity() const { return blst_p2_is_inf(&p_); }

G2 G2::operator*(const G2& o) const {
  G2 out;
  blst_p2_add_or_double(&out.p_, &p_, &o.p_);
  return out;
}

G2 G2::pow(const Scalar& s) const {
  const blst_scalar k = s.to_blst();
  G2 out;
  blst_p2_mult(&out.p_, &p_, k.b, 255);
  return out;
}

G2 G2::inverse() const {
  G2 out = *this;
  blst_p2_cneg(&out.p_, true);
  return out;
}

bool operator==(const G2& a, const G2& b) { return blst_p2_is_equal(&a.p_, &b.p_); }

// ---- GT -------------------------------------------------------------------

GT final_exponentiation(const blst_fp12& f) {
  GT out;
  blst_final_exp(&out.f_, &f);
  return out;
}

GT::GT() { f_ = *blst_fp12_one(); }

const GT& GT::generator() {
  static const GT gt = raw_pair(G1::generator(), G2::generator());
  return gt;
}

GT GT::random(RandomSource& rng) { return generator().pow(Scalar::random(rng)); }

GT GT::deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kBytes) throw DecodeError("GT: expected 576 bytes");
  // Inverse of blst_bendian_from_fp12's coefficient order.
  GT out;
  const std::uint8_t* p = bytes.data();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      blst_fp_from_bendian(&out.f_.fp6[j].fp2[i].fp[0], p);
      p += 48;
      blst_fp_from_bendian(&out.f_.fp6[j].fp2[i].fp[1], p);
      p += 48;
    }
  }
  Bytes again = out.serialize();
  if (!std::equal(again.begin(), again.end(), bytes.begin()))
    throw DecodeError("GT: non-canonical encoding");
  if (!blst_fp12_in_group(&out.f_)) throw DecodeError("GT: element outside the target group");
  return out;
}

Bytes GT::serialize() const {
  Bytes out(kBytes);
  blst_bendian_from_fp12(out.data(), &f_);
  return out;
}

bool GT::is_one() const { return blst_fp12_is_one(&f_); }

GT GT::operator*(const GT& o) const {
  GT out;
  blst_fp12_mul(&out.f_, &f_, &o.f_);
  return out;
}

GT GT::pow(const Scalar& s) const {
  // Fixed 4-bit window over the big-endian exponent. Elements of GT lie in
  // the cyclotomic subgroup, so cyclotomic squaring applies.
  std::array<blst_fp12, 16> table;
  table[0] = *blst_fp12_one();
  table[1] = f_;
  for (int i = 2; i < 16; ++i) blst_fp12_mul(&table[i], &table[i - 1], &f_);

  const auto e = s.to_bytes();
  blst_fp12 acc = *blst_fp12_one();
  bool started = false;
  for (std::uint8_t byte : e) {
    for (int nib : {byte >> 4, byte & 0xf}) {
      if (started) {
        for (int k = 0; k < 4; ++k) blst_fp12_cyclotomic_sqr(&acc, &acc);
      }
      if (nib != 0) {
        blst_fp12_mul(&acc, &acc, &table[nib]);
        started = true;
      }
    }
  }
  GT out;
  out.f_ = acc;
  return out;
}

GT GT::inverse() const {
  GT out = *this;
  blst_fp12_conjugate(&out.f_);
  return out;
}

bool operator==(const GT& a, const GT& b) { return blst_fp12_is_equal(&a.f_, &b.f_); }

// ---- pairing --------------------------------------------------------------

GT pair(const G1& x, const G2& y) {
  g_pairings.fetch_add(1, std::memory_order_relaxed);
  return raw_pair(x, y);
}

GT pair_product(std::span<const G1> xs, std::span<const G2> ys) {
  if (xs.size() != ys.size()) throw UsageError("pair_product: argument count mismatch");
  g_pairings.fetch_add(xs.size(), std::memory_order_relaxed);

  std::vector<const blst_p1*> ps;
  std::vector<const blst_p2*> qs;
  ps.reserve(xs.size());
  qs.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // e(1, y) = e(x, 1) = 1
    if (xs[i].is_identity() || ys[i].is_identity()) continue;
    ps.push_back(&xs[i].raw());
    qs.push_back(&ys[i].raw());
  }
  if (ps.empty()) return GT::one();

  std::vector<blst_p1_affine> pa(ps.size());
  std::vector<blst_p2_affine> qa(qs.size());
  blst_p1s_to_affine(pa.data(), ps.data(), ps.size());
  blst_p2s_to_affine(qa.data(), qs.data(), qs.size());

  std::vector<const blst_p1_affine*> pptr(pa.size());
  std::vector<const blst_p2_affine*> qptr(qa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) {
    pptr[i] = &pa[i];
    qptr[i] = &qa[i];
  }
  blst_fp12 ml;
  blst_miller_loop_n(&ml, qptr.data(), pptr.data(), pa.size());
  return final_exponentiation(ml);
}

std::uint64_t pairing_count() { return g_pairings.load(std::memory_order_relaxed); }

void reset_pairing_count() { g_pairings.store(0, std::memory_order_relaxed); }

// ---- suites ---------------------------------------------------------------

const GroupSuite& GroupSuite::bls12_381_asymmetric() {
  static const GroupSuite s{0x01, "bls12-381", SuiteMode::asymmetric, false};
  return s;
}

const GroupSuite& GroupSuite::bls12_381_symmetric() {
  static const GroupSuite s{0x02, "bls12-381-sym", SuiteMode::symmetric, true};
  return s;
}

const GroupSuite& GroupSuite::by_id(std::uint8_t id) {
  if (id == bls12_381_asymmetric().id) return bls12_381_asymmetric();
  if (id == bls12_381_symmetric().id) return bls12_381_symmetric();
  throw DecodeError("unknown group suite id " + std::to_string(id));
}

const GroupSuite& GroupSuite::by_name(std::string_view name) {
  if (name == bls12_381_asymmetric().name) return bls12_381_asymmetric();
  if (name == bls12_381_symmetric().name) return bls12_381_symmetric();
  throw UsageError("unknown group suite '" + std::string(name) + "'");
}

// ---- emulated symmetric elements ------------------------------------------

SymElement SymElement::from_exponent(const Scalar& x) {
  return {G1::generator().pow(x), G2::generator().pow(x)};
}

bool SymElement::consistent() const {
  return pair(g1, G2::generator()) == pair(G1::generator(), g2);
}

GT pair(const SymElement& x, const SymElement& y) { return pair(x.g1, y.g2); }

}  // namespace hve
