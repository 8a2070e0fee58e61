#include "hve/schemes/conv3.hpp"

namespace hve::conv3 {

Bytes PublicKey::serialize_as(std::string_view kind) const {
  codec::Writer wr(kind, suite_id);
  wr.u32(static_cast<std::uint32_t>(length()));
  write(wr, basis.b11);
  write(wr, basis.b12);
  write(wr, basis.b2);
  write(wr, basis.b3);
  write(wr, b3_hat);
  write(wr, v);
  write(wr, w1);
  write(wr, w2);
  for (std::size_t i = 0; i < length(); ++i) {
    write(wr, u[i]);
    write(wr, h[i]);
  }
  wr.gt(omega);
  return std::move(wr).finish();
}

PublicKey PublicKey::deserialize_as(std::span<const std::uint8_t> bytes, std::string_view kind) {
  codec::Reader r(bytes, kind);
  PublicKey pk;
  pk.suite_id = r.suite_id();
  const std::size_t l = r.count(detail::kMaxLength);
  if (l == 0) throw DecodeError("public key with zero length");
  pk.basis.b11 = read_side1(r, 3);
  pk.basis.b12 = read_side1(r, 3);
  pk.basis.b2 = read_side1(r, 3);
  pk.basis.b3 = read_side1(r, 3);
  pk.b3_hat = read_side2(r, 3);
  pk.v = read_side1(r, 3);
  pk.w1 = read_side1(r, 3);
  pk.w2 = read_side1(r, 3);
  for (std::size_t i = 0; i < l; ++i) {
    pk.u.push_back(read_side1(r, 3));
    pk.h.push_back(read_side1(r, 3));
  }
  pk.omega = r.gt();
  r.expect_end();
  return pk;
}

Bytes SecretKey::serialize_as(std::string_view kind) const {
  codec::Writer wr(kind, suite_id);
  wr.u32(static_cast<std::uint32_t>(length()));
  write(wr, v2);
  write(wr, w21);
  write(wr, w22);
  for (std::size_t i = 0; i < length(); ++i) {
    write(wr, u2[i]);
    write(wr, h2[i]);
  }
  write(wr, b12_alpha);
  write(wr, b3_hat);
  return std::move(wr).finish();
}

SecretKey SecretKey::deserialize_as(std::span<const std::uint8_t> bytes, std::string_view kind) {
  codec::Reader r(bytes, kind);
  SecretKey sk;
  sk.suite_id = r.suite_id();
  const std::size_t l = r.count(detail::kMaxLength);
  if (l == 0) throw DecodeError("secret key with zero length");
  sk.v2 = read_side2(r, 3);
  sk.w21 = read_side2(r, 3);
  sk.w22 = read_side2(r, 3);
  for (std::size_t i = 0; i < l; ++i) {
    sk.u2.push_back(read_side2(r, 3));
    sk.h2.push_back(read_side2(r, 3));
  }
  sk.b12_alpha = read_side2(r, 3);
  sk.b3_hat = read_side2(r, 3);
  r.expect_end();
  return sk;
}

Bytes Ciphertext::serialize_as(std::string_view kind) const {
  codec::Writer wr(kind, suite_id);
  wr.u32(static_cast<std::uint32_t>(length()));
  wr.gt(c0);
  write(wr, c1);
  write(wr, c2);
  write(wr, c3);
  for (const Side1& c : c4) write(wr, c);
  detail::write_sealed(wr, sealed);
  return std::move(wr).finish();
}

Ciphertext Ciphertext::deserialize_as(std::span<const std::uint8_t> bytes, std::string_view kind) {
  codec::Reader r(bytes, kind);
  Ciphertext ct;
  ct.suite_id = r.suite_id();
  const std::size_t l = r.count(detail::kMaxLength);
  ct.c0 = r.gt();
  ct.c1 = read_side1(r, 3);
  ct.c2 = read_side1(r, 3);
  ct.c3 = read_side1(r, 3);
  for (std::size_t i = 0; i < l; ++i) ct.c4.push_back(read_side1(r, 3));
  ct.sealed = detail::read_sealed(r);
  r.expect_end();
  return ct;
}

Trapdoor sample_trapdoor(RandomSource& rng, std::size_t l) {
  if (l == 0) throw UsageError("setup: length must be at least 1");
  Trapdoor td;
  td.basis = gen_basis3(rng).trapdoor;
  td.v = Scalar::random(rng);
  td.w1 = Scalar::random(rng);
  td.w2 = Scalar::random(rng);
  td.alpha = Scalar::random(rng);
  td.u = detail::random_scalars(rng, l);
  td.h = detail::random_scalars(rng, l);
  td.z_v = Scalar::random(rng);
  td.z_w1 = Scalar::random(rng);
  td.z_w2 = Scalar::random(rng);
  td.z_u = detail::random_scalars(rng, l);
  td.z_h = detail::random_scalars(rng, l);
  return td;
}

std::pair<PublicKey, SecretKey> keys_from_trapdoor(const Trapdoor& td, const GroupSuite& suite) {
  const std::size_t l = td.u.size();
  if (l == 0 || td.h.size() != l || td.z_u.size() != l || td.z_h.size() != l)
    throw UsageError("trapdoor: inconsistent lengths");

  const Basis3 basis = basis3_from_trapdoor(td.basis);
  const auto& b1 = basis.side1;
  const auto& b2 = basis.side2;
  auto blinded = [&](const Scalar& e, const Scalar& z) { return b1.b11.pow(e) * b1.b2.pow(z); };

  PublicKey pk;
  SecretKey sk;
  pk.suite_id = sk.suite_id = suite.id;
  pk.basis = b1;
  pk.b3_hat = b2.b3;
  pk.v = blinded(td.v, td.z_v);
  pk.w1 = blinded(td.w1, td.z_w1);
  pk.w2 = blinded(td.w2, td.z_w2);
  for (std::size_t i = 0; i < l; ++i) {
    pk.u.push_back(blinded(td.u[i], td.z_u[i]));
    pk.h.push_back(blinded(td.h[i], td.z_h[i]));
  }
  pk.omega = vec_pair(b1.b11.pow(td.v), b2.b12).pow(td.alpha);

  sk.v2 = b2.b12.pow(td.v);
  sk.w21 = b2.b12.pow(td.w1);
  sk.w22 = b2.b12.pow(td.w2);
  for (std::size_t i = 0; i < l; ++i) {
    sk.u2.push_back(b2.b12.pow(td.u[i]));
    sk.h2.push_back(b2.b12.pow(td.h[i]));
  }
  sk.b12_alpha = b2.b12.pow(td.alpha);
  sk.b3_hat = b2.b3;
  return {std::move(pk), std::move(sk)};
}

EncryptRandomness sample_encrypt_randomness(RandomSource& rng, std::size_t l) {
  EncryptRandomness rnd;
  rnd.t = Scalar::random(rng);
  rnd.z1 = Scalar::random(rng);
  rnd.z2 = Scalar::random(rng);
  rnd.z3 = Scalar::random(rng);
  rnd.z4 = detail::random_scalars(rng, l);
  return rnd;
}

Ciphertext encrypt_raw_with(const AttributeVector& x, const GT& m, const PublicKey& pk,
                            const EncryptRandomness& rnd) {
  const std::size_t l = pk.length();
  detail::check_attributes(x, l);
  if (rnd.z4.size() != l) throw UsageError("encryption randomness does not match the key length");
  const Side1& b2 = pk.basis.b2;

  Ciphertext ct;
  ct.suite_id = pk.suite_id;
  ct.c0 = pk.omega.pow(rnd.t) * m;
  ct.c1 = pk.v.pow(rnd.t) * b2.pow(rnd.z1);
  ct.c2 = pk.w1.pow(rnd.t) * b2.pow(rnd.z2);
  ct.c3 = pk.w2.pow(rnd.t) * b2.pow(rnd.z3);
  for (std::size_t i = 0; i < l; ++i)
    ct.c4.push_back((pk.u[i].pow(x[i]) * pk.h[i]).pow(rnd.t) * b2.pow(rnd.z4[i]));
  return ct;
}

void check_compatible(const Ciphertext& ct, const PublicKey& pk) {
  if (ct.suite_id != pk.suite_id) throw UsageError("records belong to different group suites");
  if (ct.length() != pk.length())
    throw UsageError("ciphertext length does not match the public key");
}

}  // namespace hve::conv3
