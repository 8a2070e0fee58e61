#include "hve/product/assumptions.hpp"

#include "hve/core/codec.hpp"
#include "hve/core/error.hpp"

namespace hve {
namespace {

// e(x1, y2) == e(y1, x2), written as one two-term product.
bool same_pairing(const G1& x1, const G2& y2, const G1& y1, const G2& x2) {
  const G1 lhs[] = {x1, y1.inverse()};
  const G2 rhs[] = {y2, x2};
  return pair_product(lhs, rhs).is_one();
}

void write(codec::Writer& w, const SymElement& e) { w.g1(e.g1).g2(e.g2); }

SymElement read_sym(codec::Reader& r) {
  SymElement e;
  e.g1 = r.g1();
  e.g2 = r.g2();
  return e;
}

const GroupSuite& sym_suite() { return GroupSuite::bls12_381_symmetric(); }

}  // namespace

BdhSample sample_bdh(RandomSource& rng, unsigned bit) {
  if (bit > 1) throw UsageError("sample_bdh: bit must be 0 or 1");
  BdhSample s;
  auto& w = s.witness;
  w.a = Scalar::random(rng);
  w.b = Scalar::random(rng);
  w.c = Scalar::random(rng);
  w.d = Scalar::random(rng);
  w.bit = bit;
  s.tuple.g = SymElement::generator();
  s.tuple.ga = SymElement::from_exponent(w.a);
  s.tuple.gb = SymElement::from_exponent(w.b);
  s.tuple.gc = SymElement::from_exponent(w.c);
  s.tuple.t = GT::generator().pow(bit == 0 ? w.a * w.b * w.c : w.d);
  return s;
}

bool verify_bdh_wellformed(const BdhTuple& t) {
  const G1& g1 = t.g.g1;
  const G2& g2 = t.g.g2;
  if (g1.is_identity() || g2.is_identity()) return false;
  for (const SymElement* e : {&t.ga, &t.gb, &t.gc})
    if (!same_pairing(e->g1, g2, g1, e->g2)) return false;
  return true;
}

std::array<SymElement*, 12> P3dhTuple::components() {
  return {&g, &f, &ga, &fa, &gb, &fb, &gab_fz1, &gz1, &gabc_fz2, &gz2, &t_first, &t_second};
}

std::array<const SymElement*, 12> P3dhTuple::components() const {
  return {&g, &f, &ga, &fa, &gb, &fb, &gab_fz1, &gz1, &gabc_fz2, &gz2, &t_first, &t_second};
}

P3dhSample sample_p3dh(RandomSource& rng, unsigned bit) {
  if (bit > 1) throw UsageError("sample_p3dh: bit must be 0 or 1");
  P3dhSample s;
  auto& w = s.witness;
  w.a = Scalar::random(rng);
  w.b = Scalar::random(rng);
  w.c = Scalar::random(rng);
  w.d = Scalar::random(rng);
  w.z1 = Scalar::random(rng);
  w.z2 = Scalar::random(rng);
  w.z3 = Scalar::random(rng);
  w.f_log = Scalar::random_nonzero(rng);
  w.bit = bit;

  // g^x f^z = g^(x + f_log z)
  auto gf = [&](const Scalar& x, const Scalar& z) {
    return SymElement::from_exponent(x + w.f_log * z);
  };
  auto& t = s.tuple;
  t.g = SymElement::generator();
  t.f = SymElement::from_exponent(w.f_log);
  t.ga = SymElement::from_exponent(w.a);
  t.fa = SymElement::from_exponent(w.f_log * w.a);
  t.gb = SymElement::from_exponent(w.b);
  t.fb = SymElement::from_exponent(w.f_log * w.b);
  t.gab_fz1 = gf(w.a * w.b, w.z1);
  t.gz1 = SymElement::from_exponent(w.z1);
  t.gabc_fz2 = gf(w.a * w.b * w.c, w.z2);
  t.gz2 = SymElement::from_exponent(w.z2);
  t.t_first = gf(bit == 0 ? w.c : w.d, w.z3);
  t.t_second = SymElement::from_exponent(w.z3);
  return s;
}

bool verify_p3dh_wellformed(const P3dhTuple& t) {
  const G1& g1 = t.g.g1;
  const G2& g2 = t.g.g2;
  if (g1.is_identity() || g2.is_identity()) return false;
  for (const SymElement* e : t.components()) {
    if (e == &t.g) continue;
    if (!same_pairing(e->g1, g2, g1, e->g2)) return false;
  }
  if (!same_pairing(t.ga.g1, t.f.g2, t.fa.g1, g2)) return false;
  if (!same_pairing(t.gb.g1, t.f.g2, t.fb.g1, g2)) return false;
  // e(g^ab f^z1, g) = e(g^a, g^b) e(f, g^z1)
  const G1 lhs[] = {t.gab_fz1.g1, t.ga.g1.inverse(), t.f.g1.inverse()};
  const G2 rhs[] = {g2, t.gb.g2, t.gz1.g2};
  return pair_product(lhs, rhs).is_one();
}

Bytes serialize(const BdhTuple& t) {
  codec::Writer w("BDH", sym_suite().id);
  for (const SymElement* e : {&t.g, &t.ga, &t.gb, &t.gc}) write(w, *e);
  w.gt(t.t);
  return std::move(w).finish();
}

BdhTuple deserialize_bdh(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "BDH");
  BdhTuple t;
  for (SymElement* e : {&t.g, &t.ga, &t.gb, &t.gc}) *e = read_sym(r);
  t.t = r.gt();
  r.expect_end();
  return t;
}

Bytes serialize(const P3dhTuple& t) {
  codec::Writer w("P3DH", sym_suite().id);
  for (const SymElement* e : t.components()) write(w, *e);
  return std::move(w).finish();
}

P3dhTuple deserialize_p3dh(std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "P3DH");
  P3dhTuple t;
  for (SymElement* e : t.components()) *e = read_sym(r);
  r.expect_end();
  return t;
}

}  // namespace hve
