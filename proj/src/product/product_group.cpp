#include "hve/product/product_group.hpp"

namespace hve {

Scalar dot(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw UsageError("dot: dimension mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

ExponentVector scale(const ExponentVector& v, const Scalar& c) {
  ExponentVector out;
  out.reserve(v.size());
  for (const Scalar& x : v) out.push_back(x * c);
  return out;
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw UsageError("add: dimension mismatch");
  ExponentVector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

GT vec_pair(const Side1& x, const Side2& y) {
  return vec_pair_product(std::span(&x, 1), std::span(&y, 1));
}

GT vec_pair_product(std::span<const Side1> xs, std::span<const Side2> ys) {
  if (xs.size() != ys.size()) throw UsageError("vec_pair_product: argument count mismatch");
  std::vector<G1> flat1;
  std::vector<G2> flat2;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k].dim() != ys[k].dim())
      throw UsageError("vec_pair: dimension mismatch: " + std::to_string(xs[k].dim()) + " vs " +
                       std::to_string(ys[k].dim()));
    flat1.insert(flat1.end(), xs[k].elems().begin(), xs[k].elems().end());
    flat2.insert(flat2.end(), ys[k].elems().begin(), ys[k].elems().end());
  }
  return pair_product(flat1, flat2);
}

bool check_orthogonal(const Side1& x, const Side2& y) { return vec_pair(x, y).is_one(); }

void write(codec::Writer& w, const Side1& x) {
  w.u32(static_cast<std::uint32_t>(x.dim()));
  for (const G1& e : x.elems()) w.g1(e);
}

void write(codec::Writer& w, const Side2& x) {
  w.u32(static_cast<std::uint32_t>(x.dim()));
  for (const G2& e : x.elems()) w.g2(e);
}

Side1 read_side1(codec::Reader& r, std::size_t dim) {
  if (r.u32() != dim) throw DecodeError("product element has wrong dimension");
  std::vector<G1> elems;
  for (std::size_t i = 0; i < dim; ++i) elems.push_back(r.g1());
  return Side1(std::move(elems));
}

Side2 read_side2(codec::Reader& r, std::size_t dim) {
  if (r.u32() != dim) throw DecodeError("product element has wrong dimension");
  std::vector<G2> elems;
  for (std::size_t i = 0; i < dim; ++i) elems.push_back(r.g2());
  return Side2(std::move(elems));
}

// ---- bases ----------------------------------------------------------------

ExponentVector Basis2Trapdoor::b11() const { return {Scalar::one(), Scalar::zero()}; }
ExponentVector Basis2Trapdoor::b12() const { return {Scalar::one(), a}; }
ExponentVector Basis2Trapdoor::b2() const { return {a, -Scalar::one()}; }

ExponentVector Basis3Trapdoor::b11() const { return {Scalar::one(), Scalar::zero(), a1}; }
ExponentVector Basis3Trapdoor::b12() const { return {Scalar::one(), a2, Scalar::zero()}; }
ExponentVector Basis3Trapdoor::b2() const { return {a2, -Scalar::one(), a1 * a2 - a3}; }
ExponentVector Basis3Trapdoor::b3() const { return {a1, a3, -Scalar::one()}; }

Basis2 basis2_from_trapdoor(const Basis2Trapdoor& t) {
  Basis2 b;
  b.trapdoor = t;
  b.side1 = {Side1::from_exponents(t.b11()), Side1::from_exponents(t.b12()),
             Side1::from_exponents(t.b2())};
  b.side2 = {Side2::from_exponents(t.b11()), Side2::from_exponents(t.b12()),
             Side2::from_exponents(t.b2())};
  return b;
}

Basis3 basis3_from_trapdoor(const Basis3Trapdoor& t) {
  Basis3 b;
  b.trapdoor = t;
  b.side1 = {Side1::from_exponents(t.b11()), Side1::from_exponents(t.b12()),
             Side1::from_exponents(t.b2()), Side1::from_exponents(t.b3())};
  b.side2 = {Side2::from_exponents(t.b11()), Side2::from_exponents(t.b12()),
             Side2::from_exponents(t.b2()), Side2::from_exponents(t.b3())};
  return b;
}

Basis2 gen_basis2(RandomSource& rng) {
  // b11 . b2 = a must not vanish.
  return basis2_from_trapdoor({Scalar::random_nonzero(rng)});
}

Basis3 gen_basis3(RandomSource& rng) {
  for (;;) {
    Basis3Trapdoor t{Scalar::random_nonzero(rng), Scalar::random_nonzero(rng),
                     Scalar::random_nonzero(rng)};
    if ((t.a1 * t.a2 - t.a3).is_zero()) continue;
    // Only (b11,b3), (b12,b2), (b2,b3) may be orthogonal.
    if (dot(t.b11(), t.b2()).is_zero() || dot(t.b12(), t.b3()).is_zero()) continue;
    return basis3_from_trapdoor(t);
  }
}

Bytes serialize_basis(const Basis2& b, const GroupSuite& suite) {
  codec::Writer w("BASIS2", suite.id);
  for (const Side1* e : {&b.side1.b11, &b.side1.b12, &b.side1.b2}) write(w, *e);
  for (const Side2* e : {&b.side2.b11, &b.side2.b12, &b.side2.b2}) write(w, *e);
  return std::move(w).finish();
}

Bytes serialize_basis(const Basis3& b, const GroupSuite& suite) {
  codec::Writer w("BASIS3", suite.id);
  for (const Side1* e : {&b.side1.b11, &b.side1.b12, &b.side1.b2, &b.side1.b3}) write(w, *e);
  for (const Side2* e : {&b.side2.b11, &b.side2.b12, &b.side2.b2, &b.side2.b3}) write(w, *e);
  return std::move(w).finish();
}

std::pair<Basis2Elements<G1>, Basis2Elements<G2>> deserialize_basis2(
    std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "BASIS2");
  Basis2Elements<G1> s1;
  Basis2Elements<G2> s2;
  s1.b11 = read_side1(r, 2);
  s1.b12 = read_side1(r, 2);
  s1.b2 = read_side1(r, 2);
  s2.b11 = read_side2(r, 2);
  s2.b12 = read_side2(r, 2);
  s2.b2 = read_side2(r, 2);
  r.expect_end();
  return {s1, s2};
}

std::pair<Basis3Elements<G1>, Basis3Elements<G2>> deserialize_basis3(
    std::span<const std::uint8_t> bytes) {
  codec::Reader r(bytes, "BASIS3");
  Basis3Elements<G1> s1;
  Basis3Elements<G2> s2;
  s1.b11 = read_side1(r, 3);
  s1.b12 = read_side1(r, 3);
  s1.b2 = read_side1(r, 3);
  s1.b3 = read_side1(r, 3);
  s2.b11 = read_side2(r, 3);
  s2.b12 = read_side2(r, 3);
  s2.b2 = read_side2(r, 3);
  s2.b3 = read_side2(r, 3);
  r.expect_end();
  return {s1, s2};
}

}  // namespace hve
