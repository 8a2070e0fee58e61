#include <doctest.h>

#include "fixtures.hpp"
#include "hve/core/error.hpp"
#include "hve/product/assumptions.hpp"
#include "hve/product/product_group.hpp"

using namespace hve;

namespace {

const GT& gt() { return GT::generator(); }

ExponentVector random_vec(RandomSource& rng, std::size_t n) {
  ExponentVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::random(rng));
  return v;
}

}  // namespace

TEST_SUITE("product_groups") {

TEST_CASE("vec_exp") {
  auto rng = test::rng_for(10);
  const Scalar a = Scalar::random(rng), c = Scalar::random(rng);
  const Side1 x = Side1::from_exponents({Scalar::one(), a});
  CHECK(x.pow(Scalar::zero()).is_identity());
  CHECK(x.pow(Scalar::one()) == x);
  CHECK(vec_exp(x, c) == Side1::from_exponents({c, a * c}));
}

TEST_CASE("vec_mul") {
  auto rng = test::rng_for(11);
  const ExponentVector b1 = random_vec(rng, 3), b2 = random_vec(rng, 3);
  const Side2 x = Side2::from_exponents(b1);
  CHECK(x * Side2::identity(3) == x);
  CHECK(vec_mul(x, Side2::from_exponents(b2)) == Side2::from_exponents(add(b1, b2)));
  CHECK_THROWS_AS(Side1::identity(2) * Side1::identity(3), UsageError);
  CHECK((x * x.inverse()).is_identity());
}

TEST_CASE("vec_pair computes the inner product in the exponent") {
  auto rng = test::rng_for(12);
  const Scalar a = Scalar::random(rng);
  CHECK(vec_pair(Side1::from_exponents({Scalar::one(), Scalar::zero()}),
                 Side2::from_exponents({Scalar::zero(), Scalar::one()}))
            .is_one());
  CHECK(vec_pair(Side1::from_exponents({Scalar::one(), a}),
                 Side2::from_exponents({Scalar::one(), a})) ==
        gt().pow(Scalar::one() + a * a));
  CHECK_THROWS_AS(vec_pair(Side1::identity(2), Side2::identity(3)), UsageError);
}

TEST_CASE("vec_pair matches dot products for random vectors") {
  auto rng = test::rng_for(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 2 : 3;
    const ExponentVector u = random_vec(rng, n), v = random_vec(rng, n);
    CHECK(vec_pair(Side1::from_exponents(u), Side2::from_exponents(v)) == gt().pow(dot(u, v)));
  }
}

TEST_CASE("pairing count of vec_pair_product is the total dimension") {
  const Side1 xs[] = {Side1::identity(3), Side1::identity(3)};
  const Side2 ys[] = {Side2::identity(3), Side2::identity(3)};
  PairingCounter c;
  CHECK(vec_pair_product(xs, ys).is_one());
  CHECK(c.count() == 6);
}

TEST_CASE("gen_basis2 orthogonality") {
  auto rng = test::rng_for(14);
  for (int i = 0; i < 10; ++i) {
    const Basis2 b = gen_basis2(rng);
    CHECK_FALSE(b.trapdoor.a.is_zero());
    CHECK(check_orthogonal(b.side1.b2, b.side2.b12));
    CHECK(check_orthogonal(b.side1.b12, b.side2.b2));
    CHECK_FALSE(check_orthogonal(b.side1.b11, b.side2.b12));
    CHECK_FALSE(check_orthogonal(b.side1.b11, b.side2.b2));
    CHECK(b.side1.b11 == Side1::from_exponents({Scalar::one(), Scalar::zero()}));
    CHECK(b.side1.b12 == Side1::from_exponents({Scalar::one(), b.trapdoor.a}));
    CHECK(b.side2.b2 == Side2::from_exponents({b.trapdoor.a, -Scalar::one()}));
  }
  auto r1 = test::rng_for(1), r2 = test::rng_for(2);
  CHECK_FALSE(gen_basis2(r1).trapdoor.a == gen_basis2(r2).trapdoor.a);
}

TEST_CASE("gen_basis3 has exactly the expected orthogonal pairs") {
  auto rng = test::rng_for(15);
  for (int i = 0; i < 10; ++i) {
    const Basis3 b = gen_basis3(rng);
    const Side1* s1[] = {&b.side1.b11, &b.side1.b12, &b.side1.b2, &b.side1.b3};
    const Side2* s2[] = {&b.side2.b11, &b.side2.b12, &b.side2.b2, &b.side2.b3};
    // indices: 0 = b11, 1 = b12, 2 = b2, 3 = b3
    auto expected = [](int p, int q) {
      if (p > q) std::swap(p, q);
      return (p == 0 && q == 3) || (p == 1 && q == 2) || (p == 2 && q == 3);
    };
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        CHECK(check_orthogonal(*s1[p], *s2[q]) == expected(p, q));
        CHECK(check_orthogonal(*s1[q], *s2[p]) == expected(p, q));
      }
    CHECK_FALSE(vec_pair(b.side1.b11, b.side2.b2).is_one());
    const auto& t = b.trapdoor;
    CHECK_FALSE((t.a1 * t.a2 - t.a3).is_zero());
  }
}

TEST_CASE("B2 blinding is invisible to span{B12, B3}") {
  auto rng = test::rng_for(16);
  for (int trial = 0; trial < 100; ++trial) {
    if (trial % 2 == 0) {
      const Basis2 b = gen_basis2(rng);
      const Side1 x = Side1::from_exponents(random_vec(rng, 2));
      const Side2 y = b.side2.b12.pow(Scalar::random(rng));
      CHECK(vec_pair(x * b.side1.b2.pow(Scalar::random(rng)), y) == vec_pair(x, y));
    } else {
      const Basis3 b = gen_basis3(rng);
      const Side1 x = Side1::from_exponents(random_vec(rng, 3));
      const Side2 y = b.side2.b12.pow(Scalar::random(rng)) * b.side2.b3.pow(Scalar::random(rng));
      CHECK(vec_pair(x * b.side1.b2.pow(Scalar::random(rng)), y) == vec_pair(x, y));
    }
  }
}

TEST_CASE("check_orthogonal with the identity") {
  auto rng = test::rng_for(17);
  CHECK(check_orthogonal(Side1::identity(2), Side2::from_exponents(random_vec(rng, 2))));
  CHECK_THROWS_AS(check_orthogonal(Side1::identity(2), Side2::identity(3)), UsageError);
}

TEST_CASE("basis records exclude the trapdoor and round trip") {
  auto rng = test::rng_for(18);
  const Basis3 b = gen_basis3(rng);
  const Bytes rec = serialize_basis(b, GroupSuite::default_suite());
  const auto [s1, s2] = deserialize_basis3(rec);
  CHECK(s1 == b.side1);
  CHECK(s2 == b.side2);
  const auto a1 = b.trapdoor.a1.to_bytes();
  CHECK(std::search(rec.begin(), rec.end(), a1.begin(), a1.end()) == rec.end());
  const Basis2 b2 = gen_basis2(rng);
  const auto [t1, t2] = deserialize_basis2(serialize_basis(b2, GroupSuite::default_suite()));
  CHECK(t1 == b2.side1);
  CHECK(t2 == b2.side2);
  CHECK_THROWS_AS(deserialize_basis2(rec), DecodeError);
}

TEST_CASE("BDH sampler") {
  auto rng = test::rng_for(19);
  for (unsigned bit : {0u, 1u}) {
    const BdhSample s = sample_bdh(rng, bit);
    const auto& w = s.witness;
    CHECK(verify_bdh_wellformed(s.tuple));
    const bool real = pair(s.tuple.ga, s.tuple.gb).pow(w.c) == s.tuple.t;
    CHECK(real == (bit == 0));
    if (bit == 1) CHECK(s.tuple.t == gt().pow(w.d));
    const BdhTuple back = deserialize_bdh(serialize(s.tuple));
    CHECK(back.ga == s.tuple.ga);
    CHECK(back.t == s.tuple.t);
  }
  CHECK_THROWS_AS(sample_bdh(rng, 2), UsageError);
}

TEST_CASE("P3DH sampler") {
  auto rng = test::rng_for(20);
  for (unsigned bit : {0u, 1u}) {
    const P3dhSample s = sample_p3dh(rng, bit);
    const auto& t = s.tuple;
    const auto& w = s.witness;
    CHECK(verify_p3dh_wellformed(t));
    const SymElement g = SymElement::generator();
    // e(T1, g) == e(g,g)^c e(f,g)^z3 only on the real branch
    const bool real = pair(t.t_first, g) == gt().pow(w.c) * pair(t.f, g).pow(w.z3);
    CHECK(real == (bit == 0));
    CHECK(pair(t.gab_fz1, g) == pair(t.ga, t.gb) * pair(t.f, t.gz1));
    CHECK(pair(t.gabc_fz2, g) == gt().pow(w.a * w.b * w.c) * pair(t.f, g).pow(w.z2));
    CHECK(t.t_second == SymElement::from_exponent(w.z3));
    const P3dhTuple back = deserialize_p3dh(serialize(t));
    CHECK(back.components().size() == 12);
    CHECK(back.gabc_fz2 == t.gabc_fz2);
  }
}

TEST_CASE("P3DH corruption sweep") {
  auto rng = test::rng_for(21);
  const P3dhSample s = sample_p3dh(rng, 0);
  for (std::size_t k = 0; k < 12; ++k) {
    for (int half = 0; half < 2; ++half) {
      P3dhTuple bad = s.tuple;
      SymElement& e = *bad.components()[k];
      if (half == 0)
        e.g1 = e.g1 * G1::generator();
      else
        e.g2 = e.g2 * G2::generator();
      CHECK_FALSE(verify_p3dh_wellformed(bad));
    }
  }
  // Consistent replacement is caught wherever an exponent-free relation binds the component.
  for (std::size_t k = 0; k < 8; ++k) {
    P3dhTuple bad = s.tuple;
    SymElement& e = *bad.components()[k];
    e = e * SymElement::generator();
    CHECK_FALSE(verify_p3dh_wellformed(bad));
  }
}

}  // TEST_SUITE
