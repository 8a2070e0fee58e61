#pragma once

// Challenge-tuple samplers for the decisional BDH and P3DH problems in a
// symmetric prime-order group (emulated as (G1, G2) pairs). Used to build
// test vectors; the witness exponents are returned separately so tests can
// recompute the defining relations.

#include <array>

#include "hve/core/groups.hpp"

namespace hve {

/// (g, g^a, g^b, g^c) and T = e(g,g)^abc (bit 0) or e(g,g)^d (bit 1).
struct BdhTuple {
  SymElement g, ga, gb, gc;
  GT t;
};

struct BdhWitness {
  Scalar a, b, c, d;
  unsigned bit;
};

struct BdhSample {
  BdhTuple tuple;
  BdhWitness witness;
};

BdhSample sample_bdh(RandomSource& rng, unsigned bit);

/// Exponent-free checks: every element's halves agree.
bool verify_bdh_wellformed(const BdhTuple& t);

/// (g,f), (g^a,f^a), (g^b,f^b), (g^ab f^z1, g^z1), (g^abc f^z2, g^z2) and
/// T = (g^c f^z3, g^z3) (bit 0) or (g^d f^z3, g^z3) (bit 1).
struct P3dhTuple {
  SymElement g, f;
  SymElement ga, fa;
  SymElement gb, fb;
  SymElement gab_fz1, gz1;
  SymElement gabc_fz2, gz2;
  SymElement t_first, t_second;

  /// All twelve components in declaration order.
  std::array<SymElement*, 12> components();
  std::array<const SymElement*, 12> components() const;
};

struct P3dhWitness {
  Scalar a, b, c, d, z1, z2, z3;
  Scalar f_log;  // f = g^f_log
  unsigned bit;
};

struct P3dhSample {
  P3dhTuple tuple;
  P3dhWitness witness;
};

P3dhSample sample_p3dh(RandomSource& rng, unsigned bit);

/// True iff every pairing relation among the published components holds:
/// per-element half consistency, e(g^a, f) = e(f^a, g), e(g^b, f) = e(f^b, g)
/// and e(g^ab f^z1, g) = e(g^a, g^b) e(f, g^z1). Relations that need a
/// withheld exponent (c, z2, z3) are out of reach by construction.
bool verify_p3dh_wellformed(const P3dhTuple& t);

Bytes serialize(const BdhTuple& t);
BdhTuple deserialize_bdh(std::span<const std::uint8_t> bytes);
Bytes serialize(const P3dhTuple& t);
P3dhTuple deserialize_p3dh(std::span<const std::uint8_t> bytes);

}  // namespace hve
