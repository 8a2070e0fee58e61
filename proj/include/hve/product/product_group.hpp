#pragma once

// Bilinear product groups: n-tuples of source-group elements g^b for an
// exponent vector b, with the pairing taken componentwise so that
// e(g^a, g_hat^b) = e(g, g_hat)^(a . b).
//
// Side 1 (ciphertext role) lives in G1, side 2 (token role) in G2, so mixing
// sides is a type error rather than a runtime one.

#include <cstddef>
#include <span>
#include <vector>

#include "hve/core/codec.hpp"
#include "hve/core/error.hpp"
#include "hve/core/groups.hpp"

namespace hve {

using ExponentVector = std::vector<Scalar>;

Scalar dot(const ExponentVector& a, const ExponentVector& b);
ExponentVector scale(const ExponentVector& v, const Scalar& c);
ExponentVector add(const ExponentVector& a, const ExponentVector& b);

template <class G>
class ProductElement {
 public:
  ProductElement() = default;
  explicit ProductElement(std::vector<G> elems) : elems_(std::move(elems)) {}

  static ProductElement identity(std::size_t dim) { return ProductElement(std::vector<G>(dim)); }

  static ProductElement from_exponents(const ExponentVector& b) {
    std::vector<G> elems;
    elems.reserve(b.size());
    for (const Scalar& bi : b) elems.push_back(G::generator().pow(bi));
    return ProductElement(std::move(elems));
  }

  std::size_t dim() const { return elems_.size(); }
  const G& operator[](std::size_t i) const { return elems_[i]; }
  std::span<const G> elems() const { return elems_; }

  /// (g^b)^c = g^(c b)
  ProductElement pow(const Scalar& c) const {
    std::vector<G> out;
    out.reserve(elems_.size());
    for (const G& e : elems_) out.push_back(e.pow(c));
    return ProductElement(std::move(out));
  }

  /// g^a g^b = g^(a + b)
  ProductElement operator*(const ProductElement& o) const {
    if (o.dim() != dim())
      throw UsageError("product element dimension mismatch: " + std::to_string(dim()) + " vs " +
                       std::to_string(o.dim()));
    std::vector<G> out;
    out.reserve(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) out.push_back(elems_[i] * o.elems_[i]);
    return ProductElement(std::move(out));
  }
  ProductElement& operator*=(const ProductElement& o) { return *this = *this * o; }

  ProductElement inverse() const {
    std::vector<G> out;
    out.reserve(elems_.size());
    for (const G& e : elems_) out.push_back(e.inverse());
    return ProductElement(std::move(out));
  }

  bool is_identity() const {
    for (const G& e : elems_)
      if (!e.is_identity()) return false;
    return true;
  }

  friend bool operator==(const ProductElement& a, const ProductElement& b) {
    return a.elems_ == b.elems_;
  }

 private:
  std::vector<G> elems_;
};

using Side1 = ProductElement<G1>;
using Side2 = ProductElement<G2>;

inline Side1 vec_exp(const Side1& x, const Scalar& c) { return x.pow(c); }
inline Side2 vec_exp(const Side2& x, const Scalar& c) { return x.pow(c); }
inline Side1 vec_mul(const Side1& x, const Side1& y) { return x * y; }
inline Side2 vec_mul(const Side2& x, const Side2& y) { return x * y; }

/// prod_i e(x_i, y_i); counts dim() base pairings.
GT vec_pair(const Side1& x, const Side2& y);

/// prod_k vec_pair(xs[k], ys[k]) with one shared final exponentiation.
GT vec_pair_product(std::span<const Side1> xs, std::span<const Side2> ys);

/// True iff vec_pair(x, y) = 1.
bool check_orthogonal(const Side1& x, const Side2& y);

void write(codec::Writer& w, const Side1& x);
void write(codec::Writer& w, const Side2& x);
Side1 read_side1(codec::Reader& r, std::size_t dim);
Side2 read_side2(codec::Reader& r, std::size_t dim);

// ---- bases ----------------------------------------------------------------

/// Secret exponent a of the 2-dim basis b11 = (1,0), b12 = (1,a), b2 = (a,-1).
struct Basis2Trapdoor {
  Scalar a;

  ExponentVector b11() const;
  ExponentVector b12() const;
  ExponentVector b2() const;
};

template <class G>
struct Basis2Elements {
  ProductElement<G> b11, b12, b2;
  friend bool operator==(const Basis2Elements&, const Basis2Elements&) = default;
};

struct Basis2 {
  Basis2Elements<G1> side1;
  Basis2Elements<G2> side2;
  Basis2Trapdoor trapdoor;
};

/// Secret exponents of the 3-dim basis
///   b11 = (1,0,a1), b12 = (1,a2,0), b2 = (a2,-1,a1 a2 - a3), b3 = (a1,a3,-1).
struct Basis3Trapdoor {
  Scalar a1, a2, a3;

  ExponentVector b11() const;
  ExponentVector b12() const;
  ExponentVector b2() const;
  ExponentVector b3() const;
};

template <class G>
struct Basis3Elements {
  ProductElement<G> b11, b12, b2, b3;
  friend bool operator==(const Basis3Elements&, const Basis3Elements&) = default;
};

struct Basis3 {
  Basis3Elements<G1> side1;
  Basis3Elements<G2> side2;
  Basis3Trapdoor trapdoor;
};

/// Trapdoors are uniform and resampled until no basis product that should
/// be nonzero vanishes.
Basis2 gen_basis2(RandomSource& rng);
Basis3 gen_basis3(RandomSource& rng);

Basis2 basis2_from_trapdoor(const Basis2Trapdoor& t);
Basis3 basis3_from_trapdoor(const Basis3Trapdoor& t);

/// Public (trapdoor-free) basis records, both sides.
Bytes serialize_basis(const Basis2& b, const GroupSuite& suite);
Bytes serialize_basis(const Basis3& b, const GroupSuite& suite);
std::pair<Basis2Elements<G1>, Basis2Elements<G2>> deserialize_basis2(std::span<const std::uint8_t>);
std::pair<Basis3Elements<G1>, Basis3Elements<G2>> deserialize_basis3(std::span<const std::uint8_t>);

}  // namespace hve
