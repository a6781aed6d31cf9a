#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modgraph/caps.hpp"

namespace modgraph::algebra {

bool is_prime(std::uint64_t n);

/// Polynomials over Z/p, coefficient lists from the constant term upward.
namespace zp_poly {
using Poly = std::vector<std::uint32_t>;
void trim(Poly& a);
Poly mod(Poly a, const Poly& b, std::uint32_t p);
bool is_irreducible(const Poly& f, std::uint32_t p);
/// Lexicographically smallest monic irreducible of degree k, comparing
/// coefficients from the leading term down to the constant term.
Poly smallest_monic_irreducible(std::uint32_t p, unsigned k);
}  // namespace zp_poly

/// The field F_{p^k} as operation tables. Element i encodes the coefficient
/// vector of its residue polynomial in base p (digit j = coefficient of a^j),
/// so 0 is zero and 1 is one.
class FiniteField {
 public:
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  const zp_poly::Poly& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }

  /// Coefficient digits of element a, constant term first.
  std::vector<std::uint32_t> coefficients(std::uint32_t a) const;
  std::string label(std::uint32_t a) const;
  /// "F4", "F2", ...
  std::string name() const;

  friend FiniteField gf_build(std::uint32_t p, unsigned k, const Caps& caps);

 private:
  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::uint32_t q_ = 0;
  zp_poly::Poly modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

/// Builds F_{p^k}. Throws InvalidInput for composite p or k == 0 and
/// CapExceeded when p^k exceeds caps.max_ring_size.
FiniteField gf_build(std::uint32_t p, unsigned k, const Caps& caps = {});

struct SubfieldEmbedding {
  FiniteField field;
  /// embed[i] is the image in the ambient field of subfield element i.
  std::vector<std::uint32_t> embed;
};

/// The subfield F_{p^j} of F together with its embedding; the image is the
/// fixed set of x -> x^{p^j}. Throws InvalidInput unless j divides deg F.
SubfieldEmbedding subfield(const FiniteField& f, unsigned j);

}  // namespace modgraph::algebra
