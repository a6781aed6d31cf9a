#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modgraph/caps.hpp"
#include "modgraph/field.hpp"

namespace modgraph::algebra {

enum class RingBackend { zmod, gf, matrix, triangular, product, poly_quot, table };

std::string to_string(RingBackend b);

/// Construction parameters kept alongside the tables.
struct RingInfo {
  RingBackend backend = RingBackend::table;
  std::string name;
  // gf / matrix / triangular: the coefficient field.
  std::shared_ptr<const FiniteField> field;
  unsigned matrix_dim = 0;
  // triangular: degree of the lower-right subfield and its embedding.
  unsigned sub_degree = 0;
  std::vector<std::uint32_t> sub_embed;
};

/// A finite unital ring held as element-indexed operation tables. Index 0 is
/// the additive zero and index 1 the unity. Immutable after construction.
class FiniteRing {
 public:
  std::uint32_t size() const { return n_; }
  static constexpr std::uint32_t zero() { return 0; }
  static constexpr std::uint32_t one() { return 1; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[std::size_t{a} * n_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[std::size_t{a} * n_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }

  const RingInfo& info() const { return info_; }
  RingBackend backend() const { return info_.backend; }
  const std::string& name() const { return info_.name; }
  std::string label(std::uint32_t a) const;

  /// Matrix entries (row-major, indices into info().field) for matrix and
  /// triangular rings; empty otherwise.
  const std::vector<std::uint32_t>& coordinates(std::uint32_t a) const;
  bool has_coordinates() const { return !coords_.empty(); }

  bool is_commutative() const;

  /// Builds a ring from raw tables, verifying the ring axioms (exhaustive up to
  /// caps.exhaustive_axiom_limit, sampled above). Throws InvalidInput when an
  /// axiom fails or 0/1 are not the identities.
  static FiniteRing from_tables(std::uint32_t n, std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul,
                                RingInfo info, std::vector<std::string> labels = {},
                                std::vector<std::vector<std::uint32_t>> coords = {}, const Caps& caps = {});

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> add_, mul_, neg_;
  RingInfo info_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint32_t>> coords_;
};

/// Lightweight handle for element arithmetic.
class RingElement {
 public:
  RingElement(const FiniteRing& ring, std::uint32_t index);
  std::uint32_t index() const { return index_; }
  const FiniteRing& ring() const { return *ring_; }
  friend RingElement operator+(RingElement a, RingElement b) { return {*a.ring_, a.ring_->add(a.index_, b.index_)}; }
  friend RingElement operator*(RingElement a, RingElement b) { return {*a.ring_, a.ring_->mul(a.index_, b.index_)}; }
  RingElement operator-() const { return {*ring_, ring_->neg(index_)}; }
  friend bool operator==(RingElement a, RingElement b) { return a.ring_ == b.ring_ && a.index_ == b.index_; }

 private:
  const FiniteRing* ring_;
  std::uint32_t index_;
};

/// Throws InvalidInput describing the first failed ring axiom.
void verify_ring_axioms(const FiniteRing& r, const Caps& caps = {});

FiniteRing ring_zmod(std::uint32_t n, const Caps& caps = {});
FiniteRing ring_gf(const FiniteField& f);
/// m x m matrices over f.
FiniteRing ring_matrix(const FiniteField& f, unsigned m, const Caps& caps = {});
/// Matrices [[a,b],[0,c]] with a,b in delta and c in the subfield of degree j.
FiniteRing ring_triangular(const FiniteField& delta, unsigned j, const Caps& caps = {});
FiniteRing ring_product(const FiniteRing& a, const FiniteRing& b, const Caps& caps = {});
/// Commutative F_p[vars]/(relations). Each relation is "poly" or "lhs = rhs";
/// its graded-lex leading monomial is rewritten to the remaining terms.
/// Throws InvalidInput for parse errors, infinite quotients and relation sets
/// whose rewriting does not yield a well-defined ring.
FiniteRing ring_poly_quot(std::uint32_t p, const std::vector<std::string>& vars,
                          const std::vector<std::string>& relations, const Caps& caps = {});

}  // namespace modgraph::algebra
