#include <cmath>
#include <set>
#include <tuple>

#include "doctest.h"
#include "modgraph/errors.hpp"
#include "modgraph/field.hpp"
#include "modgraph/instance.hpp"
#include "modgraph/ring.hpp"

using namespace modgraph;
using namespace modgraph::algebra;

namespace {

void check_field_axioms(const FiniteField& f) {
  const auto q = f.size();
  for (std::uint32_t a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    for (std::uint32_t b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      if (a && b) CHECK(f.mul(a, b) != 0);
      for (std::uint32_t c = 0; c < q; ++c) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

// Multiplication by carrying out the polynomial product digit by digit.
std::uint32_t poly_mul_oracle(const FiniteField& f, std::uint32_t a, std::uint32_t b) {
  const auto p = f.characteristic();
  const auto k = f.degree();
  std::vector<std::uint32_t> x(k), y(k), z(2 * k, 0);
  for (unsigned i = 0; i < k; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  const auto& m = f.modulus();
  for (unsigned d = 2 * k - 1; d >= k; --d) {
    const auto c = z[d];
    for (unsigned i = 0; i <= k; ++i) z[d - k + i] = (z[d - k + i] + (p - c) * m[i]) % p;
  }
  std::uint32_t out = 0;
  for (unsigned i = k; i-- > 0;) out = out * p + z[i];
  return out;
}

}  // namespace

TEST_CASE("prime fields have modular tables") {
  const auto f2 = gf_build(2, 1);
  CHECK(f2.size() == 2);
  CHECK(f2.add(0, 1) == 1);
  CHECK(f2.mul(1, 1) == 1);
  CHECK(f2.add(1, 1) == 0);
  const auto f3 = gf_build(3, 1);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.inv(2) == 2);
}

TEST_CASE("field axioms hold exhaustively") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {5, 2}}) {
    CAPTURE(p);
    CAPTURE(k);
    const auto f = gf_build(p, k);
    CHECK(f.size() == static_cast<std::uint32_t>(std::pow(p, k)));
    check_field_axioms(f);
  }
}

TEST_CASE("moduli are the smallest monic irreducibles") {
  using P = zp_poly::Poly;
  CHECK(gf_build(2, 2).modulus() == P{1, 1, 1});
  CHECK(gf_build(2, 3).modulus() == P{1, 1, 0, 1});
  CHECK(gf_build(3, 2).modulus() == P{1, 0, 1});
  CHECK(gf_build(2, 4).modulus() == P{1, 1, 0, 0, 1});
}

TEST_CASE("multiplication agrees with schoolbook polynomial reduction") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
    const auto f = gf_build(p, k);
    for (std::uint32_t a = 0; a < f.size(); ++a)
      for (std::uint32_t b = 0; b < f.size(); ++b) CHECK(f.mul(a, b) == poly_mul_oracle(f, a, b));
  }
}

TEST_CASE("F4 units square to each other") {
  const auto f = gf_build(2, 2);
  CHECK(f.mul(2, 2) == 3);
  CHECK(f.mul(3, 3) == 2);
}

TEST_CASE("subfield embeddings") {
  const auto f4 = gf_build(2, 2);
  auto s = subfield(f4, 1);
  CHECK(s.field.size() == 2);
  CHECK(s.embed == std::vector<std::uint32_t>{0, 1});
  auto same = subfield(f4, 2);
  CHECK(same.embed == std::vector<std::uint32_t>{0, 1, 2, 3});

  const auto f16 = gf_build(2, 4);
  auto sub = subfield(f16, 2);
  std::set<std::uint32_t> image(sub.embed.begin(), sub.embed.end());
  std::set<std::uint32_t> fixed;
  for (std::uint32_t x = 0; x < 16; ++x) {
    const std::uint32_t x2 = poly_mul_oracle(f16, x, x);
    const std::uint32_t x4 = poly_mul_oracle(f16, x2, x2);
    if (x4 == x) fixed.insert(x);
  }
  CHECK(image.size() == 4);
  CHECK(image == fixed);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      CHECK(f16.add(sub.embed[a], sub.embed[b]) == sub.embed[sub.field.add(a, b)]);
      CHECK(f16.mul(sub.embed[a], sub.embed[b]) == sub.embed[sub.field.mul(a, b)]);
    }
  CHECK_THROWS_AS(subfield(f16, 3), InvalidInput);
}

TEST_CASE("invalid fields are rejected") {
  CHECK_THROWS_AS(gf_build(4, 1), InvalidInput);
  CHECK_THROWS_AS(gf_build(2, 0), InvalidInput);
  Caps caps;
  caps.max_ring_size = 8;
  CHECK_THROWS_AS(gf_build(2, 4, caps), CapExceeded);
}

TEST_CASE("zmod tables") {
  const auto r = ring_zmod(12);
  CHECK(r.size() == 12);
  CHECK(r.mul(6, 2) == 0);
  CHECK(r.add(7, 8) == 3);
  CHECK(r.is_commutative());
  verify_ring_axioms(r);
  RingElement a(r, 5), b(r, 7);
  CHECK((a * b).index() == 11);
  CHECK((a + b).index() == 0);
  CHECK((-a).index() == 7);
}

TEST_CASE("matrix ring") {
  const auto f2 = gf_build(2, 1);
  const auto r = ring_matrix(f2, 2);
  CHECK(r.size() == 16);
  CHECK_FALSE(r.is_commutative());
  verify_ring_axioms(r);
  for (std::uint32_t x = 0; x < r.size(); ++x) {
    CHECK(r.mul(1, x) == x);
    CHECK(r.mul(x, 1) == x);
  }
  std::size_t units = 0;
  for (std::uint32_t x = 0; x < r.size(); ++x)
    for (std::uint32_t y = 0; y < r.size(); ++y)
      if (r.mul(x, y) == 1) {
        ++units;
        break;
      }
  CHECK(units == 6);  // |GL_2(F_2)|
  CHECK(ring_matrix(gf_build(3, 1), 2).size() == 81);
}

TEST_CASE("triangular ring multiplication matches the matrix product") {
  for (auto [p, k, j] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{{2, 2, 1}, {2, 3, 1}, {3, 2, 1}}) {
    const auto delta = gf_build(p, k);
    const auto r = ring_triangular(delta, j);
    const auto q = delta.size();
    CHECK(r.size() == q * q * static_cast<std::uint32_t>(std::pow(p, j)));
    REQUIRE(r.has_coordinates());
    const auto& f = *r.info().field;
    for (std::uint32_t x = 0; x < r.size(); ++x)
      for (std::uint32_t y = 0; y < r.size(); ++y) {
        const auto& u = r.coordinates(x);
        const auto& v = r.coordinates(y);
        const auto& w = r.coordinates(r.mul(x, y));
        CHECK(u[2] == 0);
        CHECK(w[0] == f.mul(u[0], v[0]));
        CHECK(w[1] == f.add(f.mul(u[0], v[1]), f.mul(u[1], v[3])));
        CHECK(w[3] == f.mul(u[3], v[3]));
      }
    verify_ring_axioms(r);
  }
}

TEST_CASE("product and quotient rings") {
  const auto a = ring_zmod(2);
  const auto b = ring_zmod(3);
  const auto r = ring_product(a, b);
  CHECK(r.size() == 6);
  verify_ring_axioms(r);

  const auto d = ring_poly_quot(2, {"x"}, {"x^2"});
  CHECK(d.size() == 4);
  verify_ring_axioms(d);
  std::size_t nilpotent = 0;
  for (std::uint32_t x = 1; x < d.size(); ++x)
    if (d.mul(x, x) == 0) ++nilpotent;
  CHECK(nilpotent == 1);

  CHECK(ring_poly_quot(2, {"x"}, {"x^3"}).size() == 8);
  const auto e = ring_poly_quot(2, {"x", "y"}, {"x^2", "x*y", "y^2"});
  CHECK(e.size() == 8);
  CHECK(e.is_commutative());
  std::size_t square_zero = 0;
  for (std::uint32_t x = 1; x < e.size(); ++x)
    if (e.mul(x, x) == 0) ++square_zero;
  CHECK(square_zero == 3);
}

TEST_CASE("ring errors") {
  CHECK_THROWS_AS(ring_zmod(1), InvalidInput);
  Caps caps;
  caps.max_ring_size = 10;
  CHECK_THROWS_AS(ring_zmod(12, caps), CapExceeded);
  CHECK_THROWS_AS(ring_poly_quot(2, {"x"}, {}), InvalidInput);
  CHECK_THROWS_AS(ring_poly_quot(2, {"x"}, {"z^2"}), InvalidInput);
  std::vector<std::uint32_t> add = {0, 1, 1, 0}, mul = {0, 0, 0, 0};
  RingInfo info;
  CHECK_THROWS_AS(FiniteRing::from_tables(2, add, mul, info), InvalidInput);
}

TEST_CASE("ring specs build through the instance layer") {
  auto inst = spec::build(spec::instance(spec::triangular(2, 2, 1)));
  CHECK(inst.ring->size() == 32);
  CHECK(inst.module->size() == 32);
}
