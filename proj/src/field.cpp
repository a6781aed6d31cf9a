#include "modgraph/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modgraph/errors.hpp"

namespace modgraph::algebra {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace zp_poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Poly mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  Poly d = b;
  trim(d);
  if (d.empty()) throw std::invalid_argument("polynomial division by zero");
  const std::uint32_t lead_inv = inv_mod(d.back(), p);
  while (a.size() >= d.size()) {
    const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::uint64_t sub = std::uint64_t{factor} * d[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f_in, std::uint32_t p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g(d + 1, 0);
      std::uint64_t x = v;
      for (unsigned i = 0; i < d; ++i, x /= p) g[i] = static_cast<std::uint32_t>(x % p);
      g[d] = 1;
      if (mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_monic_irreducible(std::uint32_t p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t v = 0; v < count; ++v) {
    Poly f(k + 1, 0);
    std::uint64_t x = v;
    for (unsigned i = 0; i < k; ++i, x /= p) f[i] = static_cast<std::uint32_t>(x % p);
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace zp_poly

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> FiniteField::coefficients(std::uint32_t a) const {
  std::vector<std::uint32_t> c(k_, 0);
  for (unsigned i = 0; i < k_; ++i, a /= p_) c[i] = a % p_;
  return c;
}

std::string FiniteField::label(std::uint32_t a) const {
  if (k_ == 1) return std::to_string(a);
  const auto c = coefficients(a);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "a";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string FiniteField::name() const { return "F" + std::to_string(q_); }

FiniteField gf_build(std::uint32_t p, unsigned k, const Caps& caps) {
  if (!is_prime(p)) throw InvalidInput("gf_build: characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidInput("gf_build: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > caps.max_ring_size)
      throw CapExceeded("gf_build: field size exceeds max ring size " + std::to_string(caps.max_ring_size));
  }

  FiniteField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);
  f.modulus_ = zp_poly::smallest_monic_irreducible(p, k);
  const std::uint32_t n = f.q_;

  auto digits = [&](std::uint32_t a) {
    std::vector<std::uint32_t> c(k, 0);
    for (unsigned i = 0; i < k; ++i, a /= p) c[i] = a % p;
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t v = 0;
    for (unsigned i = c.size() < k ? static_cast<unsigned>(c.size()) : k; i-- > 0;) v = v * p + c[i];
    return v;
  };

  f.add_.resize(std::size_t{n} * n);
  f.mul_.resize(std::size_t{n} * n);
  f.neg_.resize(n);
  f.inv_.assign(n, 0);
  std::vector<std::vector<std::uint32_t>> dig(n);
  for (std::uint32_t a = 0; a < n; ++a) dig[a] = digits(a);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::vector<std::uint32_t> c(k);
    for (unsigned i = 0; i < k; ++i) c[i] = (p - dig[a][i]) % p;
    f.neg_[a] = encode(c);
    for (std::uint32_t b = 0; b < n; ++b) {
      for (unsigned i = 0; i < k; ++i) c[i] = (dig[a][i] + dig[b][i]) % p;
      f.add_[a * n + b] = encode(c);
      zp_poly::Poly prod(2 * k, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{dig[a][i]} * dig[b][j]) % p);
      f.mul_[a * n + b] = encode(zp_poly::mod(prod, f.modulus_, p));
    }
  }
  for (std::uint32_t a = 1; a < n; ++a)
    for (std::uint32_t b = 1; b < n; ++b)
      if (f.mul_[a * n + b] == 1) {
        f.inv_[a] = b;
        break;
      }
  return f;
}

SubfieldEmbedding subfield(const FiniteField& f, unsigned j) {
  if (j == 0 || f.degree() % j != 0)
    throw InvalidInput("subfield: degree " + std::to_string(j) + " does not divide " + std::to_string(f.degree()));
  Caps caps;
  caps.max_ring_size = f.size();
  FiniteField sub = gf_build(f.characteristic(), j, caps);
  const auto& g = sub.modulus();

  // Smallest root of the subfield modulus in f.
  auto eval = [&](std::uint32_t x) {
    std::uint32_t acc = 0;
    for (std::size_t i = g.size(); i-- > 0;) acc = f.add(f.mul(acc, x), g[i]);
    return acc;
  };
  std::uint32_t root = f.size();
  for (std::uint32_t x = 0; x < f.size(); ++x)
    if (eval(x) == 0) {
      root = x;
      break;
    }
  if (root == f.size()) throw std::logic_error("subfield: modulus has no root in ambient field");

  std::vector<std::uint32_t> embed(sub.size());
  for (std::uint32_t s = 0; s < sub.size(); ++s) {
    const auto c = sub.coefficients(s);
    std::uint32_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, root), c[i]);
    embed[s] = acc;
  }

  std::uint64_t qj = sub.size();
  std::vector<std::uint32_t> fixed;
  for (std::uint32_t x = 0; x < f.size(); ++x)
    if (f.pow(x, qj) == x) fixed.push_back(x);
  auto image = embed;
  std::sort(image.begin(), image.end());
  if (image != fixed) throw std::logic_error("subfield: embedding image differs from Frobenius fixed set");
  return {std::move(sub), std::move(embed)};
}

}  // namespace modgraph::algebra
