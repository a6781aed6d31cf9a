#include "modgraph/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "modgraph/errors.hpp"

namespace modgraph::algebra {

std::string to_string(RingBackend b) {
  switch (b) {
    case RingBackend::zmod: return "zmod";
    case RingBackend::gf: return "gf";
    case RingBackend::matrix: return "matrix";
    case RingBackend::triangular: return "triangular";
    case RingBackend::product: return "product";
    case RingBackend::poly_quot: return "poly_quot";
    case RingBackend::table: return "table";
  }
  return "table";
}

std::string FiniteRing::label(std::uint32_t a) const {
  if (a < labels_.size()) return labels_[a];
  return std::to_string(a);
}

const std::vector<std::uint32_t>& FiniteRing::coordinates(std::uint32_t a) const {
  static const std::vector<std::uint32_t> empty;
  return coords_.empty() ? empty : coords_[a];
}

bool FiniteRing::is_commutative() const {
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

RingElement::RingElement(const FiniteRing& ring, std::uint32_t index) : ring_(&ring), index_(index) {
  if (index >= ring.size()) throw InvalidInput("ring element index out of range");
}

FiniteRing FiniteRing::from_tables(std::uint32_t n, std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul,
                                   RingInfo info, std::vector<std::string> labels,
                                   std::vector<std::vector<std::uint32_t>> coords, const Caps& caps) {
  if (n < 2) throw InvalidInput("ring must have at least two elements (0 != 1)");
  if (n > caps.max_ring_size)
    throw CapExceeded("ring size " + std::to_string(n) + " exceeds max ring size " + std::to_string(caps.max_ring_size));
  const std::size_t nn = std::size_t{n} * n;
  if (add.size() != nn || mul.size() != nn) throw InvalidInput("ring tables must be n x n");
  for (std::size_t i = 0; i < nn; ++i)
    if (add[i] >= n || mul[i] >= n) throw InvalidInput("ring table entry out of range");

  FiniteRing r;
  r.n_ = n;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.info_ = std::move(info);
  r.labels_ = std::move(labels);
  r.coords_ = std::move(coords);
  r.neg_.assign(n, n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (r.add(a, b) == 0) {
        r.neg_[a] = b;
        break;
      }
  verify_ring_axioms(r, caps);
  return r;
}

void verify_ring_axioms(const FiniteRing& r, const Caps& caps) {
  const std::uint32_t n = r.size();
  auto fail = [&](const std::string& what, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    throw InvalidInput("ring " + r.name() + ": " + what + " fails at (" + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(c) + ")");
  };
  for (std::uint32_t a = 0; a < n; ++a) {
    if (r.add(0, a) != a || r.add(a, 0) != a) fail("additive identity", a, 0, 0);
    if (r.mul(1, a) != a || r.mul(a, 1) != a) fail("multiplicative identity", a, 1, 0);
    if (r.neg(a) >= n) fail("additive inverse", a, 0, 0);
    for (std::uint32_t b = 0; b < n; ++b)
      if (r.add(a, b) != r.add(b, a)) fail("additive commutativity", a, b, 0);
  }
  auto triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) fail("additive associativity", a, b, c);
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) fail("multiplicative associativity", a, b, c);
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) fail("left distributivity", a, b, c);
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) fail("right distributivity", a, b, c);
  };
  if (n <= caps.exhaustive_axiom_limit) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    for (std::size_t i = 0; i < caps.sampled_axiom_checks; ++i) triple(pick(rng), pick(rng), pick(rng));
  }
}

namespace {

/// A ring described on "natural codes" 0..count-1, renumbered so that zero
/// lands on index 0 and one on index 1, the rest keeping ascending code order.
struct CodedRing {
  std::uint32_t count = 0;
  std::uint32_t zero = 0;
  std::uint32_t one = 1;
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> add, mul;
  std::function<std::string(std::uint32_t)> label;
  std::function<std::vector<std::uint32_t>(std::uint32_t)> coords;
};

FiniteRing assemble(const CodedRing& c, RingInfo info, const Caps& caps) {
  const std::uint32_t n = c.count;
  std::vector<std::uint32_t> order;
  order.reserve(n);
  order.push_back(c.zero);
  order.push_back(c.one);
  for (std::uint32_t code = 0; code < n; ++code)
    if (code != c.zero && code != c.one) order.push_back(code);
  std::vector<std::uint32_t> index_of(n);
  for (std::uint32_t i = 0; i < n; ++i) index_of[order[i]] = i;

  const std::size_t nn = std::size_t{n} * n;
  std::vector<std::uint32_t> add(nn), mul(nn);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      add[std::size_t{i} * n + j] = index_of[c.add(order[i], order[j])];
      mul[std::size_t{i} * n + j] = index_of[c.mul(order[i], order[j])];
    }
  std::vector<std::string> labels;
  if (c.label) {
    labels.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) labels.push_back(c.label(order[i]));
  }
  std::vector<std::vector<std::uint32_t>> coords;
  if (c.coords) {
    coords.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) coords.push_back(c.coords(order[i]));
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), std::move(info), std::move(labels),
                                 std::move(coords), caps);
}

void check_size(std::uint64_t n, const Caps& caps, const std::string& what) {
  if (n > caps.max_ring_size)
    throw CapExceeded(what + ": ring size " + std::to_string(n) + " exceeds max ring size " +
                      std::to_string(caps.max_ring_size));
}

std::string matrix_label(const FiniteField& f, const std::vector<std::uint32_t>& e, unsigned m) {
  std::string s = "[";
  for (unsigned r = 0; r < m; ++r) {
    s += r ? ",[" : "[";
    for (unsigned c = 0; c < m; ++c) {
      if (c) s += ",";
      s += f.label(e[r * m + c]);
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace

FiniteRing ring_zmod(std::uint32_t n, const Caps& caps) {
  if (n < 2) throw InvalidInput("ring_zmod: modulus must be >= 2");
  check_size(n, caps, "ring_zmod");
  CodedRing c;
  c.count = n;
  c.add = [n](std::uint32_t a, std::uint32_t b) { return (a + b) % n; };
  c.mul = [n](std::uint32_t a, std::uint32_t b) { return static_cast<std::uint32_t>(std::uint64_t{a} * b % n); };
  c.label = [](std::uint32_t a) { return std::to_string(a); };
  RingInfo info;
  info.backend = RingBackend::zmod;
  info.name = "Z/" + std::to_string(n);
  return assemble(c, std::move(info), caps);
}

FiniteRing ring_gf(const FiniteField& f) {
  Caps caps;
  caps.max_ring_size = std::max<std::size_t>(caps.max_ring_size, f.size());
  CodedRing c;
  c.count = f.size();
  c.add = [&f](std::uint32_t a, std::uint32_t b) { return f.add(a, b); };
  c.mul = [&f](std::uint32_t a, std::uint32_t b) { return f.mul(a, b); };
  c.label = [&f](std::uint32_t a) { return f.label(a); };
  RingInfo info;
  info.backend = RingBackend::gf;
  info.name = f.name();
  info.field = std::make_shared<const FiniteField>(f);
  return assemble(c, std::move(info), caps);
}

FiniteRing ring_matrix(const FiniteField& f, unsigned m, const Caps& caps) {
  if (m == 0) throw InvalidInput("ring_matrix: dimension must be >= 1");
  const unsigned entries = m * m;
  std::uint64_t n = 1;
  for (unsigned i = 0; i < entries; ++i) {
    n *= f.size();
    check_size(n, caps, "ring_matrix");
  }
  const std::uint32_t q = f.size();
  auto decode = [q, entries](std::uint32_t code) {
    std::vector<std::uint32_t> e(entries);
    for (unsigned i = 0; i < entries; ++i, code /= q) e[i] = code % q;
    return e;
  };
  auto encode = [q, entries](const std::vector<std::uint32_t>& e) {
    std::uint32_t code = 0;
    for (unsigned i = entries; i-- > 0;) code = code * q + e[i];
    return code;
  };
  std::vector<std::uint32_t> ident(entries, 0);
  for (unsigned i = 0; i < m; ++i) ident[i * m + i] = 1;

  CodedRing c;
  c.count = static_cast<std::uint32_t>(n);
  c.one = encode(ident);
  c.add = [&](std::uint32_t a, std::uint32_t b) {
    auto x = decode(a), y = decode(b);
    for (unsigned i = 0; i < entries; ++i) x[i] = f.add(x[i], y[i]);
    return encode(x);
  };
  c.mul = [&](std::uint32_t a, std::uint32_t b) {
    const auto x = decode(a), y = decode(b);
    std::vector<std::uint32_t> z(entries, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) {
        std::uint32_t acc = 0;
        for (unsigned k = 0; k < m; ++k) acc = f.add(acc, f.mul(x[i * m + k], y[k * m + j]));
        z[i * m + j] = acc;
      }
    return encode(z);
  };
  c.label = [&](std::uint32_t a) { return matrix_label(f, decode(a), m); };
  c.coords = decode;
  RingInfo info;
  info.backend = RingBackend::matrix;
  info.name = "M" + std::to_string(m) + "(" + f.name() + ")";
  info.field = std::make_shared<const FiniteField>(f);
  info.matrix_dim = m;
  return assemble(c, std::move(info), caps);
}

FiniteRing ring_triangular(const FiniteField& delta, unsigned j, const Caps& caps) {
  const SubfieldEmbedding sub = subfield(delta, j);
  const std::uint32_t q = delta.size();
  const std::uint32_t qs = sub.field.size();
  const std::uint64_t n = std::uint64_t{q} * q * qs;
  check_size(n, caps, "ring_triangular");
  // code = a + q*b + q^2*c with a, b in delta and c a subfield index.
  struct Triple {
    std::uint32_t a, b, c;
  };
  auto decode = [q](std::uint32_t code) { return Triple{code % q, (code / q) % q, code / (q * q)}; };
  auto encode = [q](Triple t) { return t.a + q * t.b + q * q * t.c; };
  const auto& e = sub.embed;

  CodedRing c;
  c.count = static_cast<std::uint32_t>(n);
  c.one = encode({1, 0, 1});
  c.add = [&](std::uint32_t x, std::uint32_t y) {
    const Triple s = decode(x), t = decode(y);
    return encode({delta.add(s.a, t.a), delta.add(s.b, t.b), sub.field.add(s.c, t.c)});
  };
  c.mul = [&](std::uint32_t x, std::uint32_t y) {
    const Triple s = decode(x), t = decode(y);
    return encode({delta.mul(s.a, t.a), delta.add(delta.mul(s.a, t.b), delta.mul(s.b, e[t.c])),
                   sub.field.mul(s.c, t.c)});
  };
  c.coords = [&](std::uint32_t x) {
    const Triple s = decode(x);
    return std::vector<std::uint32_t>{s.a, s.b, 0, e[s.c]};
  };
  c.label = [&](std::uint32_t x) {
    const Triple s = decode(x);
    return matrix_label(delta, {s.a, s.b, 0, e[s.c]}, 2);
  };
  RingInfo info;
  info.backend = RingBackend::triangular;
  info.name = "triangular(" + delta.name() + "," + sub.field.name() + ")";
  info.field = std::make_shared<const FiniteField>(delta);
  info.matrix_dim = 2;
  info.sub_degree = j;
  info.sub_embed = e;
  return assemble(c, std::move(info), caps);
}

FiniteRing ring_product(const FiniteRing& a, const FiniteRing& b, const Caps& caps) {
  const std::uint64_t n = std::uint64_t{a.size()} * b.size();
  check_size(n, caps, "ring_product");
  const std::uint32_t nb = b.size();
  CodedRing c;
  c.count = static_cast<std::uint32_t>(n);
  c.one = 1 * nb + 1;
  c.add = [&](std::uint32_t x, std::uint32_t y) { return a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb); };
  c.mul = [&](std::uint32_t x, std::uint32_t y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); };
  c.label = [&](std::uint32_t x) { return "(" + a.label(x / nb) + "," + b.label(x % nb) + ")"; };
  RingInfo info;
  info.backend = RingBackend::product;
  info.name = a.name() + "x" + b.name();
  return assemble(c, std::move(info), caps);
}

// ---------------------------------------------------------------------------
// Polynomial quotients

namespace {

using Monomial = std::vector<unsigned>;  // exponent per variable
using Polynomial = std::map<Monomial, std::uint32_t>;

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

// Graded lex: higher total degree is larger, ties by lex on exponents.
bool grlex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars, std::uint32_t p)
      : s_(text), vars_(vars), p_(p) {}

  Polynomial parse() {
    Polynomial out;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      auto [mono, coef] = term();
      if (sign < 0) coef = (p_ - coef) % p_;
      out[mono] = (out[mono] + coef) % p_;
      if (out[mono] == 0) out.erase(mono);
      first = false;
      skip();
    }
    if (first) error("empty polynomial");
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) const {
    throw InvalidInput("poly_quot: cannot parse '" + std::string(s_) + "': " + msg);
  }
  std::uint64_t number() {
    std::uint64_t v = 0;
    bool any = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 1000000) error("number too large");
      ++pos_;
      any = true;
    }
    if (!any) error("expected number");
    return v;
  }
  std::pair<Monomial, std::uint32_t> term() {
    Monomial m(vars_.size(), 0);
    std::uint64_t coef = 1;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number() % p_;
      skip();
      need_factor = false;
      if (peek() == '*') {
        ++pos_;
        skip();
        need_factor = true;
      } else if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        return {m, static_cast<std::uint32_t>(coef)};
      }
    }
    while (true) {
      skip();
      if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        if (need_factor) error("expected variable");
        break;
      }
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) error("unknown variable '" + name + "'");
      skip();
      unsigned e = 1;
      if (peek() == '^') {
        ++pos_;
        skip();
        e = static_cast<unsigned>(number());
      }
      m[static_cast<std::size_t>(it - vars_.begin())] += e;
      skip();
      need_factor = false;
      if (peek() == '*') {
        ++pos_;
        need_factor = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(peek()))) continue;
      break;
    }
    return {m, static_cast<std::uint32_t>(coef)};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& vars_;
  std::uint32_t p_;
};

struct Rule {
  Monomial lhs;
  Polynomial rhs;
};

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

FiniteRing ring_poly_quot(std::uint32_t p, const std::vector<std::string>& vars,
                          const std::vector<std::string>& relations, const Caps& caps) {
  if (!is_prime(p)) throw InvalidInput("poly_quot: characteristic " + std::to_string(p) + " is not prime");
  if (vars.empty()) throw InvalidInput("poly_quot: at least one variable required");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty() || !std::isalpha(static_cast<unsigned char>(vars[i][0])))
      throw InvalidInput("poly_quot: invalid variable name '" + vars[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j]) throw InvalidInput("poly_quot: duplicate variable '" + vars[i] + "'");
  }
  const std::size_t nv = vars.size();

  std::vector<Rule> rules;
  for (const auto& rel : relations) {
    Polynomial f;
    const auto eq = rel.find('=');
    if (eq == std::string::npos) {
      f = PolyParser(rel, vars, p).parse();
    } else {
      f = PolyParser(std::string_view(rel).substr(0, eq), vars, p).parse();
      const auto g = PolyParser(std::string_view(rel).substr(eq + 1), vars, p).parse();
      for (const auto& [m, c] : g) {
        f[m] = (f[m] + p - c) % p;
        if (f[m] == 0) f.erase(m);
      }
    }
    if (f.empty()) continue;
    Monomial lead = f.begin()->first;
    for (const auto& [m, c] : f)
      if (grlex_less(lead, m)) lead = m;
    if (total_degree(lead) == 0) throw InvalidInput("poly_quot: relation '" + rel + "' collapses the ring");
    const std::uint32_t scale = inv_mod(f[lead], p);
    Rule r{lead, {}};
    for (const auto& [m, c] : f)
      if (m != lead) r.rhs[m] = static_cast<std::uint32_t>((p - std::uint64_t{c} * scale % p) % p);
    rules.push_back(std::move(r));
  }

  // Finite iff every variable has a pure-power leading monomial.
  for (std::size_t v = 0; v < nv; ++v) {
    bool bounded = false;
    for (const auto& r : rules) {
      bool pure = r.lhs[v] > 0;
      for (std::size_t w = 0; w < nv; ++w)
        if (w != v && r.lhs[w] != 0) pure = false;
      bounded = bounded || pure;
    }
    if (!bounded) throw InvalidInput("poly_quot: quotient is infinite (variable '" + vars[v] + "' is unbounded)");
  }

  // Standard monomials: not divisible by any leading monomial.
  std::vector<Monomial> basis;
  {
    std::vector<Monomial> frontier{Monomial(nv, 0)};
    std::map<Monomial, bool> seen;
    seen[frontier[0]] = true;
    while (!frontier.empty()) {
      Monomial m = frontier.back();
      frontier.pop_back();
      bool reducible = false;
      for (const auto& r : rules) reducible = reducible || divides(r.lhs, m);
      if (reducible) continue;
      basis.push_back(m);
      if (basis.size() > 32) throw CapExceeded("poly_quot: quotient dimension too large");
      for (std::size_t v = 0; v < nv; ++v) {
        Monomial next = m;
        ++next[v];
        if (!seen[next]) {
          seen[next] = true;
          frontier.push_back(next);
        }
      }
    }
  }
  std::sort(basis.begin(), basis.end(), grlex_less);
  const std::size_t dim = basis.size();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    n *= p;
    check_size(n, caps, "ring_poly_quot");
  }
  std::map<Monomial, std::size_t> basis_pos;
  for (std::size_t i = 0; i < dim; ++i) basis_pos[basis[i]] = i;

  auto normal_form = [&](Polynomial f) {
    for (std::size_t guard = 0;; ++guard) {
      if (guard > 100000) throw InvalidInput("poly_quot: rewriting does not terminate");
      // Largest reducible term first.
      const Monomial* target = nullptr;
      const Rule* rule = nullptr;
      for (const auto& [m, c] : f) {
        for (const auto& r : rules)
          if (divides(r.lhs, m) && (!target || grlex_less(*target, m))) {
            target = &m;
            rule = &r;
            break;
          }
      }
      if (!target) return f;
      const Monomial m = *target;
      const std::uint32_t c = f[m];
      f.erase(m);
      Monomial u(nv);
      for (std::size_t v = 0; v < nv; ++v) u[v] = m[v] - rule->lhs[v];
      for (const auto& [rm, rc] : rule->rhs) {
        Monomial t(nv);
        for (std::size_t v = 0; v < nv; ++v) t[v] = rm[v] + u[v];
        f[t] = static_cast<std::uint32_t>((f[t] + std::uint64_t{c} * rc) % p);
        if (f[t] == 0) f.erase(t);
      }
    }
  };

  // Structure constants: basis_i * basis_j as a coefficient vector.
  std::vector<std::vector<std::uint32_t>> structure(dim * dim, std::vector<std::uint32_t>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Monomial m(nv);
      for (std::size_t v = 0; v < nv; ++v) m[v] = basis[i][v] + basis[j][v];
      const auto nf = normal_form(Polynomial{{m, 1}});
      for (const auto& [t, c] : nf) structure[i * dim + j][basis_pos.at(t)] = c;
    }

  auto decode = [p, dim](std::uint32_t code) {
    std::vector<std::uint32_t> v(dim);
    for (std::size_t i = 0; i < dim; ++i, code /= p) v[i] = code % p;
    return v;
  };
  auto encode = [p, dim](const std::vector<std::uint32_t>& v) {
    std::uint32_t code = 0;
    for (std::size_t i = dim; i-- > 0;) code = code * p + v[i];
    return code;
  };
  auto mono_label = [&](const Monomial& m) {
    std::string s;
    for (std::size_t v = 0; v < nv; ++v) {
      if (!m[v]) continue;
      if (!s.empty()) s += "*";
      s += vars[v];
      if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s;
  };

  CodedRing c;
  c.count = static_cast<std::uint32_t>(n);
  c.one = 1;  // basis[0] is the constant monomial
  c.add = [&](std::uint32_t a, std::uint32_t b) {
    auto x = decode(a);
    const auto y = decode(b);
    for (std::size_t i = 0; i < dim; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  };
  c.mul = [&](std::uint32_t a, std::uint32_t b) {
    const auto x = decode(a), y = decode(b);
    std::vector<std::uint64_t> z(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (!y[j]) continue;
        const std::uint64_t xy = std::uint64_t{x[i]} * y[j] % p;
        const auto& s = structure[i * dim + j];
        for (std::size_t k = 0; k < dim; ++k) z[k] = (z[k] + xy * s[k]) % p;
      }
    }
    std::vector<std::uint32_t> out(dim);
    for (std::size_t k = 0; k < dim; ++k) out[k] = static_cast<std::uint32_t>(z[k]);
    return encode(out);
  };
  c.label = [&](std::uint32_t a) {
    const auto x = decode(a);
    std::string s;
    for (std::size_t i = dim; i-- > 0;) {
      if (!x[i]) continue;
      if (!s.empty()) s += "+";
      const std::string m = mono_label(basis[i]);
      if (m.empty())
        s += std::to_string(x[i]);
      else
        s += (x[i] == 1 ? "" : std::to_string(x[i])) + m;
    }
    return s.empty() ? std::string("0") : s;
  };

  RingInfo info;
  info.backend = RingBackend::poly_quot;
  std::string name = "F" + std::to_string(p) + "[";
  for (std::size_t v = 0; v < nv; ++v) name += (v ? "," : "") + vars[v];
  name += "]/(";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    std::string r;
    for (char ch : relations[i])
      if (!std::isspace(static_cast<unsigned char>(ch))) r += ch;
    name += (i ? "," : "") + r;
  }
  info.name = name + ")";
  try {
    return assemble(c, std::move(info), caps);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("poly_quot: relations do not define a ring (") + e.what() + ")");
  }
}

}  // namespace modgraph::algebra
