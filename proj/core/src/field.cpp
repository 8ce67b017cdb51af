#include "csec/field.hpp"

#include <map>

#include "csec/error.hpp"

namespace csec {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) throw InvalidArgument("field order must be a prime power, got " + std::to_string(q));
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t f = 0;
  for (std::uint32_t r = q; r > 1; r /= p) {
    if (r % p) throw InvalidArgument("field order must be a prime power, got " + std::to_string(q));
    ++f;
  }
  return {p, f};
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}

// remainder of a modulo m over GF(p); m nonzero
Poly poly_mod(Poly a, Poly m, std::uint32_t p) {
  trim(a);
  trim(m);
  std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t x, std::uint32_t p, std::uint32_t f) {
  Poly d(f);
  for (std::uint32_t i = 0; i < f; ++i, x /= p) d[i] = x % p;
  return d;
}

std::uint32_t encode(const Poly& d, std::uint32_t p) {
  std::uint32_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly a = poly;
  trim(a);
  if (a.size() < 2) return false;
  const std::size_t deg = a.size() - 1;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly m = decode(static_cast<std::uint32_t>(c), p, static_cast<std::uint32_t>(d));
      m.push_back(1);
      if (poly_mod(a, m, p).empty()) return false;
    }
  }
  return true;
}

struct FiniteField::Tables {
  std::uint32_t p = 0, f = 0, q = 0;
  Poly modulus;
  std::vector<Element> exp;  // exp[i] = g^i, i < q-1
  std::vector<std::uint32_t> log;
  Element primitive = 1;

  Element slow_mul(Element a, Element b) const {
    Poly x = decode(a, p, f), y = decode(b, p, f);
    Poly prod(2 * f, 0);
    for (std::uint32_t i = 0; i < f; ++i)
      for (std::uint32_t j = 0; j < f; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    Poly r = poly_mod(prod, modulus, p);
    r.resize(f, 0);
    return encode(r, p);
  }

  Element slow_pow(Element a, std::uint64_t e) const {
    Element r = 1;
    for (; e; e >>= 1, a = slow_mul(a, a))
      if (e & 1) r = slow_mul(r, a);
    return r;
  }
};

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t f) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (f < 1) throw InvalidArgument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxSize) throw InvalidArgument("field order exceeds 2^16");
  }
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->f = f;
  t->q = static_cast<std::uint32_t>(q);

  static const std::map<std::uint32_t, Poly> pinned = {
      {4, {1, 1, 1}}, {8, {1, 1, 0, 1}}, {9, {1, 0, 1}}, {16, {1, 1, 0, 0, 1}}};
  if (f == 1) {
    t->modulus = {0, 1};
  } else if (auto it = pinned.find(t->q); it != pinned.end()) {
    t->modulus = it->second;
  } else {
    for (std::uint32_t c = 0; c < t->q; ++c) {
      Poly m = decode(c, p, f);
      m.push_back(1);
      if (is_irreducible(m, p)) {
        t->modulus = std::move(m);
        break;
      }
    }
  }
  if (!is_irreducible(t->modulus, p))
    throw InvalidArgument("internal error: field modulus is not irreducible");

  // primitive element: least g with g^((q-1)/r) != 1 for every prime r | q-1
  const std::uint64_t m = q - 1;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t r = 2, n = m; n > 1; ++r)
    if (n % r == 0) {
      primes.push_back(r);
      while (n % r == 0) n /= r;
    }
  for (Element g = 1; g < t->q; ++g) {
    bool ok = true;
    for (auto r : primes) ok = ok && t->slow_pow(g, m / r) != 1;
    if (ok) {
      t->primitive = g;
      break;
    }
  }
  t->exp.resize(m);
  t->log.assign(t->q, 0);
  Element x = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    t->exp[i] = x;
    t->log[x] = static_cast<std::uint32_t>(i);
    x = t->slow_mul(x, t->primitive);
  }
  if (x != 1) throw InvalidArgument("internal error: primitive element has wrong order");
  return FiniteField(std::move(t));
}

FiniteField FiniteField::of_order(std::uint32_t q) {
  auto [p, f] = prime_power(q);
  return make(p, f);
}

std::uint32_t FiniteField::characteristic() const noexcept { return tables_->p; }
std::uint32_t FiniteField::degree() const noexcept { return tables_->f; }
std::uint32_t FiniteField::size() const noexcept { return tables_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const noexcept { return tables_->modulus; }
FiniteField::Element FiniteField::primitive_element() const noexcept { return tables_->primitive; }

FiniteField::Element FiniteField::add(Element a, Element b) const {
  const auto p = tables_->p;
  if (tables_->f == 1) return (a + b) % p;
  Element r = 0, place = 1;
  for (std::uint32_t i = 0; i < tables_->f; ++i, a /= p, b /= p, place *= p) r += ((a % p + b % p) % p) * place;
  return r;
}

FiniteField::Element FiniteField::neg(Element a) const {
  const auto p = tables_->p;
  Element r = 0, place = 1;
  for (std::uint32_t i = 0; i < tables_->f; ++i, a /= p, place *= p) r += ((p - a % p) % p) * place;
  return r;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  const auto& t = *tables_;
  return t.exp[(static_cast<std::uint64_t>(t.log[a]) + t.log[b]) % (t.q - 1)];
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw InvalidArgument("zero has no inverse");
  const auto& t = *tables_;
  return t.exp[(t.q - 1 - t.log[a]) % (t.q - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto& t = *tables_;
  return t.exp[static_cast<std::uint64_t>(t.log[a]) * (e % (t.q - 1)) % (t.q - 1)];
}

std::uint64_t FiniteField::multiplicative_order(Element a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t n = 1;
  for (Element x = a; x != 1; x = mul(x, a)) ++n;
  return n;
}

}  // namespace csec
