#include "kissing/finite_field.hpp"

#include <stdexcept>

namespace kissing {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, base = a % p;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1u) r = r * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b must be non-zero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inverse_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t value, std::uint32_t p, std::uint32_t len) {
  Poly c(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    c[i] = value % p;
    value /= p;
  }
  return c;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return static_cast<std::uint32_t>(r);
}

// Trial division by every monic polynomial of degree 1..m/2.
bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t deg = 1; deg <= m / 2; ++deg) {
    const std::uint32_t count = ipow(p, deg);
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = decode(low, p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);

  for (std::uint32_t low = 0; low < q_; ++low) {
    Poly f = decode(low, p, m);
    f.push_back(1);
    if (irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  // Multiplication by the candidate generator via polynomial arithmetic.
  auto poly_mul = [&](std::uint32_t a, std::uint32_t b) {
    const Poly pa = decode(a, p, m), pb = decode(b, p, m);
    Poly prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
    Poly r = m == 1 ? Poly{static_cast<std::uint32_t>(prod[0] % p)} : poly_mod(prod, modulus_, p);
    std::uint32_t v = 0;
    for (std::size_t i = r.size(); i-- > 0;) v = v * p + r[i];
    return v;
  };

  exp_.assign(2 * (q_ - 1) + 1, 0);
  log_.assign(q_, 0);
  for (Element g = 1; g < q_; ++g) {
    Element x = 1;
    std::uint32_t k = 0;
    bool full = true;
    do {
      exp_[k] = x;
      x = poly_mul(x, g);
      ++k;
      if (x == 1 && k < q_ - 1) {
        full = false;
        break;
      }
    } while (k < q_ - 1);
    if (full) {
      primitive_ = g;
      break;
    }
  }
  for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
  for (std::uint32_t k = q_ - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (q_ - 1)];
}

FiniteField FiniteField::of_order(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("field order must be a prime power >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return FiniteField(p, m);
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return (a + b) % p_;
  Element r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return (p_ - a) % p_;
  Element r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::size_t>((std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1))];
}

std::string FiniteField::describe() const {
  std::string s = "GF(" + std::to_string(p_);
  if (m_ > 1) s += "^" + std::to_string(m_);
  s += ")";
  return s;
}

}  // namespace kissing
