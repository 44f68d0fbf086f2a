#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace kissing {

/// GF(p^m) for q = p^m <= 2^20, table driven.
///
/// Elements are the integers [0, q): the residue c_0 + c_1 x + ... +
/// c_{m-1} x^{m-1} is encoded as c_0 + c_1 p + ... + c_{m-1} p^{m-1}. The
/// modulus is the lexicographically smallest monic irreducible polynomial of
/// degree m (smallest encoding of its lower coefficients); for m = 1 that is
/// x itself, i.e. plain arithmetic mod p. The primitive element is the
/// smallest encoding whose multiplicative order is q - 1.
class FiniteField {
public:
  using Element = std::uint32_t;
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  FiniteField(std::uint32_t p, std::uint32_t m);
  /// Parses q = p^m; throws if q is not a prime power.
  static FiniteField of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Coefficients c_0..c_m of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Element primitive_element() const noexcept { return primitive_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws std::domain_error for 0.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  bool is_square(Element a) const { return a == 0 || p_ == 2 || log_[a] % 2 == 0; }

  std::string describe() const;

private:
  std::uint32_t p_, m_, q_;
  std::vector<std::uint32_t> modulus_;
  Element primitive_ = 1;
  std::vector<Element> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
};

/// Field element bound to its field, for readable algebra in tests and tools.
class FieldElement {
public:
  FieldElement(const FiniteField& field, FiniteField::Element value) : field_(&field), value_(value) {}
  FiniteField::Element value() const noexcept { return value_; }

  friend FieldElement operator+(FieldElement a, FieldElement b) { return {*a.field_, a.field_->add(a.value_, b.value_)}; }
  friend FieldElement operator-(FieldElement a, FieldElement b) { return {*a.field_, a.field_->sub(a.value_, b.value_)}; }
  friend FieldElement operator*(FieldElement a, FieldElement b) { return {*a.field_, a.field_->mul(a.value_, b.value_)}; }
  FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
  FieldElement inverse() const { return {*field_, field_->inv(value_)}; }
  friend bool operator==(FieldElement a, FieldElement b) { return a.value_ == b.value_; }

private:
  const FiniteField* field_;
  FiniteField::Element value_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace kissing
