#include "kissing/psl2.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kissing {

std::uint64_t psl2_order(std::uint64_t q) noexcept {
  const std::uint64_t g = (q % 2 == 1) ? 2 : 1;
  return q * (q * q - 1) / g;
}

std::uint32_t moebius_image(const FiniteField& f, FiniteField::Element a, FiniteField::Element b,
                            FiniteField::Element c, FiniteField::Element d, std::uint32_t point) {
  const std::uint32_t inf = f.order();
  if (point == inf) return c == 0 ? inf : f.mul(a, f.inv(c));
  const auto num = f.add(f.mul(a, point), b);
  const auto den = f.add(f.mul(c, point), d);
  if (den == 0) return inf;
  return f.mul(num, f.inv(den));
}

PermutationGroup psl2_action(std::uint32_t q) {
  bool valid = false;
  if (q >= 3 && q % 2 == 1) valid = is_prime(q);
  if (q % 2 == 0 && q >= 2 && (q & (q - 1)) == 0 && q <= (1u << 16)) valid = true;
  if (!valid) throw std::invalid_argument("psl2_action: q must be an odd prime or 2^m (m <= 16), got " + std::to_string(q));

  const FiniteField field = FiniteField::of_order(q);
  const auto lambda = field.primitive_element();
  const auto mu = (q % 2 == 1) ? field.mul(lambda, lambda) : lambda;
  const auto one = FiniteField::Element{1};
  const auto minus_one = field.neg(one);

  auto table = [&](FiniteField::Element a, FiniteField::Element b, FiniteField::Element c, FiniteField::Element d) {
    std::vector<std::uint32_t> images(q + 1);
    for (std::uint32_t x = 0; x <= q; ++x) images[x] = moebius_image(field, a, b, c, d, x);
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  gens.push_back(table(one, one, 0, one));        // x + 1
  gens.push_back(table(mu, 0, 0, one));           // mu x
  gens.push_back(table(0, minus_one, one, 0));    // -1/x
  return PermutationGroup(q + 1, std::move(gens));
}

}  // namespace kissing
