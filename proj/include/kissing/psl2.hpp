#pragma once

#include <cstdint>

#include "kissing/finite_field.hpp"
#include "kissing/permutation.hpp"

namespace kissing {

/// PSL(2, q) acting by Moebius maps on the projective line GF(q) u {inf}.
///
/// Point k < q is the field element with canonical encoding k; point q is
/// infinity. Generators, in this order:
///   x -> x + 1,
///   x -> mu x   (mu = lambda^2 for odd q, lambda for even q; lambda primitive),
///   x -> -1/x.
/// q must be an odd prime or 2^m with m <= 16.
PermutationGroup psl2_action(std::uint32_t q);

/// q (q^2 - 1) / gcd(2, q - 1).
std::uint64_t psl2_order(std::uint64_t q) noexcept;

/// Image of a projective point under x -> (a x + b) / (c x + d) with
/// ad - bc != 0; used as a cross-check for the generator tables.
std::uint32_t moebius_image(const FiniteField& field, FiniteField::Element a, FiniteField::Element b,
                            FiniteField::Element c, FiniteField::Element d, std::uint32_t point);

}  // namespace kissing
