/** @file numeric.hpp
 *  @brief Small exact-arithmetic helpers: valuations, base expansions,
 *         modular inverses.
 */
#ifndef PARTFAM_NUMERIC_HPP
#define PARTFAM_NUMERIC_HPP

#include <vector>

#include "partfam/partition.hpp"

namespace partfam {

/// Largest i with base^i dividing j. Requires base >= 2 and j >= 1
/// (the valuation of 0 is unbounded).
Int ord(Int base, Int j);

/// Digit vector of a non-negative integer, least significant digit first.
/// No trailing zero digit is stored, so value 0 has an empty digit list.
struct BaseExpansion {
    Int base = 2;
    std::vector<Int> digits;

    Int digit(std::size_t k) const { return k < digits.size() ? digits[k] : 0; }
    Int reconstruct() const;
};

BaseExpansion base_expansion(Int value, Int base);

/// Inverse of a modulo n via extended Euclid, result in [1, n).
/// Rejects gcd(a, n) != 1.
Int inverse_mod(Int a, Int n);

} // namespace partfam

#endif
