/** @file classes.hpp
 *  @brief Membership predicates for the four partition classes under study.
 *
 *  A(n, r): every odd multiplicity is >= 2r + 1.
 *  C(n, r): every odd part is congruent to 2r + 1 (mod 4r + 2).
 *  B(p, r, a, m, v): every multiplicity equals j(pr + a) + ip for some
 *      0 <= j <= v - 1 and 0 <= i <= m - 1 (i unbounded above when m is
 *      unbounded).
 *  E(p, r, a, m): every part is divisible by p but not by pm, or lies in a
 *      residue class -s(pr + a) (mod p^2 r + pa) for some 1 <= s <= p - 1.
 */
#ifndef PARTFAM_CLASSES_HPP
#define PARTFAM_CLASSES_HPP

#include "partfam/family.hpp"
#include "partfam/partition.hpp"

namespace partfam {

/// Requires r >= 1. Vacuously true for the empty partition.
bool satisfies_A(const Partition& lambda, Int r);

/// Requires r >= 1. Even parts are unrestricted.
bool satisfies_C(const Partition& lambda, Int r);

/// Multiplicity test for a single value (c >= 1).
bool mult_allowed_in_B(Int c, const FamilyParams& params);
bool satisfies_B(const Partition& lambda, const FamilyParams& params);

/// Part test for a single value (x >= 1).
bool part_allowed_in_E(Int x, const FamilyParams& params);
bool satisfies_E(const Partition& lambda, const FamilyParams& params);

} // namespace partfam

#endif
