/** @file congruence.hpp
 *  @brief Quadratic-residue helpers and the mod-2 coefficient scans for the
 *         v = 2 and v = 4 families along arithmetic progressions pn + t.
 */
#ifndef PARTFAM_CONGRUENCE_HPP
#define PARTFAM_CONGRUENCE_HPP

#include <vector>

#include "partfam/partition.hpp"

namespace partfam {

/// Trial-division primality test (desk scale).
bool is_prime(Int n);

/// Inverse of a modulo p, in [1, p). Rejects gcd(a, p) != 1.
Int mod_inverse(Int a, Int p);

/// Legendre symbol for an odd prime p: 0 when p | x, +1 for nonzero squares,
/// -1 for nonresidues. Rejects non-prime or even p.
int legendre(Int x, Int p);

/// The two congruence families: b_{2,r,a,m} with the 24ta^{-1} + 1 criterion
/// and b_{4,r,a,m} with the 8ta^{-1} + 1 criterion.
enum class CongruenceFamily { v2, v4 };

Int family_v(CongruenceFamily family);
Int family_multiplier(CongruenceFamily family);

/// Residues t in [0, p) for which multiplier * t * a^{-1} + 1 is a quadratic
/// nonresidue mod p (residues where it vanishes are excluded: 0 is a square).
/// Requires p > 3 prime (v2) resp. p >= 5 prime (v4) and gcd(a, p) = 1.
std::vector<Int> eligible_residues(CongruenceFamily family, Int p, Int a);

struct CongruenceViolation {
    Int index;   // pn + t
    int parity;  // coefficient mod 2 (1 for any violation)
};

struct CongruenceReport {
    CongruenceFamily family;
    Int p, r, a, m;
    Int truncation;
    std::vector<Int> eligible;
    Int checked = 0;  // (n, t) pairs examined
    std::vector<CongruenceViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks that every coefficient of the v-family series at indices congruent
/// to an eligible t (mod p) is even, for all indices <= truncation.
CongruenceReport scan_congruence(CongruenceFamily family, Int p, Int r, Int a,
                                 Int m, Int truncation);

} // namespace partfam

#endif
