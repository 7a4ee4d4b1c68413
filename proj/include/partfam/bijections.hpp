/** @file bijections.hpp
 *  @brief Explicit weight-preserving maps between the partition classes, and
 *         an exhaustive checker that certifies bijectivity on a weight range.
 *
 *  All maps act block-by-block on the multiplicity notation and combine the
 *  per-block images by multiset union. Domain membership is checked up front;
 *  a violation raises std::domain_error naming the offending block.
 */
#ifndef PARTFAM_BIJECTIONS_HPP
#define PARTFAM_BIJECTIONS_HPP

#include <optional>
#include <vector>

#include "partfam/classes.hpp"
#include "partfam/family.hpp"
#include "partfam/partition.hpp"

namespace partfam {

/// A(n, r) -> C(n, r), r >= 1.
Partition beta_forward(const Partition& lambda, Int r);
/// C(n, r) -> A(n, r).
Partition beta_inverse(const Partition& mu, Int r);

/// E -> B for bounded m and v = p.
Partition gamma_forward(const Partition& mu, const FamilyParams& params);
/// B -> E for bounded m and v = p.
Partition gamma_inverse(const Partition& lambda, const FamilyParams& params);

/// Partitions with all multiplicities <= p - 1  ->  partitions with no part
/// divisible by p. Each part u * p^t with multiplicity d contributes d * p^t
/// copies of u.
Partition glaisher_regularize(const Partition& delta, Int p);
/// Inverse direction: multiplicity c = sum d_k p^k sends part u to parts
/// p^k * u with multiplicity d_k.
Partition glaisher_distinctify(const Partition& delta, Int p);

/// B -> E for the unbounded family (v = p).
Partition sellers_fu_forward(const Partition& lambda, const FamilyParams& params);
/// E -> B for the unbounded family (v = p).
Partition sellers_fu_inverse(const Partition& mu, const FamilyParams& params);

enum class BijectionKind { beta, gamma, sellers_fu };

enum class FailureKind {
    weight_changed,
    image_not_in_codomain,
    round_trip_failed,
    collision,
};

const char* to_string(FailureKind kind);

struct BijectionViolation {
    Int n;
    Partition input;
    FailureKind failure;
};

struct BijectionReport {
    BijectionKind kind;
    std::optional<Int> beta_r;           // set for beta
    std::optional<FamilyParams> family;  // set for gamma / sellers_fu
    Int n_lo = 0;
    Int n_hi = 0;
    Int checked = 0;  // domain partitions mapped forward
    std::vector<BijectionViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// For every n <= n_max: maps the whole domain class forward (checking weight
/// preservation, codomain membership, injectivity and the inverse round trip)
/// and the whole codomain class backward (checking the forward round trip,
/// which forces surjectivity). Failures become report entries, not errors.
BijectionReport verify_beta(Int r, Int n_max);
BijectionReport verify_gamma(const FamilyParams& params, Int n_max);
BijectionReport verify_sellers_fu(const FamilyParams& params, Int n_max);

} // namespace partfam

#endif
