/** @file series.hpp
 *  @brief Truncated formal power series in q with exact integer coefficients,
 *         the product generating functions of the partition families, and the
 *         scaled pentagonal recurrence checker.
 */
#ifndef PARTFAM_SERIES_HPP
#define PARTFAM_SERIES_HPP

#include <gmpxx.h>

#include <vector>

#include "partfam/family.hpp"
#include "partfam/partition.hpp"

namespace partfam {

/// Coefficients c_0..c_N of a formal power series truncated at degree N.
/// Coefficients are exact unbounded integers.
class TruncatedSeries {
public:
    /// The zero series truncated at N (N + 1 coefficients).
    explicit TruncatedSeries(Int truncation);

    Int truncation() const { return static_cast<Int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(Int n) const;
    mpz_class& coeff(Int n);
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// Copy truncated down to min(truncation(), n).
    TruncatedSeries prefix(Int n) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<mpz_class> coeffs_;
};

/// The constant series 1.
TruncatedSeries series_one(Int truncation);

/// Exact multiplication / division by (1 - q^k), k >= 1. Mutually inverse.
TruncatedSeries mul_one_minus_qk(TruncatedSeries s, Int k);
TruncatedSeries div_one_minus_qk(TruncatedSeries s, Int k);

/// Coefficientwise equality up to the smaller truncation.
bool agree_on_common_prefix(const TruncatedSeries& a, const TruncatedSeries& b);

/// prod (1 - q^{v(pr+a)n}) (1 - q^{pmn}) / ((1 - q^{(pr+a)n}) (1 - q^{pn})).
/// Coefficient n counts the multiplicity-constrained family members of weight
/// n. Requires bounded m; see gf_b_unbounded for the limit family.
TruncatedSeries gf_b(const FamilyParams& params, Int truncation);
/// Same product without the (1 - q^{pmn}) factor; requires unbounded m.
TruncatedSeries gf_b_unbounded(const FamilyParams& params, Int truncation);

/// Product of 1 / (1 - q^k) over the allowed part sizes k: the classes
/// -s(pr+a) (mod p^2 r + pa) for s = 1..p-1 plus the parts divisible by p but
/// not by pm. Requires v = p and bounded m.
TruncatedSeries gf_e(const FamilyParams& params, Int truncation);
/// Unbounded-m variant (every multiple of p is an allowed part).
TruncatedSeries gf_e_unbounded(const FamilyParams& params, Int truncation);

/// prod 1 / (1 - q^j): coefficient n is the partition count p(n).
TruncatedSeries partition_numbers(Int truncation);

/// prod (1 - q^j): +-1 at the generalized pentagonal numbers j(3j +- 1)/2
/// with sign (-1)^j, zero elsewhere.
TruncatedSeries pentagonal_expansion(Int truncation);

struct SignedExponent {
    Int exponent;
    int sign;  // (-1)^{j+1} for the j-th pentagonal pair
    friend bool operator==(const SignedExponent&, const SignedExponent&) = default;
};

/// All scale * j(3j +- 1)/2 <= limit for j >= 1, sorted ascending.
std::vector<SignedExponent> scaled_pentagonals(Int scale, Int limit);

struct RecurrenceViolation {
    Int n;
    mpz_class lhs;
    mpz_class rhs;
};

/// Result of checking c_n = sum_j sign_j * c_{n - w(j)} with
/// w(j) = (pr + a) j(3j +- 1)/2 over all n <= N not divisible by gcd(v, p).
struct RecurrenceReport {
    FamilyParams params;
    Int truncation;
    Int g;  // gcd(v, p)
    std::vector<Int> tested;
    std::vector<RecurrenceViolation> violations;

    bool vacuous() const { return tested.empty(); }
    bool ok() const { return violations.empty(); }
};

RecurrenceReport verify_recurrence(const FamilyParams& params, Int truncation);

} // namespace partfam

#endif
