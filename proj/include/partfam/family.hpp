/** @file family.hpp
 *  @brief Parameter tuple (p, r, a, m, v) shared by the multiplicity-side and
 *         part-side partition families and their generating functions.
 */
#ifndef PARTFAM_FAMILY_HPP
#define PARTFAM_FAMILY_HPP

#include <optional>

#include "partfam/partition.hpp"

namespace partfam {

/// Validated on construction: p >= 2, r >= 0, a >= 1 with gcd(a, p) = 1,
/// m >= 2 when bounded (std::nullopt marks the unbounded family), and
/// 1 <= v <= p. v defaults to p.
class FamilyParams {
public:
    FamilyParams(Int p, Int r, Int a, std::optional<Int> m,
                 std::optional<Int> v = std::nullopt);

    Int p() const { return p_; }
    Int r() const { return r_; }
    Int a() const { return a_; }
    std::optional<Int> m() const { return m_; }
    Int v() const { return v_; }

    bool bounded() const { return m_.has_value(); }

    /// pr + a
    Int base() const { return p_ * r_ + a_; }
    /// p(pr + a) = p^2 r + pa
    Int modulus() const { return p_ * base(); }

private:
    Int p_, r_, a_;
    std::optional<Int> m_;
    Int v_;
};

} // namespace partfam

#endif
