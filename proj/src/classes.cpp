#include "partfam/classes.hpp"

#include <numeric>
#include <stdexcept>

#include "partfam/numeric.hpp"

namespace partfam {

Int ord(Int base, Int j) {
    if (base < 2)
        throw std::domain_error("ord: base must be >= 2");
    if (j < 1)
        throw std::domain_error("ord: argument must be >= 1");
    Int i = 0;
    while (j % base == 0) {
        j /= base;
        ++i;
    }
    return i;
}

Int BaseExpansion::reconstruct() const {
    Int value = 0;
    Int power = 1;
    for (Int d : digits) {
        value += d * power;
        power *= base;
    }
    return value;
}

BaseExpansion base_expansion(Int value, Int base) {
    if (base < 2)
        throw std::domain_error("base_expansion: base must be >= 2");
    if (value < 0)
        throw std::domain_error("base_expansion: value must be >= 0");
    BaseExpansion out{base, {}};
    while (value > 0) {
        out.digits.push_back(value % base);
        value /= base;
    }
    return out;
}

Int inverse_mod(Int a, Int n) {
    if (n < 2)
        throw std::domain_error("inverse_mod: modulus must be >= 2");
    a %= n;
    if (a < 0)
        a += n;
    // extended Euclid on (a, n)
    Int old_r = a, r = n;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw std::domain_error("inverse_mod: arguments are not coprime");
    return ((old_s % n) + n) % n;
}

FamilyParams::FamilyParams(Int p, Int r, Int a, std::optional<Int> m,
                           std::optional<Int> v)
    : p_(p), r_(r), a_(a), m_(m), v_(v.value_or(p)) {
    if (p_ < 2)
        throw std::domain_error("family: p must be >= 2");
    if (r_ < 0)
        throw std::domain_error("family: r must be >= 0");
    if (a_ < 1)
        throw std::domain_error("family: a must be >= 1");
    if (std::gcd(a_, p_) != 1)
        throw std::domain_error("family: a and p must be coprime");
    if (m_ && *m_ < 2)
        throw std::domain_error("family: m must be >= 2 or unbounded");
    if (v_ < 1 || v_ > p_)
        throw std::domain_error("family: v must satisfy 1 <= v <= p");
}

bool satisfies_A(const Partition& lambda, Int r) {
    if (r < 1)
        throw std::domain_error("satisfies_A: r must be >= 1");
    for (const auto& b : lambda.blocks())
        if (b.mult % 2 == 1 && b.mult < 2 * r + 1)
            return false;
    return true;
}

bool satisfies_C(const Partition& lambda, Int r) {
    if (r < 1)
        throw std::domain_error("satisfies_C: r must be >= 1");
    for (const auto& b : lambda.blocks())
        if (b.part % 2 == 1 && b.part % (4 * r + 2) != 2 * r + 1)
            return false;
    return true;
}

bool mult_allowed_in_B(Int c, const FamilyParams& params) {
    // c = j(pr+a) + ip with the residue of c mod p pinning j uniquely.
    const Int p = params.p();
    const Int j = (c % p) * inverse_mod(params.a(), p) % p;
    if (j > params.v() - 1)
        return false;
    const Int rest = c - j * params.base();
    if (rest < 0)
        return false;
    if (params.bounded() && rest / p > *params.m() - 1)
        return false;
    return true;
}

bool satisfies_B(const Partition& lambda, const FamilyParams& params) {
    for (const auto& b : lambda.blocks())
        if (!mult_allowed_in_B(b.mult, params))
            return false;
    return true;
}

bool part_allowed_in_E(Int x, const FamilyParams& params) {
    const Int p = params.p();
    if (x % p == 0)
        return !params.bounded() || x % (p * *params.m()) != 0;
    // -s(pr+a) mod p(pr+a) lies in [1, modulus) for every s in [1, p).
    const Int mod = params.modulus();
    for (Int s = 1; s <= p - 1; ++s)
        if (x % mod == mod - s * params.base())
            return true;
    return false;
}

bool satisfies_E(const Partition& lambda, const FamilyParams& params) {
    for (const auto& b : lambda.blocks())
        if (!part_allowed_in_E(b.part, params))
            return false;
    return true;
}

} // namespace partfam
