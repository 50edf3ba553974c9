#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qdissect/series.hpp"

namespace qdissect {

/// One factor (s1 q^a, s2 q^(m-a); q^m)_inf ^ power of an infinite product,
/// or, when `single` is set, the Euler factor (q^m; q^m)_inf ^ power.
struct PochFactor {
    int sign1 = 1;
    int sign2 = 1;
    std::int64_t a = 1;
    std::int64_t m = 2;
    unsigned power = 1;
    bool single = false;

    static PochFactor pair(int sign1, int sign2, std::int64_t a, std::int64_t m, unsigned power = 1);
    static PochFactor euler(std::int64_t m, unsigned power = 1);

    bool matched_signs() const { return sign1 == sign2; }
    /// Throws std::invalid_argument describing the first violated invariant.
    void validate() const;

    auto operator<=>(const PochFactor &) const = default;
};

struct ProductSpec {
    std::vector<PochFactor> factors;

    void validate() const;
    /// Each pair factor written with a <= m-a (swapping its signs with it),
    /// then factors sorted. Two specs denote the same product iff their
    /// normal forms are equal.
    ProductSpec normalized() const;

    auto operator<=>(const ProductSpec &) const = default;
};

/// (sign q^a; q^m)_inf = prod_{k>=0} (1 - sign q^(a+km)), exact to order N.
/// Throws std::invalid_argument("invalid Pochhammer parameters") unless
/// a >= 1 and m >= 1.
Series poch_expand(int sign, std::int64_t a, std::int64_t m, Exponent order);

Series product_expand(const ProductSpec &spec, Exponent order);

/// Surface syntax, e.g. "(q,q^4;q^5) (q^6,q^9;q^15)^2". Euler factors print
/// as "(q^m;q^m)", which the parser does not accept.
std::string to_string(const PochFactor &f);
std::string to_string(const ProductSpec &spec);

namespace detail {
/// In place: c *= (sign q^a; q^m)_inf truncated to c.size()-1.
void multiply_pochhammer(std::vector<Coeff> &c, int sign, std::int64_t a, std::int64_t m);
} // namespace detail

} // namespace qdissect
