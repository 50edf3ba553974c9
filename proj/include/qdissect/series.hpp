#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qdissect {

using Coeff = mpz_class;
using Exponent = std::int64_t;

/// Truncated Laurent series with exact integer coefficients.
///
/// Coefficients are stored densely for every exponent in [lo, order]. The
/// value is known exactly up to `order`; nothing is known above it. Nothing
/// lives below `lo`, so those coefficients are zero.
class Series {
public:
    /// The zero series, exact to order 0.
    Series();
    /// The zero series on [lo, order].
    Series(Exponent lo, Exponent order);
    /// coeffs[i] is the coefficient of q^(lo+i). Entries past `order` are
    /// dropped, missing entries are zero.
    Series(Exponent lo, Exponent order, std::vector<Coeff> coeffs);

    static Series zero(Exponent order);
    static Series one(Exponent order);
    static Series monomial(const Coeff &c, Exponent e, Exponent order);

    Exponent lo() const { return lo_; }
    Exponent order() const { return order_; }

    /// Throws std::out_of_range for e > order().
    Coeff coeff(Exponent e) const;
    const std::vector<Coeff> &dense() const { return coeffs_; }

    /// Least exponent with a nonzero coefficient.
    std::optional<Exponent> valuation() const;
    std::vector<std::pair<Exponent, Coeff>> terms() const;
    bool is_zero() const;

    Series truncate(Exponent order) const;
    /// Multiplication by q^k.
    Series shifted(Exponent k) const;
    Series scaled(const Coeff &c) const;

    /// Agreement on [min lo, min order]; below its own lo a series is zero.
    friend bool operator==(const Series &x, const Series &y);

private:
    Exponent lo_;
    Exponent order_;
    std::vector<Coeff> coeffs_;
};

Series series_add(const Series &x, const Series &y);
Series series_sub(const Series &x, const Series &y);
Series series_mul(const Series &x, const Series &y);

/// Multiplicative inverse to order N. The lowest nonzero coefficient must be
/// +1 or -1; otherwise throws std::domain_error("non-invertible series").
Series series_inverse(const Series &x, Exponent order);

Series series_pow(const Series &x, unsigned k);

/// T_{t,r}: keeps the coefficients at exponents congruent to r mod t, in
/// place. Requires t >= 1 and 0 <= r < t.
Series dissect(const Series &h, std::int64_t t, std::int64_t r);

/// True iff every nonzero coefficient sits at an exponent divisible by t.
bool support_modulus_check(const Series &h, std::int64_t t);

inline Series operator+(const Series &x, const Series &y) { return series_add(x, y); }
inline Series operator-(const Series &x, const Series &y) { return series_sub(x, y); }
inline Series operator*(const Series &x, const Series &y) { return series_mul(x, y); }
inline Series operator-(const Series &x) { return x.scaled(-1); }

/// "1 - q + 2*q^5 + O(q^13)"
std::string to_string(const Series &s);

/// Floor of a/b for b > 0 and any sign of a.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace qdissect
