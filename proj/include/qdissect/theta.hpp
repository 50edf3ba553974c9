#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qdissect/series.hpp"

namespace qdissect {

/// The signed monomial sign * q^exp. Exponents may be zero or negative.
struct Monomial {
    int sign = 1;
    std::int64_t exp = 0;

    Monomial pow(unsigned k) const;
    bool is_one() const { return sign == 1 && exp == 0; }

    friend Monomial operator*(Monomial x, Monomial y) { return {x.sign * y.sign, x.exp + y.exp}; }
    friend Monomial operator/(Monomial x, Monomial y) { return {x.sign * y.sign, x.exp - y.exp}; }
    auto operator<=>(const Monomial &) const = default;
};

inline Monomial q_pow(std::int64_t e, int sign = 1) { return {sign, e}; }

/// Ramanujan's f(a, b) = sum_k a^(k(k+1)/2) b^(k(k-1)/2). Valid when
/// a.exp + b.exp > 0, the formal counterpart of |ab| < 1.
struct ThetaSpec {
    Monomial a;
    Monomial b;

    bool valid() const { return a.exp + b.exp > 0; }
    /// Throws std::invalid_argument("divergent theta spec").
    void validate() const;

    auto operator<=>(const ThetaSpec &) const = default;
};

inline ThetaSpec theta(Monomial a, Monomial b) { return {a, b}; }
/// phi(q^k) = f(q^k, q^k)
inline ThetaSpec phi(std::int64_t k) { return {q_pow(k), q_pow(k)}; }
/// psi(q^k) = f(q^k, q^3k)
inline ThetaSpec psi(std::int64_t k) { return {q_pow(k), q_pow(3 * k)}; }

/// coeff * shift * prod f(a_i, b_i)
struct ThetaTerm {
    std::int64_t coeff = 1;
    Monomial shift;
    std::vector<ThetaSpec> factors;

    auto operator<=>(const ThetaTerm &) const = default;
};

using ThetaSplit = std::pair<ThetaTerm, ThetaTerm>;

/// Exponent of the k-th summand: a.exp k(k+1)/2 + b.exp k(k-1)/2.
std::int64_t theta_exponent(const ThetaSpec &s, std::int64_t k);
/// Sign of the k-th summand.
int theta_sign(const ThetaSpec &s, std::int64_t k);
/// Least exponent occurring in the series of s.
std::int64_t theta_min_exponent(const ThetaSpec &s);
/// Smallest integer interval [lo, hi] of k containing every summand with
/// exponent <= N; both lo-1 and hi+1 are checked to exceed N.
std::pair<std::int64_t, std::int64_t> theta_index_range(const ThetaSpec &s, Exponent order);

/// Direct summation of the defining series.
Series theta_series(const ThetaSpec &s, Exponent order);

/// Jacobi triple product (-a, -b, ab; ab)_inf. Both exponents must be
/// nonnegative; throws std::invalid_argument("use series form") otherwise.
Series theta_product(const ThetaSpec &s, Exponent order);

/// f(a,b) = f(a^3 b, a b^3) + a f(b/a, a^5 b^3)
ThetaSplit split3(const ThetaSpec &s);

/// f(a,b)^2 = f(a^2,b^2) f(ab,ab) + 2a f(b/a, a^3 b) f(a^2b^2, a^6b^6).
/// The second factor of each term is the multiplier (phi/psi type).
ThetaSplit square_split(const ThetaSpec &s);

/// For ab = cd:
/// f(a,b) f(c,d) = f(ac,bd) f(ad,bc) + a f(b/c, (c/b)abcd) f(b/d, (d/b)abcd).
/// Throws std::invalid_argument("product identity precondition violated").
ThetaSplit product_split(const ThetaSpec &s1, const ThetaSpec &s2);

/// Rewrites f(1,x) and f(x,1) as 2 f(x, x^3); a factor f(-1,x) zeroes the
/// term.
ThetaTerm eliminate_unit_arguments(ThetaTerm t);

Series theta_term_series(const ThetaTerm &t, Exponent order);

std::string to_string(const Monomial &m);
std::string to_string(const ThetaSpec &s);
std::string to_string(const ThetaTerm &t);

} // namespace qdissect
