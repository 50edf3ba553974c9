#include "qdissect/theta.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qdissect/product.hpp"

namespace qdissect {

Monomial Monomial::pow(unsigned k) const
{
    Monomial out{1, 0};
    for (unsigned i = 0; i < k; ++i) {
        out = out * *this;
    }
    return out;
}

void ThetaSpec::validate() const
{
    if ((a.sign != 1 && a.sign != -1) || (b.sign != 1 && b.sign != -1)) {
        throw std::invalid_argument("theta argument signs must be +1 or -1");
    }
    if (!valid()) {
        throw std::invalid_argument("divergent theta spec");
    }
}

std::int64_t theta_exponent(const ThetaSpec &s, std::int64_t k)
{
    const __int128 kk = k;
    const __int128 e = (static_cast<__int128>(s.a.exp) * kk * (kk + 1) + static_cast<__int128>(s.b.exp) * kk * (kk - 1)) / 2;
    if (e > std::numeric_limits<std::int64_t>::max() || e < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("theta exponent overflow");
    }
    return static_cast<std::int64_t>(e);
}

int theta_sign(const ThetaSpec &s, std::int64_t k)
{
    // k(k+1)/2 and k(k-1)/2 are odd exactly for k = 1, 2 mod 4 and k = 2, 3 mod 4.
    const auto r = mod_floor(k, 4);
    const bool odd_a = r == 1 || r == 2;
    const bool odd_b = r == 2 || r == 3;
    int sign = 1;
    if (odd_a && s.a.sign < 0) {
        sign = -sign;
    }
    if (odd_b && s.b.sign < 0) {
        sign = -sign;
    }
    return sign;
}

namespace {

/// Integer index minimising the exponent: e(k) = (A k^2 + B k)/2 has its
/// real vertex at -B/(2A), so the minimiser is its floor or ceiling.
std::int64_t argmin_index(const ThetaSpec &s)
{
    const std::int64_t quad = s.a.exp + s.b.exp;
    const std::int64_t lin = s.a.exp - s.b.exp;
    const std::int64_t k0 = floor_div(-lin, 2 * quad);
    return theta_exponent(s, k0) <= theta_exponent(s, k0 + 1) ? k0 : k0 + 1;
}

} // namespace

std::int64_t theta_min_exponent(const ThetaSpec &s)
{
    s.validate();
    return theta_exponent(s, argmin_index(s));
}

std::pair<std::int64_t, std::int64_t> theta_index_range(const ThetaSpec &s, Exponent order)
{
    s.validate();
    const std::int64_t kmin = argmin_index(s);
    if (theta_exponent(s, kmin) > order) {
        return {kmin, kmin - 1};
    }
    const long double quad = static_cast<long double>(s.a.exp + s.b.exp);
    const long double lin = static_cast<long double>(s.a.exp - s.b.exp);
    const long double disc = std::max<long double>(0, lin * lin + 8 * quad * static_cast<long double>(order));
    const long double root = std::sqrt(disc);
    auto lo = static_cast<std::int64_t>(std::floor((-lin - root) / (2 * quad))) - 1;
    auto hi = static_cast<std::int64_t>(std::ceil((-lin + root) / (2 * quad))) + 1;
    lo = std::min(lo, kmin);
    hi = std::max(hi, kmin);
    while (theta_exponent(s, lo) > order) {
        ++lo;
    }
    while (theta_exponent(s, hi) > order) {
        --hi;
    }
    while (theta_exponent(s, lo - 1) <= order) {
        --lo;
    }
    while (theta_exponent(s, hi + 1) <= order) {
        ++hi;
    }
    return {lo, hi};
}

Series theta_series(const ThetaSpec &s, Exponent order)
{
    s.validate();
    const auto [klo, khi] = theta_index_range(s, order);
    if (klo > khi) {
        return Series(order, order);
    }
    const Exponent lo = theta_min_exponent(s);
    std::vector<Coeff> c(static_cast<std::size_t>(order - lo + 1));
    for (std::int64_t k = klo; k <= khi; ++k) {
        const auto e = theta_exponent(s, k);
        if (theta_sign(s, k) > 0) {
            c[e - lo] += 1;
        } else {
            c[e - lo] -= 1;
        }
    }
    return Series(lo, order, std::move(c));
}

namespace {

/// In place: c *= prod_{k>=0} (1 - x base^k), for x.exp >= 0, base.exp > 0.
void multiply_signed_pochhammer(std::vector<Coeff> &c, Monomial x, Monomial base)
{
    if (x.exp == 0) {
        // The k = 0 factor is the constant 1 - x.sign.
        const int constant = 1 - x.sign;
        for (auto &v : c) {
            v *= constant;
        }
        x = x * base;
    }
    if (base.sign > 0) {
        detail::multiply_pochhammer(c, x.sign, x.exp, base.exp);
        return;
    }
    // Base -q^m: even k give (x; q^2m), odd k give (-x q^m; q^2m).
    detail::multiply_pochhammer(c, x.sign, x.exp, 2 * base.exp);
    detail::multiply_pochhammer(c, -x.sign, x.exp + base.exp, 2 * base.exp);
}

} // namespace

Series theta_product(const ThetaSpec &s, Exponent order)
{
    s.validate();
    if (s.a.exp < 0 || s.b.exp < 0) {
        throw std::invalid_argument("use series form");
    }
    if (order < 0) {
        throw std::invalid_argument("negative truncation order");
    }
    const Monomial minus_one{-1, 0};
    const Monomial ab = s.a * s.b;
    std::vector<Coeff> c(static_cast<std::size_t>(order + 1));
    c[0] = 1;
    multiply_signed_pochhammer(c, minus_one * s.a, ab);
    multiply_signed_pochhammer(c, minus_one * s.b, ab);
    multiply_signed_pochhammer(c, ab, ab);
    return Series(0, order, std::move(c));
}

ThetaTerm eliminate_unit_arguments(ThetaTerm t)
{
    const Monomial minus_one{-1, 0};
    for (auto &f : t.factors) {
        if (f.a == minus_one || f.b == minus_one) {
            return ThetaTerm{0, t.shift, {}};
        }
        if (f.a.is_one()) {
            t.coeff *= 2;
            f = ThetaSpec{f.b, f.b.pow(3)};
        } else if (f.b.is_one()) {
            t.coeff *= 2;
            f = ThetaSpec{f.a, f.a.pow(3)};
        }
    }
    return t;
}

ThetaSplit split3(const ThetaSpec &s)
{
    s.validate();
    const Monomial a = s.a;
    const Monomial b = s.b;
    ThetaTerm first{1, {}, {ThetaSpec{a.pow(3) * b, a * b.pow(3)}}};
    ThetaTerm second{1, a, {ThetaSpec{b / a, a.pow(5) * b.pow(3)}}};
    return {eliminate_unit_arguments(first), eliminate_unit_arguments(second)};
}

ThetaSplit square_split(const ThetaSpec &s)
{
    s.validate();
    const Monomial a = s.a;
    const Monomial b = s.b;
    const Monomial ab = a * b;
    ThetaTerm first{1, {}, {ThetaSpec{a.pow(2), b.pow(2)}, ThetaSpec{ab, ab}}};
    ThetaTerm second{1, a, {ThetaSpec{b / a, a.pow(3) * b}, ThetaSpec{Monomial{}, ab.pow(2)}}};
    return {eliminate_unit_arguments(first), eliminate_unit_arguments(second)};
}

ThetaSplit product_split(const ThetaSpec &s1, const ThetaSpec &s2)
{
    s1.validate();
    s2.validate();
    const Monomial a = s1.a;
    const Monomial b = s1.b;
    const Monomial c = s2.a;
    const Monomial d = s2.b;
    if (a * b != c * d) {
        throw std::invalid_argument("product identity precondition violated");
    }
    const Monomial abcd = a * b * c * d;
    ThetaTerm first{1, {}, {ThetaSpec{a * c, b * d}, ThetaSpec{a * d, b * c}}};
    ThetaTerm second{1, a, {ThetaSpec{b / c, (c / b) * abcd}, ThetaSpec{b / d, (d / b) * abcd}}};
    return {eliminate_unit_arguments(first), eliminate_unit_arguments(second)};
}

Series theta_term_series(const ThetaTerm &t, Exponent order)
{
    if (t.coeff == 0) {
        return Series::zero(order);
    }
    std::vector<std::int64_t> mins;
    std::int64_t total_min = 0;
    for (const auto &f : t.factors) {
        mins.push_back(theta_min_exponent(f));
        total_min += mins.back();
    }
    const Exponent inner = order - t.shift.exp;
    if (inner < total_min) {
        return Series(order, order);
    }
    Series acc = Series::one(inner);
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
        const Exponent factor_order = inner - (total_min - mins[i]);
        acc = acc * theta_series(t.factors[i], factor_order);
    }
    return acc.truncate(inner).shifted(t.shift.exp).scaled(Coeff(t.coeff) * t.shift.sign);
}

std::string to_string(const Monomial &m)
{
    std::ostringstream os;
    if (m.sign < 0) {
        os << '-';
    }
    if (m.exp == 0) {
        os << '1';
    } else {
        os << 'q';
        if (m.exp != 1) {
            os << '^' << m.exp;
        }
    }
    return os.str();
}

std::string to_string(const ThetaSpec &s) { return "f(" + to_string(s.a) + "," + to_string(s.b) + ")"; }

std::string to_string(const ThetaTerm &t)
{
    std::ostringstream os;
    const int sign = (t.coeff < 0 ? -1 : 1) * t.shift.sign;
    const std::int64_t mag = t.coeff < 0 ? -t.coeff : t.coeff;
    os << (sign < 0 ? "-" : "");
    bool wrote = false;
    if (mag != 1 || (t.shift.exp == 0 && t.factors.empty())) {
        os << mag;
        wrote = true;
    }
    if (t.shift.exp != 0) {
        os << (wrote ? "*" : "") << to_string(Monomial{1, t.shift.exp});
        wrote = true;
    }
    for (const auto &f : t.factors) {
        os << (wrote ? "*" : "") << to_string(f);
        wrote = true;
    }
    return os.str();
}

} // namespace qdissect
