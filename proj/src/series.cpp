#include "qdissect/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qdissect {

Series::Series() : Series(0, 0) {}

Series::Series(Exponent lo, Exponent order) : lo_(lo), order_(order)
{
    if (order < lo) {
        throw std::invalid_argument("series order below least exponent");
    }
    coeffs_.resize(static_cast<std::size_t>(order - lo + 1));
}

Series::Series(Exponent lo, Exponent order, std::vector<Coeff> coeffs) : Series(lo, order)
{
    const std::size_t n = std::min(coeffs.size(), coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
        coeffs_[i] = std::move(coeffs[i]);
    }
}

Series Series::zero(Exponent order) { return Series(std::min<Exponent>(0, order), order); }

Series Series::one(Exponent order) { return monomial(1, 0, order); }

Series Series::monomial(const Coeff &c, Exponent e, Exponent order)
{
    if (e > order) {
        return Series(order, order);
    }
    Series s(e, order);
    s.coeffs_[0] = c;
    return s;
}

Coeff Series::coeff(Exponent e) const
{
    if (e > order_) {
        throw std::out_of_range("coefficient beyond exactness order");
    }
    if (e < lo_) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(e - lo_)];
}

std::optional<Exponent> Series::valuation() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) {
            return lo_ + static_cast<Exponent>(i);
        }
    }
    return std::nullopt;
}

std::vector<std::pair<Exponent, Coeff>> Series::terms() const
{
    std::vector<std::pair<Exponent, Coeff>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) {
            out.emplace_back(lo_ + static_cast<Exponent>(i), coeffs_[i]);
        }
    }
    return out;
}

bool Series::is_zero() const { return !valuation().has_value(); }

Series Series::truncate(Exponent order) const
{
    if (order >= order_) {
        return *this;
    }
    if (order < lo_) {
        return Series(order, order);
    }
    return Series(lo_, order, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + (order - lo_ + 1)));
}

Series Series::shifted(Exponent k) const
{
    Series s = *this;
    s.lo_ += k;
    s.order_ += k;
    return s;
}

Series Series::scaled(const Coeff &c) const
{
    Series s = *this;
    for (auto &x : s.coeffs_) {
        x *= c;
    }
    return s;
}

bool operator==(const Series &x, const Series &y)
{
    const Exponent lo = std::min(x.lo_, y.lo_);
    const Exponent hi = std::min(x.order_, y.order_);
    for (Exponent e = lo; e <= hi; ++e) {
        if (x.coeff(e) != y.coeff(e)) {
            return false;
        }
    }
    return true;
}

namespace {

Series combine(const Series &x, const Series &y, int ysign)
{
    const Exponent lo = std::min(x.lo(), y.lo());
    const Exponent order = std::min(x.order(), y.order());
    if (order < lo) {
        return Series(order, order);
    }
    std::vector<Coeff> c(static_cast<std::size_t>(order - lo + 1));
    for (Exponent e = x.lo(); e <= order; ++e) {
        c[e - lo] = x.dense()[e - x.lo()];
    }
    for (Exponent e = y.lo(); e <= order; ++e) {
        if (ysign > 0) {
            c[e - lo] += y.dense()[e - y.lo()];
        } else {
            c[e - lo] -= y.dense()[e - y.lo()];
        }
    }
    return Series(lo, order, std::move(c));
}

} // namespace

Series series_add(const Series &x, const Series &y) { return combine(x, y, 1); }

Series series_sub(const Series &x, const Series &y) { return combine(x, y, -1); }

Series series_mul(const Series &x, const Series &y)
{
    const Exponent lo = x.lo() + y.lo();
    const Exponent order = std::min(x.order() + y.lo(), y.order() + x.lo());
    std::vector<Coeff> c(static_cast<std::size_t>(order - lo + 1));
    const auto &xc = x.dense();
    const auto &yc = y.dense();
    const Exponent span = order - lo;
    for (Exponent i = 0; i <= span && i < static_cast<Exponent>(xc.size()); ++i) {
        if (sgn(xc[i]) == 0) {
            continue;
        }
        const Exponent jmax = std::min<Exponent>(span - i, static_cast<Exponent>(yc.size()) - 1);
        for (Exponent j = 0; j <= jmax; ++j) {
            if (sgn(yc[j]) != 0) {
                mpz_addmul(c[i + j].get_mpz_t(), xc[i].get_mpz_t(), yc[j].get_mpz_t());
            }
        }
    }
    return Series(lo, order, std::move(c));
}

Series series_inverse(const Series &x, Exponent order)
{
    const auto v = x.valuation();
    if (!v) {
        throw std::domain_error("non-invertible series");
    }
    const Coeff lead = x.coeff(*v);
    if (lead != 1 && lead != -1) {
        throw std::domain_error("non-invertible series");
    }
    if (order < -*v) {
        throw std::invalid_argument("inverse order below least exponent");
    }
    // x = q^v (u_0 + u_1 q + ...), inverse = q^-v (w_0 + w_1 q + ...)
    // with w_k = -u_0 * sum_{i=1..k} u_i w_{k-i}.
    const Exponent out_order = std::min(order, x.order() - 2 * *v);
    const Exponent len = out_order + *v + 1;
    std::vector<Coeff> u(static_cast<std::size_t>(len));
    for (Exponent i = 0; i < len; ++i) {
        u[i] = x.coeff(*v + i);
    }
    std::vector<Exponent> support;
    for (Exponent i = 1; i < len; ++i) {
        if (sgn(u[i]) != 0) {
            support.push_back(i);
        }
    }
    std::vector<Coeff> w(static_cast<std::size_t>(len));
    w[0] = lead;
    Coeff acc;
    for (Exponent k = 1; k < len; ++k) {
        acc = 0;
        for (Exponent i : support) {
            if (i > k) {
                break;
            }
            if (sgn(w[k - i]) != 0) {
                mpz_addmul(acc.get_mpz_t(), u[i].get_mpz_t(), w[k - i].get_mpz_t());
            }
        }
        w[k] = -lead * acc;
    }
    return Series(-*v, out_order, std::move(w));
}

Series series_pow(const Series &x, unsigned k)
{
    if (k == 0) {
        return Series::one(x.order() - x.lo());
    }
    Series out = x;
    for (unsigned i = 1; i < k; ++i) {
        out = out * x;
    }
    return out;
}

Series dissect(const Series &h, std::int64_t t, std::int64_t r)
{
    if (t < 1 || r < 0 || r >= t) {
        throw std::invalid_argument("dissection residue out of range");
    }
    std::vector<Coeff> c = h.dense();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (mod_floor(h.lo() + static_cast<Exponent>(i), t) != r) {
            c[i] = 0;
        }
    }
    return Series(h.lo(), h.order(), std::move(c));
}

bool support_modulus_check(const Series &h, std::int64_t t)
{
    if (t < 1) {
        throw std::invalid_argument("modulus must be positive");
    }
    for (const auto &[e, c] : h.terms()) {
        if (mod_floor(e, t) != 0) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Series &s)
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : s.terms()) {
        const bool neg = sgn(c) < 0;
        const Coeff mag = abs(c);
        if (first) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag << "*";
        }
        os << "q";
        if (e != 1) {
            os << "^" << e;
        }
    }
    if (first) {
        os << "0";
    }
    os << " + O(q^" << s.order() + 1 << ")";
    return os.str();
}

} // namespace qdissect
