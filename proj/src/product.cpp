#include "qdissect/product.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qdissect {

PochFactor PochFactor::pair(int sign1, int sign2, std::int64_t a, std::int64_t m, unsigned power)
{
    PochFactor f{sign1, sign2, a, m, power, false};
    f.validate();
    return f;
}

PochFactor PochFactor::euler(std::int64_t m, unsigned power)
{
    PochFactor f{1, 1, m, m, power, true};
    f.validate();
    return f;
}

void PochFactor::validate() const
{
    if ((sign1 != 1 && sign1 != -1) || (sign2 != 1 && sign2 != -1)) {
        throw std::invalid_argument("factor signs must be +1 or -1");
    }
    if (m < 1) {
        throw std::invalid_argument("factor modulus must be positive");
    }
    if (power < 1) {
        throw std::invalid_argument("factor power must be positive");
    }
    if (single) {
        if (a != m || sign1 != 1 || sign2 != 1) {
            throw std::invalid_argument("Euler factor must be (q^m;q^m)");
        }
        return;
    }
    if (a < 1 || a >= m) {
        throw std::invalid_argument("pair factor needs 0 < a < m");
    }
}

void ProductSpec::validate() const
{
    if (factors.empty()) {
        throw std::invalid_argument("product has no factors");
    }
    for (const auto &f : factors) {
        f.validate();
    }
}

ProductSpec ProductSpec::normalized() const
{
    ProductSpec out = *this;
    for (auto &f : out.factors) {
        if (!f.single && f.a > f.m - f.a) {
            f.a = f.m - f.a;
            std::swap(f.sign1, f.sign2);
        }
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

namespace detail {

void multiply_pochhammer(std::vector<Coeff> &c, int sign, std::int64_t a, std::int64_t m)
{
    const auto top = static_cast<std::int64_t>(c.size()) - 1;
    for (std::int64_t e = a; e <= top; e += m) {
        for (std::int64_t j = top; j >= e; --j) {
            const Coeff &src = c[j - e];
            if (sgn(src) == 0) {
                continue;
            }
            if (sign > 0) {
                c[j] -= src;
            } else {
                c[j] += src;
            }
        }
    }
}

} // namespace detail

Series poch_expand(int sign, std::int64_t a, std::int64_t m, Exponent order)
{
    if (a < 1 || m < 1 || (sign != 1 && sign != -1)) {
        throw std::invalid_argument("invalid Pochhammer parameters");
    }
    if (order < 0) {
        throw std::invalid_argument("negative truncation order");
    }
    std::vector<Coeff> c(static_cast<std::size_t>(order + 1));
    c[0] = 1;
    detail::multiply_pochhammer(c, sign, a, m);
    return Series(0, order, std::move(c));
}

Series product_expand(const ProductSpec &spec, Exponent order)
{
    spec.validate();
    if (order < 0) {
        throw std::invalid_argument("negative truncation order");
    }
    std::vector<Coeff> c(static_cast<std::size_t>(order + 1));
    c[0] = 1;
    for (const auto &f : spec.factors) {
        for (unsigned p = 0; p < f.power; ++p) {
            detail::multiply_pochhammer(c, f.sign1, f.a, f.m);
            if (!f.single) {
                detail::multiply_pochhammer(c, f.sign2, f.m - f.a, f.m);
            }
        }
    }
    return Series(0, order, std::move(c));
}

namespace {

void write_term(std::ostream &os, int sign, std::int64_t e)
{
    if (sign < 0) {
        os << '-';
    }
    os << 'q';
    if (e != 1) {
        os << '^' << e;
    }
}

} // namespace

std::string to_string(const PochFactor &f)
{
    std::ostringstream os;
    os << '(';
    if (f.single) {
        os << "q^" << f.m;
    } else {
        write_term(os, f.sign1, f.a);
        os << ',';
        write_term(os, f.sign2, f.m - f.a);
    }
    os << ";q^" << f.m << ')';
    if (f.power != 1) {
        os << '^' << f.power;
    }
    return os.str();
}

std::string to_string(const ProductSpec &spec)
{
    std::string out;
    for (const auto &f : spec.factors) {
        if (!out.empty()) {
            out += ' ';
        }
        out += to_string(f);
    }
    return out;
}

} // namespace qdissect
