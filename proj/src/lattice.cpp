#include "qdissect/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qdissect {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("lattice form coefficient overflow");
    }
    return static_cast<std::int64_t>(v);
}

bool is_even(std::int64_t v) { return v % 2 == 0; }

/// Doubled quadratic polynomial without the constant.
i128 doubled_form(const QuadLatticeSum &L, i128 m, i128 n)
{
    return L.A2 * m * m + L.E2 * m * n + L.C2 * n * n + L.B2 * m + L.D2 * n;
}

std::int64_t isqrt_floor(i128 v)
{
    if (v <= 0) {
        return 0;
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
    while (static_cast<i128>(r) * r > v) {
        --r;
    }
    while (static_cast<i128>(r + 1) * (r + 1) <= v) {
        ++r;
    }
    return r;
}

/// Discriminant in n of C2 n^2 + (E2 m + D2) n + (A2 m^2 + B2 m - bound) <= 0.
i128 row_discriminant(const QuadLatticeSum &L, i128 m, i128 bound)
{
    const i128 lin = L.E2 * m + L.D2;
    return lin * lin - 4 * static_cast<i128>(L.C2) * (L.A2 * m * m + L.B2 * m - bound);
}

/// Calls fn(m, n, exponent) for every lattice point with exponent <= order.
template <typename Fn>
void for_each_point(const QuadLatticeSum &L, Exponent order, Fn &&fn)
{
    const i128 bound = 2 * (static_cast<i128>(order) - L.c);
    // The row (fixed m) is nonempty only where its discriminant is >= 0:
    // alpha m^2 + beta m + gamma >= 0.
    const i128 alpha = static_cast<i128>(L.E2) * L.E2 - 4 * static_cast<i128>(L.A2) * L.C2;
    const i128 beta = 2 * static_cast<i128>(L.E2) * L.D2 - 4 * static_cast<i128>(L.C2) * L.B2;
    const i128 gamma = static_cast<i128>(L.D2) * L.D2 + 4 * static_cast<i128>(L.C2) * bound;
    const i128 disc = beta * beta - 4 * alpha * gamma;
    if (disc < 0) {
        return;
    }
    const long double root = std::sqrt(static_cast<long double>(disc));
    const long double r1 = (-static_cast<long double>(beta) + root) / (2 * static_cast<long double>(alpha));
    const long double r2 = (-static_cast<long double>(beta) - root) / (2 * static_cast<long double>(alpha));
    auto mlo = static_cast<std::int64_t>(std::floor(std::min(r1, r2))) - 1;
    auto mhi = static_cast<std::int64_t>(std::ceil(std::max(r1, r2))) + 1;
    while (row_discriminant(L, mlo, bound) >= 0) {
        --mlo;
    }
    while (row_discriminant(L, mhi, bound) >= 0) {
        ++mhi;
    }
    for (std::int64_t m = mlo + 1; m < mhi; ++m) {
        const i128 d = row_discriminant(L, m, bound);
        if (d < 0) {
            continue;
        }
        const i128 lin = static_cast<i128>(L.E2) * m + L.D2;
        const std::int64_t s = isqrt_floor(d);
        const std::int64_t nlo = narrow(floor_div(narrow(-lin - s - 1), 2 * L.C2)) - 1;
        const std::int64_t nhi = narrow(floor_div(narrow(-lin + s + 1), 2 * L.C2)) + 1;
        for (std::int64_t n = nlo; n <= nhi; ++n) {
            const i128 v = doubled_form(L, m, n);
            if (v <= bound) {
                fn(m, n, narrow(v / 2 + L.c));
            }
        }
    }
}

} // namespace

bool QuadLatticeSum::valid() const
{
    if (sgn != 1 && sgn != -1) {
        return false;
    }
    if (A2 <= 0 || C2 <= 0) {
        return false;
    }
    if (4 * static_cast<i128>(A2) * C2 - static_cast<i128>(E2) * E2 <= 0) {
        return false;
    }
    return is_even(A2 - B2) && is_even(C2 - D2) && is_even(E2);
}

void QuadLatticeSum::validate() const
{
    if (!valid()) {
        throw std::invalid_argument("invalid lattice form " + to_string(*this));
    }
}

std::int64_t QuadLatticeSum::exponent(std::int64_t m, std::int64_t n) const
{
    return narrow(doubled_form(*this, m, n) / 2 + c);
}

QuadLatticeSum substitute(const QuadLatticeSum &L, const AffineMap &map)
{
    if (map.det() == 0) {
        throw std::invalid_argument("degenerate change of variables");
    }
    const auto &U = map.basis;
    const auto &p = map.offset;
    // Hessian of the doubled exponent and its linear part.
    const i128 h11 = 2 * static_cast<i128>(L.A2);
    const i128 h12 = L.E2;
    const i128 h22 = 2 * static_cast<i128>(L.C2);
    const i128 g1 = h11 * p[0] + h12 * p[1] + L.B2;
    const i128 g2 = h12 * p[0] + h22 * p[1] + L.D2;
    const i128 col1[2] = {U[0], U[2]};
    const i128 col2[2] = {U[1], U[3]};
    auto quad = [&](const i128 *x, const i128 *y) {
        return x[0] * (h11 * y[0] + h12 * y[1]) + x[1] * (h12 * y[0] + h22 * y[1]);
    };
    QuadLatticeSum out;
    out.sgn = L.sgn;
    out.A2 = narrow(quad(col1, col1) / 2);
    out.C2 = narrow(quad(col2, col2) / 2);
    out.E2 = narrow(quad(col1, col2));
    out.B2 = narrow(col1[0] * g1 + col1[1] * g2);
    out.D2 = narrow(col2[0] * g1 + col2[1] * g2);
    out.c = L.exponent(p[0], p[1]);
    return out;
}

QuadLatticeSum theta_pair_to_lattice(std::int64_t c, int sgn, const ThetaSpec &f1, const ThetaSpec &f2)
{
    f1.validate();
    f2.validate();
    if (f1.a.sign < 0 || f1.b.sign < 0 || f2.a.sign < 0 || f2.b.sign < 0) {
        throw std::invalid_argument("signed lattice sums unsupported");
    }
    QuadLatticeSum L;
    L.c = c;
    L.sgn = sgn;
    L.A2 = f1.a.exp + f1.b.exp;
    L.B2 = f1.a.exp - f1.b.exp;
    L.C2 = f2.a.exp + f2.b.exp;
    L.D2 = f2.a.exp - f2.b.exp;
    L.E2 = 0;
    L.validate();
    return L;
}

std::int64_t lattice_min_exponent(const QuadLatticeSum &L)
{
    L.validate();
    // Real minimum of the doubled form is -g^T H^-1 g / 2, a lower bound for
    // the lattice minimum; widen the window until a point appears.
    const long double det = 4.0L * L.A2 * L.C2 - static_cast<long double>(L.E2) * L.E2;
    const long double quad = (2.0L * L.C2 * L.B2 * L.B2 - 2.0L * L.E2 * L.B2 * L.D2 + 2.0L * L.A2 * L.D2 * L.D2) / det;
    auto window = static_cast<Exponent>(std::floor(L.c - quad / 4)) - 1;
    for (Exponent step = 1;; step *= 2) {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for_each_point(L, window, [&](std::int64_t, std::int64_t, std::int64_t e) { best = std::min(best, e); });
        if (best != std::numeric_limits<std::int64_t>::max()) {
            return best;
        }
        window += step;
    }
}

Series lattice_series(const QuadLatticeSum &L, Exponent order)
{
    L.validate();
    const Exponent lo = std::min(lattice_min_exponent(L), order);
    std::vector<Coeff> c(static_cast<std::size_t>(order - lo + 1));
    for_each_point(L, order, [&](std::int64_t, std::int64_t, std::int64_t e) {
        if (L.sgn > 0) {
            c[e - lo] += 1;
        } else {
            c[e - lo] -= 1;
        }
    });
    return Series(lo, order, std::move(c));
}

std::pair<std::int64_t, std::int64_t> residue_periods(const QuadLatticeSum &L, std::int64_t t)
{
    const bool even_t = is_even(t);
    return {even_t && !is_even(L.B2) ? 2 * t : t, even_t && !is_even(L.D2) ? 2 * t : t};
}

std::vector<std::pair<std::int64_t, std::int64_t>> residue_solutions(const QuadLatticeSum &L, std::int64_t t, std::int64_t r)
{
    L.validate();
    if (t < 1 || r < 0 || r >= t) {
        throw std::invalid_argument("residue out of range");
    }
    const auto [pm, pn] = residue_periods(L, t);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t m = 0; m < pm; ++m) {
        for (std::int64_t n = 0; n < pn; ++n) {
            if (mod_floor(L.exponent(m, n), t) == r) {
                out.emplace_back(m, n);
            }
        }
    }
    return out;
}

bool residue_condition_is_linear(const QuadLatticeSum &L, std::int64_t t)
{
    return L.A2 % (2 * t) == 0 && L.C2 % (2 * t) == 0 && L.E2 % (2 * t) == 0;
}

namespace {

ResidueClassDecomp classwise_component(const QuadLatticeSum &L, std::int64_t t, std::int64_t r)
{
    const auto [pm, pn] = residue_periods(L, t);
    ResidueClassDecomp out{t, r, {}};
    for (const auto &[m0, n0] : residue_solutions(L, t, r)) {
        out.parts.push_back(substitute(L, AffineMap{{pm, 0, 0, pn}, {m0, n0}}));
    }
    return out;
}

ResidueClassDecomp coset_component(const QuadLatticeSum &L, std::int64_t t, std::int64_t r)
{
    if (!residue_condition_is_linear(L, t)) {
        throw std::invalid_argument("residue condition is not linear");
    }
    // exponent = (B2/2) m + (D2/2) n + c  (mod t)
    const std::int64_t u = mod_floor(L.B2 / 2, t);
    const std::int64_t v = mod_floor(L.D2 / 2, t);
    const std::int64_t target = mod_floor(r - L.c, t);
    ResidueClassDecomp out{t, r, {}};
    if (u == 0 && v == 0) {
        if (target == 0) {
            out.parts.push_back(L);
        }
        return out;
    }
    // Sub-lattice {u m + v n = 0 mod t} in Hermite form: (x0, y0), (0, y1).
    const std::int64_t gv = std::gcd(v, t);
    const std::int64_t x0 = gv / std::gcd(u, gv);
    std::int64_t y0 = 0;
    while ((u * x0 + v * y0) % t != 0) {
        ++y0;
    }
    const std::int64_t y1 = t / gv;
    for (std::int64_t m = 0; m < t; ++m) {
        for (std::int64_t n = 0; n < t; ++n) {
            if (mod_floor(u * m + v * n - target, t) == 0) {
                out.parts.push_back(canonicalize(substitute(L, AffineMap{{x0, 0, y0, y1}, {m, n}})));
                return out;
            }
        }
    }
    return out;
}

} // namespace

ResidueClassDecomp residue_component(const QuadLatticeSum &L, std::int64_t t, std::int64_t r, ResidueStrategy strategy)
{
    L.validate();
    if (t < 1 || r < 0 || r >= t) {
        throw std::invalid_argument("residue out of range");
    }
    switch (strategy) {
    case ResidueStrategy::classwise:
        return classwise_component(L, t, r);
    case ResidueStrategy::coset:
        return coset_component(L, t, r);
    case ResidueStrategy::automatic:
        break;
    }
    return residue_condition_is_linear(L, t) ? coset_component(L, t, r) : classwise_component(L, t, r);
}

Series decomp_series(const ResidueClassDecomp &d, Exponent order)
{
    Series acc = Series::zero(order);
    for (const auto &part : d.parts) {
        acc = acc + lattice_series(part, order);
    }
    return acc;
}

namespace {

/// Gauss reduction of the quadratic part: |E2| <= A2 <= C2 and E2 >= 0.
QuadLatticeSum reduce_quadratic_part(QuadLatticeSum L)
{
    while (true) {
        if (std::abs(L.E2) > L.A2) {
            // m -> m - k n brings E2 into (-A2, A2].
            const std::int64_t k = floor_div(L.E2 + L.A2, 2 * L.A2);
            L = substitute(L, AffineMap{{1, -k, 0, 1}, {0, 0}});
        } else if (L.A2 > L.C2) {
            L = substitute(L, AffineMap{{0, 1, 1, 0}, {0, 0}});
        } else {
            break;
        }
    }
    if (L.E2 < 0) {
        L = substitute(L, AffineMap{{1, 0, 0, -1}, {0, 0}});
    }
    return L;
}

/// Translate so the real minimiser lies in (-1, 0]^2.
QuadLatticeSum center(const QuadLatticeSum &L)
{
    const i128 det = 4 * static_cast<i128>(L.A2) * L.C2 - static_cast<i128>(L.E2) * L.E2;
    const i128 num_m = -(2 * static_cast<i128>(L.C2) * L.B2 - static_cast<i128>(L.E2) * L.D2);
    const i128 num_n = -(2 * static_cast<i128>(L.A2) * L.D2 - static_cast<i128>(L.E2) * L.B2);
    auto ceil_div = [](i128 a, i128 b) {
        i128 q = a / b;
        return (a % b != 0 && a > 0) ? q + 1 : q;
    };
    const std::int64_t km = narrow(ceil_div(num_m, det));
    const std::int64_t kn = narrow(ceil_div(num_n, det));
    return substitute(L, AffineMap{{1, 0, 0, 1}, {km, kn}});
}

auto canonical_key(const QuadLatticeSum &L) { return std::tie(L.A2, L.E2, L.C2, L.B2, L.D2, L.c); }

} // namespace

QuadLatticeSum canonicalize(const QuadLatticeSum &L)
{
    L.validate();
    const QuadLatticeSum reduced = reduce_quadratic_part(L);
    // Automorphisms of a reduced positive definite binary form have entries
    // in {-1, 0, 1}.
    QuadLatticeSum best;
    bool have = false;
    for (int code = 0; code < 81; ++code) {
        std::array<std::int64_t, 4> w{};
        int rest = code;
        for (auto &x : w) {
            x = rest % 3 - 1;
            rest /= 3;
        }
        const AffineMap map{w, {0, 0}};
        if (std::abs(map.det()) != 1) {
            continue;
        }
        const QuadLatticeSum image = substitute(reduced, map);
        if (image.A2 != reduced.A2 || image.C2 != reduced.C2 || image.E2 != reduced.E2) {
            continue;
        }
        const QuadLatticeSum candidate = center(image);
        if (!have || canonical_key(candidate) < canonical_key(best)) {
            best = candidate;
            have = true;
        }
    }
    return best;
}

std::string to_string(const QuadLatticeSum &L)
{
    const bool halve = is_even(L.A2) && is_even(L.B2) && is_even(L.C2) && is_even(L.D2) && is_even(L.E2);
    const std::int64_t div = halve ? 2 : 1;
    std::ostringstream body;
    bool first = true;
    auto term = [&](std::int64_t coef, const char *mono) {
        coef /= div;
        if (coef == 0) {
            return;
        }
        if (coef < 0) {
            body << '-';
        } else if (!first) {
            body << '+';
        }
        first = false;
        if (std::abs(coef) != 1) {
            body << std::abs(coef);
        }
        body << mono;
    };
    term(L.A2, "m^2");
    term(L.C2, "n^2");
    term(L.E2, "mn");
    term(L.B2, "m");
    term(L.D2, "n");
    std::ostringstream os;
    if (L.sgn < 0) {
        os << '-';
    }
    if (L.c != 0) {
        os << "q^" << L.c << '*';
    }
    os << "sum q^(" << body.str() << ')';
    if (!halve) {
        os << "/2";
    }
    return os.str();
}

} // namespace qdissect
