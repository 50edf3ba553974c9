#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qdissect/series.hpp"
#include "qdissect/theta.hpp"

namespace qdissect {

/// sgn * sum_{m,n in Z} q^(c + (A2 m^2 + E2 m n + C2 n^2 + B2 m + D2 n)/2)
///
/// The quadratic coefficients are stored doubled so that half-integral
/// forms stay exact. A product of two theta functions has E2 = 0; the cross
/// term appears after a change of lattice basis.
struct QuadLatticeSum {
    std::int64_t c = 0;
    int sgn = 1;
    std::int64_t A2 = 2;
    std::int64_t B2 = 0;
    std::int64_t C2 = 2;
    std::int64_t D2 = 0;
    std::int64_t E2 = 0;

    /// Positive definite and integral at every lattice point.
    bool valid() const;
    void validate() const;
    std::int64_t exponent(std::int64_t m, std::int64_t n) const;

    auto operator<=>(const QuadLatticeSum &) const = default;
};

/// (m, n) = offset + basis * (u, v), basis given row-major.
struct AffineMap {
    std::array<std::int64_t, 4> basis{1, 0, 0, 1};
    std::array<std::int64_t, 2> offset{0, 0};

    std::int64_t det() const { return basis[0] * basis[3] - basis[1] * basis[2]; }
};

/// The form in the new variables (u, v). With |det| = 1 the series is
/// unchanged; otherwise the result sums over the image sub-lattice coset.
QuadLatticeSum substitute(const QuadLatticeSum &L, const AffineMap &map);

/// q^c f1 f2 as a lattice sum, m indexing f1 and n indexing f2. All four
/// theta arguments must carry a + sign; throws std::invalid_argument
/// ("signed lattice sums unsupported") otherwise.
QuadLatticeSum theta_pair_to_lattice(std::int64_t c, int sgn, const ThetaSpec &f1, const ThetaSpec &f2);

Series lattice_series(const QuadLatticeSum &L, Exponent order);

/// Least exponent over the whole lattice.
std::int64_t lattice_min_exponent(const QuadLatticeSum &L);

/// Period of the exponent mod t in each variable: t, or 2t when t is even
/// and that variable's linear coefficient is odd.
std::pair<std::int64_t, std::int64_t> residue_periods(const QuadLatticeSum &L, std::int64_t t);

/// Every class (m0, n0), 0 <= m0 < period_m, 0 <= n0 < period_n, whose
/// exponent is congruent to r mod t.
std::vector<std::pair<std::int64_t, std::int64_t>> residue_solutions(const QuadLatticeSum &L, std::int64_t t, std::int64_t r);

/// True when the exponent mod t is an affine function of (m, n), i.e. all
/// quadratic coefficients are divisible by t.
bool residue_condition_is_linear(const QuadLatticeSum &L, std::int64_t t);

enum class ResidueStrategy {
    /// coset when the condition is linear, classwise otherwise
    automatic,
    /// one sub-lattice form per residue class
    classwise,
    /// one canonical form over the index-t coset of solutions; requires a
    /// linear condition
    coset,
};

struct ResidueClassDecomp {
    std::int64_t t = 1;
    std::int64_t r = 0;
    std::vector<QuadLatticeSum> parts;
};

/// T_{t,r} of the lattice sum, as a sum of lattice sums.
ResidueClassDecomp residue_component(const QuadLatticeSum &L, std::int64_t t, std::int64_t r,
                                     ResidueStrategy strategy = ResidueStrategy::automatic);

Series decomp_series(const ResidueClassDecomp &d, Exponent order);

/// Canonical representative under integral affine changes of variables
/// (GL2(Z) together with translations): the quadratic part is
/// Gauss-reduced with E2 >= 0, the centre is moved into (-1, 0]^2, and the
/// lexicographically least (A2, E2, C2, B2, D2, c) over the automorphisms
/// of the reduced form is chosen. For diagonal forms this is reduction
/// under m -> -m, n -> -n, swaps and translations.
QuadLatticeSum canonicalize(const QuadLatticeSum &L);

/// "q^18*sum q^(150m^2+25n^2+75m+30n)"
std::string to_string(const QuadLatticeSum &L);

} // namespace qdissect
