#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdissect/cancellation.hpp"
#include "qdissect/lattice.hpp"
#include "qdissect/product.hpp"
#include "qdissect/theta.hpp"

namespace qdissect {

/// The coefficient of q^(t n + r) in the product is zero for every n >= 0.
struct Claim {
    std::string id;
    ProductSpec spec;
    std::int64_t t = 1;
    std::int64_t r = 0;
    std::string source;
    std::vector<std::string> cross_refs;
};

enum class ProofStatus { certified, verified, refuted, inapplicable };

std::string to_string(ProofStatus s);

struct Counterexample {
    /// exponent of the offending coefficient
    Exponent n = 0;
    Coeff coeff;
};

/// One lattice term of the numerator: sign * q^c * f1 * f2 and its form.
struct LatticeTerm {
    ThetaTerm term;
    QuadLatticeSum form;
    ResidueClassDecomp component;
};

/// scale * prod(multipliers) * sum(terms); the multipliers are supported on
/// multiples of t, so the residue component of the group is that of the sum.
struct MultiplierGroup {
    std::int64_t scale = 1;
    std::vector<ThetaSpec> multipliers;
    std::vector<LatticeTerm> terms;
    CancellationReport report;
};

struct ProofReport {
    std::string claim_id;
    ProofStatus status = ProofStatus::inapplicable;
    Exponent order = 0;
    std::optional<Counterexample> counterexample;
    /// Denominator factors (q^m;q^m)^p of the theta rewrite.
    std::vector<PochFactor> denominators;
    std::vector<MultiplierGroup> groups;
    /// Why the prover did not apply, when inapplicable.
    std::string reason;
    /// Brute-force verdict on the expansion (verified or refuted); empty for
    /// reports produced by verify_claim itself.
    std::optional<ProofStatus> expansion;
};

/// Brute force: expand to order N and inspect exponents congruent to r.
/// Requires N >= t (std::invalid_argument otherwise).
ProofReport verify_claim(const Claim &c, Exponent order);

/// The dissection pipeline: theta rewrite, split identities, lattice forms,
/// residue components and cancellation. Falls back to truncated evidence and
/// then to verify_claim when a group does not certify. Preconditions that
/// fail yield status inapplicable with a reason.
ProofReport prove_claim(const Claim &c, Exponent order);

/// prove_claim on every claim, up to `jobs` at a time (0 = all cores).
/// Reports come back in input order.
std::vector<ProofReport> run_claims(const std::vector<Claim> &claims, Exponent order, unsigned jobs = 0);

/// The built-in catalog of vanishing claims, 65 entries.
std::vector<Claim> builtin_catalog();

} // namespace qdissect
