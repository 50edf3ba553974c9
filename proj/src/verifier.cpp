#include "qdissect/verifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qdissect/parallel.hpp"

namespace qdissect {

std::string to_string(ProofStatus s)
{
    switch (s) {
    case ProofStatus::certified:
        return "certified";
    case ProofStatus::verified:
        return "verified";
    case ProofStatus::refuted:
        return "refuted";
    case ProofStatus::inapplicable:
        return "inapplicable";
    }
    return "unknown";
}

ProofReport verify_claim(const Claim &c, Exponent order)
{
    c.spec.validate();
    if (c.t < 1 || c.r < 0 || c.r >= c.t) {
        throw std::invalid_argument("residue out of range");
    }
    if (order < c.t) {
        throw std::invalid_argument("order must be at least the modulus");
    }
    ProofReport rep;
    rep.claim_id = c.id;
    rep.order = order;
    rep.status = ProofStatus::verified;
    const Series s = product_expand(c.spec, order);
    for (Exponent e = c.r; e <= order; e += c.t) {
        if (sgn(s.dense()[static_cast<std::size_t>(e)]) != 0) {
            rep.status = ProofStatus::refuted;
            rep.counterexample = Counterexample{e, s.dense()[static_cast<std::size_t>(e)]};
            break;
        }
    }
    return rep;
}

namespace {

/// coeff * shift * pair [* multiplier], one summand of a split.
struct Piece {
    std::int64_t coeff;
    Monomial shift;
    ThetaSpec pair;
    std::optional<ThetaSpec> multiplier;
};

std::vector<Piece> split_pieces(const ThetaSpec &theta, unsigned power)
{
    std::vector<Piece> out;
    const auto [first, second] = power == 1 ? split3(theta) : square_split(theta);
    for (const auto &term : {first, second}) {
        if (term.coeff == 0) {
            continue;
        }
        Piece p{term.coeff, term.shift, term.factors.at(0), std::nullopt};
        if (power == 2) {
            p.multiplier = term.factors.at(1);
        }
        out.push_back(p);
    }
    return out;
}

} // namespace

ProofReport prove_claim(const Claim &c, Exponent order)
{
    const ProofReport brute = verify_claim(c, order);
    ProofReport rep;
    rep.claim_id = c.id;
    rep.order = order;
    rep.expansion = brute.status;
    rep.counterexample = brute.counterexample;
    auto inapplicable = [&](std::string reason) {
        rep.status = ProofStatus::inapplicable;
        rep.reason = std::move(reason);
        rep.groups.clear();
        return rep;
    };

    // (s q^a, s q^(m-a); q^m)^p = f(-s q^a, -s q^(m-a))^p / (q^m; q^m)^p
    std::vector<std::pair<ThetaSpec, unsigned>> thetas;
    for (const auto &f : c.spec.factors) {
        if (f.single) {
            return inapplicable("Euler factor in the product");
        }
        if (f.power != 1 && f.power != 2) {
            return inapplicable("factor " + to_string(f) + " has power " + std::to_string(f.power) + ", outside {1, 2}");
        }
        if (!f.matched_signs()) {
            return inapplicable("factor " + to_string(f) + " has mismatched signs");
        }
        if (f.m % c.t != 0) {
            return inapplicable("modulus of " + to_string(f) + " is not divisible by " + std::to_string(c.t));
        }
        thetas.emplace_back(ThetaSpec{q_pow(f.a, -f.sign1), q_pow(f.m - f.a, -f.sign2)}, f.power);
        rep.denominators.push_back(PochFactor::euler(f.m, f.power));
    }
    if (thetas.size() != 2) {
        return inapplicable("the prover handles exactly two theta factors");
    }
    if (!support_modulus_check(product_expand(ProductSpec{rep.denominators}, order), c.t)) {
        return inapplicable("denominator not supported on multiples of t");
    }

    const auto pieces0 = split_pieces(thetas[0].first, thetas[0].second);
    const auto pieces1 = split_pieces(thetas[1].first, thetas[1].second);
    for (const auto &p0 : pieces0) {
        for (const auto &p1 : pieces1) {
            std::vector<ThetaSpec> multipliers;
            for (const auto &m : {p0.multiplier, p1.multiplier}) {
                if (m) {
                    if (!support_modulus_check(theta_series(*m, order), c.t)) {
                        return inapplicable("multiplier " + to_string(*m) + " not supported on multiples of t");
                    }
                    multipliers.push_back(*m);
                }
            }
            std::sort(multipliers.begin(), multipliers.end());
            const std::int64_t coeff = p0.coeff * p1.coeff;
            const Monomial shift = p0.shift * p1.shift;
            const std::int64_t scale = coeff < 0 ? -coeff : coeff;
            auto group = std::find_if(rep.groups.begin(), rep.groups.end(), [&](const MultiplierGroup &g) {
                return g.scale == scale && g.multipliers == multipliers;
            });
            if (group == rep.groups.end()) {
                rep.groups.push_back(MultiplierGroup{scale, multipliers, {}, {}});
                group = rep.groups.end() - 1;
            }
            const int sign = (coeff < 0 ? -1 : 1) * shift.sign;
            QuadLatticeSum form;
            try {
                form = theta_pair_to_lattice(shift.exp, sign, p0.pair, p1.pair);
            } catch (const std::invalid_argument &e) {
                return inapplicable(e.what());
            }
            if (!residue_condition_is_linear(form, c.t)) {
                throw std::logic_error("quadratic coefficients of " + to_string(form) + " not divisible by t");
            }
            group->terms.push_back(LatticeTerm{ThetaTerm{coeff, shift, {p0.pair, p1.pair}}, form,
                                               residue_component(form, c.t, c.r)});
        }
    }

    bool all_certified = true;
    bool all_truncated = true;
    for (auto &g : rep.groups) {
        std::vector<SignedDecomp> parts;
        for (const auto &term : g.terms) {
            parts.push_back(SignedDecomp{1, term.component});
        }
        g.report = components_cancel(parts, order, CancelMode::certified);
        if (!g.report.cancelled) {
            all_certified = false;
            g.report = components_cancel(parts, order, CancelMode::truncated);
            all_truncated = all_truncated && g.report.cancelled;
        }
    }
    if (all_certified) {
        if (brute.status == ProofStatus::refuted) {
            throw std::logic_error("certified claim " + c.id + " refuted by its expansion");
        }
        rep.status = ProofStatus::certified;
    } else if (all_truncated && brute.status == ProofStatus::verified) {
        rep.status = ProofStatus::verified;
    } else {
        rep.status = brute.status;
    }
    return rep;
}

std::vector<ProofReport> run_claims(const std::vector<Claim> &claims, Exponent order, unsigned jobs)
{
    return detail::parallel_map<ProofReport>(claims.size(), jobs,
                                             [&](std::size_t i) { return prove_claim(claims[i], order); });
}

} // namespace qdissect
