// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "qdissect/lattice.hpp"
#include "qdissect/scan.hpp"
#include "qdissect/spec_parser.hpp"
#include "qdissect/verifier.hpp"

using namespace qdissect;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string &what)
{
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << std::endl;
    failures += ok ? 0 : 1;
}

QuadLatticeSum printed(std::int64_t A, std::int64_t B, std::int64_t C, std::int64_t D, std::int64_t c)
{
    return QuadLatticeSum{c, 1, 2 * A, 2 * B, 2 * C, 2 * D, 0};
}

/// sum_k q^(k k) with every nonzero k counted twice, built by hand.
Series phi_by_hand(std::int64_t k, Exponent order)
{
    std::vector<Coeff> c(static_cast<std::size_t>(order + 1));
    c[0] = 1;
    for (std::int64_t j = 1; k * j * j <= order; ++j) {
        c[static_cast<std::size_t>(k * j * j)] += 2;
    }
    return Series(0, order, std::move(c));
}

/// sum_{j>=0} q^(k j(j+1)/2)
Series psi_by_hand(std::int64_t k, Exponent order)
{
    std::vector<Coeff> c(static_cast<std::size_t>(order + 1));
    for (std::int64_t j = 0; k * j * (j + 1) / 2 <= order; ++j) {
        c[static_cast<std::size_t>(k * j * (j + 1) / 2)] += 1;
    }
    return Series(0, order, std::move(c));
}

Series group_multiplier(const MultiplierGroup &g, Exponent order)
{
    Series m = Series::one(order);
    for (const auto &f : g.multipliers) {
        m = m * theta_series(f, order);
    }
    return m.scaled(g.scale);
}

void catalog_verification(const std::vector<Claim> &catalog)
{
    const auto start = std::chrono::steady_clock::now();
    int verified = 0;
    for (const auto &c : catalog) {
        verified += verify_claim(c, 1000).status == ProofStatus::verified;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream msg;
    msg << verified << "/" << catalog.size() << " catalog claims verified at N=1000 in " << secs << " s";
    report(1, catalog.size() == 65 && verified == 65 && secs < 120, msg.str());
}

void certification(const std::vector<Claim> &catalog)
{
    const auto reports = run_claims(catalog, 1000);
    int in_scope = 0;
    int certified = 0;
    int cubes_ok = 0;
    int cubes = 0;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const bool scope = std::all_of(catalog[i].spec.factors.begin(), catalog[i].spec.factors.end(),
                                       [](const PochFactor &f) { return f.power <= 2 && f.matched_signs(); });
        if (scope) {
            ++in_scope;
            certified += reports[i].status == ProofStatus::certified;
        } else {
            ++cubes;
            cubes_ok += reports[i].status == ProofStatus::inapplicable && reports[i].expansion == ProofStatus::verified;
        }
    }
    std::ostringstream msg;
    msg << certified << "/" << in_scope << " in-scope claims certified; " << cubes_ok << "/" << cubes
        << " cube claims inapplicable and verified by expansion";
    report(2, in_scope == 59 && certified == 59 && cubes == 6 && cubes_ok == 6, msg.str());
}

void structure()
{
    const Claim a{"a", parse_spec("(q,q^4;q^5) (q^6,q^9;q^15)^2"), 5, 3, "", {}};
    const auto rep = prove_claim(a, 1000);
    const Exponent n = 500;
    bool ok = rep.status == ProofStatus::certified && rep.groups.size() == 2;
    std::vector<Series> forms[2];
    bool multipliers = ok;
    if (ok) {
        multipliers = group_multiplier(rep.groups[0], n) == phi_by_hand(15, n) &&
                      group_multiplier(rep.groups[1], n) == psi_by_hand(30, n).scaled(2);
        for (int g = 0; g < 2; ++g) {
            for (const auto &t : rep.groups[g].terms) {
                QuadLatticeSum u = t.form;
                u.sgn = 1;
                forms[g].push_back(lattice_series(u, n));
            }
        }
    }
    auto pair_is = [&](int g, const QuadLatticeSum &x, const QuadLatticeSum &y) {
        const Series sx = lattice_series(x, n);
        const Series sy = lattice_series(y, n);
        return forms[g].size() == 2 && ((forms[g][0] == sx && forms[g][1] == sy) || (forms[g][0] == sy && forms[g][1] == sx));
    };
    const bool lattice = ok && pair_is(0, printed(10, 3, 15, 3, 0), printed(10, 7, 15, 3, 1)) &&
                         pair_is(1, printed(10, 7, 15, 12, 7), printed(10, 3, 15, 12, 6));
    auto unsigned_canonical = [](QuadLatticeSum L) {
        L.sgn = 1;
        return canonicalize(L);
    };
    bool paired = ok;
    for (const auto &g : rep.groups) {
        paired = paired && g.report.cancelled && g.report.mode == CancelMode::certified && g.report.pairing.size() == 1 &&
                 g.terms[0].form.sgn == -g.terms[1].form.sgn &&
                 unsigned_canonical(g.terms[0].component.parts.at(0)) ==
                     unsigned_canonical(g.terms[1].component.parts.at(0));
    }
    report(3, ok && multipliers && lattice && paired,
           std::string("a(5n+3): 4 lattice terms in groups phi(q^15) and 2psi(q^30)") +
               (lattice ? "" : " [forms differ]") + (multipliers ? "" : " [multipliers differ]") +
               (paired ? ", components pair canonically" : " [components unpaired]"));
}

void gold_values()
{
    auto f = [](std::int64_t a, std::int64_t b) { return ThetaSpec{q_pow(a), q_pow(b)}; };
    const Exponent n = 500;
    const QuadLatticeSum s1 = theta_pair_to_lattice(0, 1, f(7, 13), f(12, 18));
    const QuadLatticeSum e_s3 = theta_pair_to_lattice(1, 1, f(5, 23), f(25, 59));
    const QuadLatticeSum e_s4 = theta_pair_to_lattice(3, 1, f(5, 23), f(17, 67));
    const Series gold5 = lattice_series(printed(150, 75, 25, 30, 18), n);
    const Series gold7 = lattice_series(printed(98, 49, 294, -161, 26), n);
    const bool a = decomp_series(residue_component(s1, 5, 3), n) == gold5;
    const bool b = decomp_series(residue_component(e_s3, 7, 5), n) == gold7;
    const bool c = decomp_series(residue_component(e_s4, 7, 5), n) == gold7;
    const bool gold_nonzero = !gold5.is_zero() && !gold7.is_zero();
    report(4, a && b && c && gold_nonzero,
           std::string("T5,3(S1) ") + (a ? "matches" : "differs") + "; T7,5(S3) " + (b ? "matches" : "differs") +
               "; T7,5(S4) " + (c ? "matches" : "differs") + " (order 500)");
}

void properties(const char *binary)
{
    if (binary == nullptr) {
        report(5, false, "property-suite binary not given");
        return;
    }
    const std::string cmd = std::string("\"") + binary + "\" --minimal > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    report(5, rc == 0, "identity property suites (fixed seeds, 250 cases each, order 300)");
}

void negative_control()
{
    const Claim bad{"neg", parse_spec("(q,q^4;q^5)(q^6,q^9;q^15)^2"), 5, 1, "", {}};
    const auto brute = verify_claim(bad, 1000);
    const auto proof = prove_claim(bad, 1000);
    const bool ok = brute.status == ProofStatus::refuted && brute.counterexample && brute.counterexample->n == 1 &&
                    brute.counterexample->coeff == -1 && proof.status == ProofStatus::refuted &&
                    proof.counterexample && proof.counterexample->n == 1 && proof.counterexample->coeff == -1;
    report(6, ok, "a(5n+1) refuted at n=1 with coefficient -1 by both paths");
}

void scanner(const std::vector<Claim> &catalog)
{
    std::size_t findings = 0;
    std::size_t fresh = 0;
    std::size_t uncertified = 0;
    std::size_t missing = 0;
    std::size_t expected = 0;
    for (const char *name : {"b", "c", "e", "f", "g", "h", "i", "j"}) {
        const auto tmpl = *find_family(name);
        const auto fs = scan(tmpl);
        findings += fs.size();
        for (const auto &f : fs) {
            fresh += f.catalog_id.empty();
            uncertified += f.evidence != FindingEvidence::certified;
        }
        const std::string prefix = std::string(tmpl.t == 5 ? "m5-" : "m7-") + name;
        for (const auto &c : catalog) {
            if (c.id.rfind(prefix, 0) != 0) {
                continue;
            }
            ++expected;
            const bool hit = std::any_of(fs.begin(), fs.end(), [&](const Finding &f) {
                return f.r == c.r && f.spec.normalized() == c.spec.normalized();
            });
            missing += hit ? 0 : 1;
        }
    }
    std::ostringstream msg;
    msg << findings << " findings at order 500 covering " << expected - missing << "/" << expected
        << " stated progressions; " << findings - uncertified << " certified; " << fresh << " new-empirical";
    report(7, expected == 48 && missing == 0 && uncertified == 0, msg.str());
}

} // namespace

int main(int argc, char **argv)
{
    const auto catalog = builtin_catalog();
    catalog_verification(catalog);
    certification(catalog);
    structure();
    gold_values();
    properties(argc > 1 ? argv[1] : nullptr);
    negative_control();
    scanner(catalog);
    return failures == 0 ? 0 : 1;
}
