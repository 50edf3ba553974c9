#include "qdissect/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "qdissect/report.hpp"
#include "qdissect/scan.hpp"
#include "qdissect/spec_parser.hpp"
#include "qdissect/verifier.hpp"

namespace qdissect {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_refuted = 1;
constexpr int exit_usage = 2;
constexpr int exit_inapplicable = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// QDISSECT_ORDER if set, else the fallback.
Exponent default_order(Exponent fallback)
{
    const char *env = std::getenv("QDISSECT_ORDER");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    try {
        std::size_t used = 0;
        const long long v = std::stoll(env, &used);
        if (used != std::string(env).size() || v < 0) {
            throw std::invalid_argument(env);
        }
        return v;
    } catch (const std::exception &) {
        throw UsageError(std::string("invalid QDISSECT_ORDER: ") + env);
    }
}

void write_report_text(std::ostream &out, const ProofReport &rep)
{
    out << to_string(rep.status);
    if (rep.counterexample) {
        out << " n=" << rep.counterexample->n << " coeff=" << rep.counterexample->coeff.get_str();
    }
    out << " order=" << rep.order << '\n';
    if (!rep.reason.empty()) {
        out << "reason: " << rep.reason << '\n';
    }
    if (rep.expansion) {
        out << "expansion: " << to_string(*rep.expansion) << '\n';
    }
    for (const auto &d : rep.denominators) {
        out << "denominator: " << to_string(d) << '\n';
    }
    for (std::size_t i = 0; i < rep.groups.size(); ++i) {
        const auto &g = rep.groups[i];
        out << "group " << i << ": " << g.scale;
        for (const auto &m : g.multipliers) {
            out << '*' << to_string(m);
        }
        out << " -> " << (g.report.cancelled ? "cancelled" : "residual") << " (" << to_string(g.report.mode) << ")";
        for (const auto &[a, b] : g.report.pairing) {
            out << ' ' << a << '~' << b;
        }
        out << '\n';
        for (const auto &t : g.terms) {
            out << "  " << to_string(t.term) << " = " << to_string(t.form) << '\n';
            for (const auto &p : t.component.parts) {
                out << "    T" << t.component.t << ',' << t.component.r << ": " << to_string(p) << '\n';
            }
        }
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Vanishing coefficients of q-series products", "qdissect"};
    app.require_subcommand(1);

    std::string spec_text;
    std::optional<Exponent> order;
    bool json = false;
    std::int64_t t = 0;
    std::int64_t r = 0;
    std::string family;
    unsigned jobs = 0;

    auto *expand = app.add_subcommand("expand", "Expand a product to a truncation order");
    expand->add_option("spec", spec_text, "Product spec, e.g. \"(q,q^4;q^5) (q^6,q^9;q^15)^2\"")->required();
    expand->add_option("--order", order, "Truncation order");
    expand->add_flag("--json", json, "JSON output");

    auto *verify = app.add_subcommand("verify", "Check a progression by brute-force expansion");
    auto *prove = app.add_subcommand("prove", "Certify a progression by dissection");
    for (auto *sub : {verify, prove}) {
        sub->add_option("spec", spec_text, "Product spec")->required();
        sub->add_option("--mod", t, "Modulus t")->required()->check(CLI::PositiveNumber);
        sub->add_option("--residue", r, "Residue r, 0 <= r < t")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--order", order, "Truncation order");
        sub->add_flag("--json", json, "JSON output");
    }

    auto *catalog = app.add_subcommand("catalog", "Run the built-in claim catalog");
    catalog->add_option("--order", order, "Truncation order");
    catalog->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    catalog->add_flag("--json", json, "JSON output");

    auto *scan_cmd = app.add_subcommand("scan", "Search a product family for vanishing progressions");
    scan_cmd->add_option("--family", family, "Built-in family name or template JSON file")->required();
    scan_cmd->add_option("--order", order, "Scan order (>= 200)");
    scan_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    scan_cmd->add_flag("--json", json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (expand->parsed()) {
            const ProductSpec spec = parse_spec(spec_text);
            const Series s = product_expand(spec, order.value_or(default_order(1000)));
            if (json) {
                out << to_json(s).dump(2) << '\n';
            } else {
                for (const auto &[e, c] : s.terms()) {
                    out << e << ' ' << c.get_str() << '\n';
                }
            }
            return exit_ok;
        }
        if (verify->parsed() || prove->parsed()) {
            if (r >= t) {
                throw UsageError("residue must be less than the modulus");
            }
            const Claim claim{"cli", parse_spec(spec_text), t, r, "command line", {}};
            const Exponent n = order.value_or(default_order(1000));
            const ProofReport rep = verify->parsed() ? verify_claim(claim, n) : prove_claim(claim, n);
            if (json) {
                out << to_json(rep).dump(2) << '\n';
            } else {
                write_report_text(out, rep);
            }
            switch (rep.status) {
            case ProofStatus::refuted:
                return exit_refuted;
            case ProofStatus::inapplicable:
                return exit_inapplicable;
            default:
                return exit_ok;
            }
        }
        if (catalog->parsed()) {
            const auto reports = run_claims(builtin_catalog(), order.value_or(default_order(1000)), jobs);
            const Json report = run_report(reports);
            if (json) {
                out << report.dump(2) << '\n';
            } else {
                for (const auto &rep : reports) {
                    out << rep.claim_id << ' ' << to_string(rep.status);
                    if (rep.expansion) {
                        out << " expansion=" << to_string(*rep.expansion);
                    }
                    out << '\n';
                }
                const auto &sum = report["summary"];
                out << "certified=" << sum["certified"] << " verified=" << sum["verified"]
                    << " refuted=" << sum["refuted"] << " inapplicable=" << sum["inapplicable"] << '\n';
            }
            const bool refuted = std::any_of(reports.begin(), reports.end(), [](const ProofReport &rep) {
                return rep.status == ProofStatus::refuted || rep.expansion == ProofStatus::refuted;
            });
            return refuted ? exit_refuted : exit_ok;
        }
        if (scan_cmd->parsed()) {
            FamilyTemplate tmpl;
            if (auto builtin = find_family(family)) {
                tmpl = *builtin;
            } else {
                std::ifstream in(family);
                if (!in) {
                    throw UsageError("unknown family '" + family + "'");
                }
                Json j;
                try {
                    j = Json::parse(in);
                } catch (const nlohmann::json::exception &e) {
                    throw UsageError(std::string("cannot parse family file: ") + e.what());
                }
                tmpl = family_from_json(j);
            }
            tmpl.order = order.value_or(default_order(tmpl.order));
            const auto findings = scan(tmpl, jobs);
            if (json) {
                out << scan_report(tmpl, findings).dump(2) << '\n';
            } else {
                for (const auto &f : findings) {
                    out << to_string(f.spec) << " t=" << f.t << " r=" << f.r << ' ' << to_string(f.evidence) << ' '
                        << (f.catalog_id.empty() ? "new-empirical" : f.catalog_id) << '\n';
                }
            }
            return exit_ok;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace qdissect
