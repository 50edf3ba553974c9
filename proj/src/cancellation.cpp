#include "qdissect/cancellation.hpp"

#include <stdexcept>

namespace qdissect {

std::string to_string(CancelMode mode) { return mode == CancelMode::certified ? "certified" : "truncated"; }

namespace {

struct SignedPart {
    int sign;
    QuadLatticeSum form;
};

std::vector<SignedPart> flatten(std::span<const SignedDecomp> xs)
{
    std::vector<SignedPart> out;
    for (const auto &x : xs) {
        for (const auto &part : x.decomp.parts) {
            QuadLatticeSum unsigned_part = part;
            unsigned_part.sgn = 1;
            out.push_back({x.sign * part.sgn, unsigned_part});
        }
    }
    return out;
}

Series signed_sum(const std::vector<SignedPart> &parts, const std::vector<bool> &skip, Exponent order)
{
    Series acc = Series::zero(order);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (skip[i]) {
            continue;
        }
        const Series s = lattice_series(parts[i].form, order);
        acc = parts[i].sign > 0 ? acc + s : acc - s;
    }
    return acc;
}

} // namespace

CancellationReport components_cancel(std::span<const SignedDecomp> xs, Exponent order, CancelMode mode)
{
    CancellationReport report;
    report.mode = mode;
    if (!xs.empty()) {
        report.t = xs.front().decomp.t;
        report.r = xs.front().decomp.r;
    }
    for (const auto &x : xs) {
        if (x.decomp.t != report.t || x.decomp.r != report.r) {
            throw std::invalid_argument("components do not share (t, r)");
        }
    }
    const auto parts = flatten(xs);
    std::vector<bool> matched(parts.size(), false);
    if (mode == CancelMode::certified) {
        std::vector<QuadLatticeSum> keys;
        keys.reserve(parts.size());
        for (const auto &p : parts) {
            keys.push_back(canonicalize(p.form));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (matched[i]) {
                continue;
            }
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                if (!matched[j] && parts[j].sign == -parts[i].sign && keys[j] == keys[i]) {
                    matched[i] = matched[j] = true;
                    report.pairing.push_back({i, j});
                    break;
                }
            }
        }
        report.cancelled = report.pairing.size() * 2 == parts.size();
    }
    if (!report.cancelled) {
        const Series rest = signed_sum(parts, matched, order);
        report.residual_first_exponent = rest.valuation();
        if (mode == CancelMode::truncated) {
            report.cancelled = !report.residual_first_exponent.has_value();
        }
    }
    return report;
}

} // namespace qdissect
