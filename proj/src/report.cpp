#include "qdissect/report.hpp"

#include <stdexcept>
#include <string>

namespace qdissect {

Json to_json(const Series &s)
{
    Json coeffs = Json::array();
    for (const auto &[e, c] : s.terms()) {
        coeffs.push_back(Json::array({e, c.get_str()}));
    }
    return Json{{"lo", s.lo()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const CancellationReport &r)
{
    Json pairing = Json::array();
    for (const auto &[i, j] : r.pairing) {
        pairing.push_back(Json::array({i, j}));
    }
    Json out{{"t", r.t},
             {"r", r.r},
             {"mode", to_string(r.mode)},
             {"status", r.cancelled ? "cancelled" : "residual"},
             {"pairing", std::move(pairing)}};
    out["residual_first_exponent"] = r.residual_first_exponent ? Json(*r.residual_first_exponent) : Json(nullptr);
    return out;
}

namespace {

Json group_json(const MultiplierGroup &g)
{
    Json out = to_json(g.report);
    out["scale"] = g.scale;
    Json mult = Json::array();
    for (const auto &m : g.multipliers) {
        mult.push_back(to_string(m));
    }
    out["multipliers"] = std::move(mult);
    Json terms = Json::array();
    for (const auto &t : g.terms) {
        Json parts = Json::array();
        for (const auto &p : t.component.parts) {
            parts.push_back(to_string(p));
        }
        terms.push_back(Json{{"term", to_string(t.term)}, {"form", to_string(t.form)}, {"component", std::move(parts)}});
    }
    out["terms"] = std::move(terms);
    return out;
}

} // namespace

Json to_json(const ProofReport &r)
{
    Json out{{"id", r.claim_id}, {"status", to_string(r.status)}, {"order", r.order}};
    if (r.counterexample) {
        out["first_counterexample"] = Json{{"n", r.counterexample->n}, {"coeff", r.counterexample->coeff.get_str()}};
    } else {
        out["first_counterexample"] = nullptr;
    }
    if (r.groups.empty()) {
        out["groups"] = nullptr;
    } else {
        Json groups = Json::array();
        for (const auto &g : r.groups) {
            groups.push_back(group_json(g));
        }
        out["groups"] = std::move(groups);
    }
    if (r.expansion) {
        out["expansion"] = to_string(*r.expansion);
    }
    if (!r.reason.empty()) {
        out["reason"] = r.reason;
    }
    return out;
}

Json to_json(const Finding &f)
{
    return Json{{"spec", to_string(f.spec)},
                {"t", f.t},
                {"r", f.r},
                {"order", f.order},
                {"evidence", to_string(f.evidence)},
                {"label", f.catalog_id.empty() ? "new-empirical" : "catalog"},
                {"catalog_id", f.catalog_id.empty() ? Json(nullptr) : Json(f.catalog_id)}};
}

Json to_json(const FamilyTemplate &f)
{
    return Json{{"name", f.name},
                {"moduli", Json::array({f.m, f.M})},
                {"powers", Json::array({f.p, f.s})},
                {"offsets", Json::array({Json::array({f.offsets[0].first, f.offsets[0].second}),
                                         Json::array({f.offsets[1].first, f.offsets[1].second})})},
                {"signs", Json::array({to_string(f.signs[0]), to_string(f.signs[1])})},
                {"t", f.t},
                {"order", f.order}};
}

FamilyTemplate family_from_json(const Json &j)
{
    try {
        FamilyTemplate f;
        f.name = j.value("name", std::string("custom"));
        const auto &moduli = j.at("moduli");
        f.m = moduli.at(0).get<std::int64_t>();
        f.M = moduli.at(1).get<std::int64_t>();
        const auto &powers = j.at("powers");
        f.p = powers.at(0).get<unsigned>();
        f.s = powers.at(1).get<unsigned>();
        for (std::size_t i = 0; i < 2; ++i) {
            const auto &range = j.at("offsets").at(i);
            f.offsets[i] = {range.at(0).get<std::int64_t>(), range.at(1).get<std::int64_t>()};
            const auto choice = parse_sign_choice(j.at("signs").at(i).get<std::string>());
            if (!choice) {
                throw std::invalid_argument("unknown sign choice");
            }
            f.signs[i] = *choice;
        }
        f.t = j.value("t", f.m);
        f.order = j.value("order", Exponent{500});
        f.validate();
        return f;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed family template: ") + e.what());
    }
}

Json run_report(const std::vector<ProofReport> &reports)
{
    Json claims = Json::array();
    int counts[4] = {0, 0, 0, 0};
    for (const auto &r : reports) {
        claims.push_back(to_json(r));
        ++counts[static_cast<int>(r.status)];
    }
    return Json{{"claims", std::move(claims)},
                {"summary", Json{{"certified", counts[0]},
                                 {"verified", counts[1]},
                                 {"refuted", counts[2]},
                                 {"inapplicable", counts[3]}}}};
}

Json scan_report(const FamilyTemplate &tmpl, const std::vector<Finding> &findings)
{
    Json list = Json::array();
    int certified = 0;
    int fresh = 0;
    for (const auto &f : findings) {
        list.push_back(to_json(f));
        certified += f.evidence == FindingEvidence::certified;
        fresh += f.catalog_id.empty();
    }
    return Json{{"family", to_json(tmpl)},
                {"findings", std::move(list)},
                {"summary", Json{{"findings", findings.size()}, {"certified", certified}, {"new_empirical", fresh}}}};
}

} // namespace qdissect
