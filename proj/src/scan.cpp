#include "qdissect/scan.hpp"

#include <algorithm>
#include <stdexcept>

#include "qdissect/parallel.hpp"

namespace qdissect {

std::string to_string(FindingEvidence e) { return e == FindingEvidence::certified ? "certified" : "empirical"; }

std::string to_string(SignChoice s)
{
    switch (s) {
    case SignChoice::plus:
        return "plus";
    case SignChoice::minus:
        return "minus";
    case SignChoice::matched:
        return "matched";
    case SignChoice::any:
        return "any";
    }
    return "plus";
}

std::optional<SignChoice> parse_sign_choice(const std::string &s)
{
    for (auto c : {SignChoice::plus, SignChoice::minus, SignChoice::matched, SignChoice::any}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    return std::nullopt;
}

void FamilyTemplate::validate() const
{
    if (m < 2 || M < 2 || M % m != 0) {
        throw std::invalid_argument("template moduli must satisfy m | M");
    }
    if (p < 1 || s < 1) {
        throw std::invalid_argument("template powers must be positive");
    }
    const std::int64_t mods[2] = {m, M};
    for (int i = 0; i < 2; ++i) {
        const auto [lo, hi] = offsets[i];
        if (lo < 1 || hi >= mods[i] || lo > hi) {
            throw std::invalid_argument("template offsets must lie strictly between 0 and the modulus");
        }
    }
    if (t < 2) {
        throw std::invalid_argument("template scan modulus must be at least 2");
    }
}

namespace {

std::vector<std::pair<int, int>> sign_pairs(SignChoice c)
{
    switch (c) {
    case SignChoice::plus:
        return {{1, 1}};
    case SignChoice::minus:
        return {{-1, -1}};
    case SignChoice::matched:
        return {{1, 1}, {-1, -1}};
    case SignChoice::any:
        return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    }
    return {};
}

} // namespace

std::vector<ProductSpec> FamilyTemplate::instances() const
{
    validate();
    std::vector<ProductSpec> out;
    std::vector<ProductSpec> seen;
    for (std::int64_t x = offsets[0].first; x <= offsets[0].second; ++x) {
        for (const auto &[s1, s1b] : sign_pairs(signs[0])) {
            for (std::int64_t y = offsets[1].first; y <= offsets[1].second; ++y) {
                for (const auto &[s2, s2b] : sign_pairs(signs[1])) {
                    ProductSpec spec{{PochFactor::pair(s1, s1b, x, m, p), PochFactor::pair(s2, s2b, y, M, s)}};
                    const ProductSpec key = spec.normalized();
                    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                        seen.push_back(key);
                        out.push_back(std::move(spec));
                    }
                }
            }
        }
    }
    return out;
}

std::vector<FamilyTemplate> builtin_families()
{
    using SC = SignChoice;
    auto make = [](std::string name, std::int64_t m, std::int64_t M, unsigned p, unsigned s,
                   std::pair<std::int64_t, std::int64_t> x, std::pair<std::int64_t, std::int64_t> y, SC sx, SC sy) {
        FamilyTemplate f;
        f.name = std::move(name);
        f.m = m;
        f.M = M;
        f.p = p;
        f.s = s;
        f.offsets = {x, y};
        f.signs = {sx, sy};
        f.t = m;
        f.order = 500;
        return f;
    };
    return {
        make("a", 5, 15, 1, 2, {1, 1}, {1, 14}, SC::plus, SC::matched),
        make("b", 5, 15, 2, 1, {1, 1}, {1, 14}, SC::matched, SC::plus),
        make("c", 5, 15, 2, 1, {2, 2}, {1, 14}, SC::matched, SC::plus),
        make("e", 7, 21, 1, 1, {1, 1}, {1, 20}, SC::matched, SC::plus),
        make("f", 7, 21, 1, 1, {2, 2}, {1, 20}, SC::matched, SC::plus),
        make("g", 7, 21, 1, 1, {3, 3}, {1, 20}, SC::matched, SC::plus),
        make("h", 7, 21, 1, 2, {1, 1}, {1, 20}, SC::plus, SC::matched),
        make("i", 7, 21, 1, 2, {2, 2}, {1, 20}, SC::plus, SC::matched),
        make("j", 7, 21, 1, 2, {3, 3}, {1, 20}, SC::plus, SC::matched),
        make("k", 7, 21, 1, 1, {1, 3}, {1, 20}, SC::plus, SC::minus),
        make("o", 7, 21, 2, 1, {1, 3}, {1, 20}, SC::matched, SC::plus),
    };
}

std::optional<FamilyTemplate> find_family(const std::string &name)
{
    for (auto &f : builtin_families()) {
        if (f.name == name) {
            return f;
        }
    }
    return std::nullopt;
}

std::vector<Finding> scan(const FamilyTemplate &tmpl, unsigned jobs)
{
    tmpl.validate();
    if (tmpl.order < 200) {
        throw std::invalid_argument("scan order must be at least 200");
    }
    const auto specs = tmpl.instances();
    const auto catalog = builtin_catalog();
    auto per_spec = detail::parallel_map<std::vector<Finding>>(specs.size(), jobs, [&](std::size_t i) {
        std::vector<Finding> found;
        const Series s = product_expand(specs[i], tmpl.order);
        for (std::int64_t r = 0; r < tmpl.t; ++r) {
            bool vanishes = true;
            for (Exponent e = r; e <= tmpl.order && vanishes; e += tmpl.t) {
                vanishes = sgn(s.dense()[static_cast<std::size_t>(e)]) == 0;
            }
            if (!vanishes) {
                continue;
            }
            Finding f{specs[i], tmpl.t, r, tmpl.order, FindingEvidence::empirical, {}};
            const Claim claim{"scan", specs[i], tmpl.t, r, tmpl.name, {}};
            if (prove_claim(claim, tmpl.order).status == ProofStatus::certified) {
                f.evidence = FindingEvidence::certified;
            }
            const ProductSpec key = specs[i].normalized();
            for (const auto &c : catalog) {
                if (c.t == tmpl.t && c.r == r && c.spec.normalized() == key) {
                    f.catalog_id = c.id;
                    break;
                }
            }
            found.push_back(std::move(f));
        }
        return found;
    });
    std::vector<Finding> out;
    for (auto &v : per_spec) {
        for (auto &f : v) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

} // namespace qdissect
