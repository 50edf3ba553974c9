#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdissect/product.hpp"
#include "qdissect/verifier.hpp"

namespace qdissect {

enum class SignChoice {
    plus,
    minus,
    /// plus and minus
    matched,
    /// all four sign pairs
    any,
};

/// (s1 q^x, s1' q^(m-x); q^m)^p (s2 q^y, s2' q^(M-y); q^M)^s over
/// x in offsets[0], y in offsets[1].
struct FamilyTemplate {
    std::string name;
    std::int64_t m = 5;
    std::int64_t M = 15;
    unsigned p = 1;
    unsigned s = 1;
    std::array<std::pair<std::int64_t, std::int64_t>, 2> offsets{{{1, 4}, {1, 14}}};
    std::array<SignChoice, 2> signs{SignChoice::plus, SignChoice::plus};
    std::int64_t t = 5;
    Exponent order = 500;

    /// Throws std::invalid_argument unless m | M, both offset ranges lie in
    /// (0, m) and (0, M), powers are positive and t >= 2.
    void validate() const;
    /// Distinct products of the family, in enumeration order.
    std::vector<ProductSpec> instances() const;
};

enum class FindingEvidence { empirical, certified };

struct Finding {
    ProductSpec spec;
    std::int64_t t = 1;
    std::int64_t r = 0;
    Exponent order = 0;
    FindingEvidence evidence = FindingEvidence::empirical;
    /// Id of the matching catalog claim; empty marks a new empirical finding.
    std::string catalog_id;
};

std::string to_string(FindingEvidence e);
std::string to_string(SignChoice s);
std::optional<SignChoice> parse_sign_choice(const std::string &s);

/// Named templates: a, b, c (mod 5), e, f, g, h, i, j, k, o (mod 7).
std::vector<FamilyTemplate> builtin_families();
std::optional<FamilyTemplate> find_family(const std::string &name);

/// Every instance and residue whose coefficients vanish up to the template
/// order (>= 200, std::invalid_argument otherwise). Findings the prover
/// accepts are certified; the rest stay empirical.
std::vector<Finding> scan(const FamilyTemplate &tmpl, unsigned jobs = 0);

} // namespace qdissect
