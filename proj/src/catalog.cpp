#include <string>
#include <vector>

#include "qdissect/verifier.hpp"

namespace qdissect {

namespace {

PochFactor pair(int sign, std::int64_t a, std::int64_t m, unsigned power = 1)
{
    return PochFactor::pair(sign, sign, a, m, power);
}

struct Member {
    std::int64_t param;
    std::int64_t r;
};

const char *sign_name(int s) { return s > 0 ? "plus" : "minus"; }

void add(std::vector<Claim> &out, std::string id, std::vector<PochFactor> factors, std::int64_t t, std::int64_t r,
         std::string source, std::vector<std::string> refs = {})
{
    out.push_back(Claim{std::move(id), ProductSpec{std::move(factors)}, t, r, std::move(source), std::move(refs)});
}

} // namespace

std::vector<Claim> builtin_catalog()
{
    std::vector<Claim> out;
    const int signs[] = {1, -1};

    // modulus 5 / 15
    for (int s : signs) {
        add(out, std::string("m5-a-") + sign_name(s), {pair(1, 1, 5), pair(s, 6, 15, 2)}, 5, 3,
            "mod 5: (q,q^4;q^5) times a squared mod-15 pair");
    }
    for (const auto &[alpha, r] : {Member{2, 2}, Member{3, 4}, Member{7, 3}}) {
        for (int s : signs) {
            std::vector<std::string> refs;
            if (alpha == 2) {
                refs.push_back("prior-work family (5l,15l;2,1) at l=1, t=1");
            } else if (alpha == 7) {
                refs.push_back("prior-work family (5l,15l;2,1) at l=1, t=4");
            }
            add(out, "m5-b" + std::to_string(alpha) + "-" + sign_name(s), {pair(s, 1, 5, 2), pair(1, alpha, 15)}, 5, r,
                "mod 5: squared (q,q^4;q^5) times a mod-15 pair", refs);
        }
    }
    for (const auto &[beta, r] : {Member{1, 3}, Member{4, 4}, Member{6, 1}}) {
        for (int s : signs) {
            std::vector<std::string> refs;
            if (beta == 4) {
                refs.push_back("prior-work family (5l,15l;2,1) at l=1, t=2");
            } else if (beta == 6) {
                refs.push_back("prior-work family (5l,15l;2,1) at l=1, t=3");
            }
            add(out, "m5-c" + std::to_string(beta) + "-" + sign_name(s), {pair(s, 2, 5, 2), pair(1, beta, 15)}, 5, r,
                "mod 5: squared (q^2,q^3;q^5) times a mod-15 pair", refs);
        }
    }

    // modulus 7 / 21, single powers
    const struct {
        const char *symbol;
        std::int64_t base;
        Member members[3];
    } single[] = {
        {"e", 1, {{2, 5}, {5, 6}, {9, 2}}},
        {"f", 2, {{3, 5}, {4, 3}, {10, 4}}},
        {"g", 3, {{1, 4}, {6, 1}, {8, 6}}},
    };
    for (const auto &fam : single) {
        for (const auto &[alpha, r] : fam.members) {
            for (int s : signs) {
                add(out, std::string("m7-") + fam.symbol + std::to_string(alpha) + "-" + sign_name(s),
                    {pair(s, fam.base, 7), pair(1, alpha, 21)}, 7, r,
                    "mod 7: (q^" + std::to_string(fam.base) + ",q^" + std::to_string(7 - fam.base) +
                        ";q^7) times a mod-21 pair");
            }
        }
    }

    // modulus 7 / 21, squared mod-21 pair
    const struct {
        const char *symbol;
        std::int64_t base;
        Member members[3];
        std::int64_t ref_t;
    } squared[] = {
        {"h", 1, {{3, 6}, {4, 2}, {10, 4}}, 1},
        {"i", 2, {{1, 2}, {6, 3}, {8, 6}}, 3},
        {"j", 3, {{2, 4}, {5, 6}, {9, 5}}, 0},
    };
    for (const auto &fam : squared) {
        for (const auto &[u, r] : fam.members) {
            const bool ref = (fam.ref_t == 1 && u == 3) || (fam.ref_t == 3 && u == 1);
            for (int s : signs) {
                std::vector<std::string> refs;
                if (ref) {
                    refs.push_back("prior-work family (7l,21l;1,2) at l=1, t=" + std::to_string(fam.ref_t));
                }
                add(out, std::string("m7-") + fam.symbol + std::to_string(u) + "-" + sign_name(s),
                    {pair(1, fam.base, 7), pair(s, u, 21, 2)}, 7, r,
                    "mod 7: (q^" + std::to_string(fam.base) + ",q^" + std::to_string(7 - fam.base) +
                        ";q^7) times a squared mod-21 pair",
                    refs);
            }
        }
    }

    // modulus 7 / 21, fixed negative pair
    add(out, "m7-k", {pair(1, 1, 7), pair(-1, 9, 21)}, 7, 4, "mod 7: (q,q^6;q^7)(-q^9,-q^12;q^21)");
    add(out, "m7-l", {pair(1, 2, 7), pair(-1, 3, 21)}, 7, 6, "mod 7: (q^2,q^5;q^7)(-q^3,-q^18;q^21)");
    add(out, "m7-t", {pair(1, 3, 7), pair(-1, 6, 21)}, 7, 5, "mod 7: (q^3,q^4;q^7)(-q^6,-q^15;q^21)");

    // modulus 7 / 21, squared mod-7 pair
    const struct {
        const char *symbol;
        std::int64_t base;
        std::int64_t alpha;
        std::int64_t r;
        std::int64_t ref_t;
    } squared_base[] = {{"o", 1, 6, 4, 1}, {"p", 2, 9, 1, 2}, {"z", 3, 3, 5, 3}};
    for (const auto &fam : squared_base) {
        for (int s : signs) {
            add(out, std::string("m7-") + fam.symbol + "-" + sign_name(s), {pair(s, fam.base, 7, 2), pair(1, fam.alpha, 21)},
                7, fam.r, "mod 7: squared mod-7 pair times a mod-21 pair",
                {"prior-work family (7l,21l;2,1) at l=1, t=" + std::to_string(fam.ref_t)});
        }
    }

    // cubes, outside the prover's scope
    add(out, "hirschhorn-a-5n+2", {pair(-1, 1, 5), pair(1, 1, 10, 3)}, 5, 2, "Hirschhorn: (-q,-q^4;q^5)(q,q^9;q^10)^3");
    add(out, "hirschhorn-a-5n+4", {pair(-1, 1, 5), pair(1, 1, 10, 3)}, 5, 4, "Hirschhorn: (-q,-q^4;q^5)(q,q^9;q^10)^3");
    add(out, "hirschhorn-b-5n+1", {pair(-1, 2, 5), pair(1, 3, 10, 3)}, 5, 1, "Hirschhorn: (-q^2,-q^3;q^5)(q^3,q^7;q^10)^3");
    add(out, "hirschhorn-b-5n+4", {pair(-1, 2, 5), pair(1, 3, 10, 3)}, 5, 4, "Hirschhorn: (-q^2,-q^3;q^5)(q^3,q^7;q^10)^3");
    add(out, "tang-a1-5n+3", {pair(-1, 1, 5, 3), pair(1, 3, 10)}, 5, 3, "Tang: (-q,-q^4;q^5)^3 (q^3,q^7;q^10)");
    add(out, "tang-b1-5n+4", {pair(-1, 2, 5, 3), pair(1, 1, 10)}, 5, 4, "Tang: (-q^2,-q^3;q^5)^3 (q,q^9;q^10)");
    return out;
}

} // namespace qdissect
