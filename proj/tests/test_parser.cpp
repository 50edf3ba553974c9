#include <doctest.h>

#include "oracles.hpp"
#include "qdissect/spec_parser.hpp"

using namespace qdissect;

TEST_CASE("parse_spec")
{
    const ProductSpec a = parse_spec("(q,q^4;q^5) (q^6,q^9;q^15)^2");
    CHECK(a == ProductSpec{{PochFactor::pair(1, 1, 1, 5), PochFactor::pair(1, 1, 6, 15, 2)}});
    CHECK(parse_spec("(-q^9,-q^12;q^21)") == ProductSpec{{PochFactor::pair(-1, -1, 9, 21)}});
    CHECK(parse_spec("(q^4,-q;q^5)") == ProductSpec{{PochFactor::pair(1, -1, 4, 5)}});
    CHECK(parse_spec("  ( q , q^4 ; q^5 )^3(q,q;q^2)  ") ==
          ProductSpec{{PochFactor::pair(1, 1, 1, 5, 3), PochFactor::pair(1, 1, 1, 2)}});
}

TEST_CASE("parse_spec semantic errors")
{
    CHECK_THROWS_WITH_AS(parse_spec("(q,q^3;q^5)"), "exponents do not sum to modulus at offset 0", SpecParseError);
    try {
        parse_spec("(q,q^4;q^5) (q^2,q^2;q^5)");
        FAIL("no error");
    } catch (const SpecParseError &e) {
        CHECK(e.offset() == 12);
    }
    CHECK_THROWS_AS(parse_spec("(q,q^4;q^5)^0"), SpecParseError);
    CHECK_THROWS_AS(parse_spec("(q^0,q^5;q^5)"), SpecParseError);
}

TEST_CASE("parse_spec syntax errors carry offsets")
{
    const struct {
        const char *text;
        std::size_t offset;
    } cases[] = {
        {"(q;q^1)", 2}, {"", 0}, {"q", 0}, {"(q,q^4;q5)", 8}, {"(q,q^4;q^5", 10},
        {"(q,q^4;q^5)^", 12}, {"(q,q^4;q^5) x", 12}, {"(p,q^4;q^5)", 1}, {"(q,q^;q^5)", 5},
    };
    for (const auto &c : cases) {
        CAPTURE(c.text);
        try {
            parse_spec(c.text);
            FAIL("no error");
        } catch (const SpecParseError &e) {
            CHECK(e.offset() == c.offset);
        }
    }
}

TEST_CASE("round trip")
{
    oracle::Gen gen(7);
    for (int i = 0; i < 250; ++i) {
        ProductSpec spec;
        const auto k = gen.range(1, 4);
        for (int j = 0; j < k; ++j) {
            const auto m = gen.range(2, 40);
            spec.factors.push_back(PochFactor::pair(gen.sign(), gen.sign(), gen.range(1, m - 1), m,
                                                    static_cast<unsigned>(gen.range(1, 4))));
        }
        const std::string text = to_string(spec);
        CAPTURE(text);
        CHECK(parse_spec(text) == spec);
        CHECK(to_string(parse_spec(text)) == text);
    }
}
