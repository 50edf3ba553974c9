#include "qdissect/spec_parser.hpp"

#include <cctype>
#include <cstdint>

namespace qdissect {

SpecParseError::SpecParseError(const std::string &message, std::size_t offset)
    : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ProductSpec product()
    {
        ProductSpec spec;
        skip_space();
        if (at_end()) {
            fail("expected '('");
        }
        while (!at_end()) {
            spec.factors.push_back(factor());
            skip_space();
        }
        return spec;
    }

private:
    struct Term {
        int sign;
        std::int64_t exp;
    };

    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string &message) const { throw SpecParseError(message, pos_); }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::int64_t uint()
    {
        skip_space();
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (pos_ - start >= 12) {
                fail("number too large");
            }
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected unsigned integer");
        }
        return v;
    }

    Term term()
    {
        const int sign = accept('-') ? -1 : 1;
        expect('q');
        return {sign, accept('^') ? uint() : 1};
    }

    PochFactor factor()
    {
        skip_space();
        const std::size_t start = pos_;
        expect('(');
        const Term x = term();
        expect(',');
        const Term y = term();
        expect(';');
        expect('q');
        expect('^');
        const std::int64_t m = uint();
        expect(')');
        std::int64_t power = 1;
        if (accept('^')) {
            power = uint();
        }
        if (x.exp + y.exp != m) {
            throw SpecParseError("exponents do not sum to modulus", start);
        }
        if (x.exp < 1 || y.exp < 1) {
            throw SpecParseError("exponents must be positive", start);
        }
        if (power < 1 || power > 64) {
            throw SpecParseError("power must lie in 1..64", start);
        }
        return PochFactor::pair(x.sign, y.sign, x.exp, m, static_cast<unsigned>(power));
    }
};

} // namespace

ProductSpec parse_spec(std::string_view text) { return Parser(text).product(); }

} // namespace qdissect
