#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qdissect/product.hpp"

namespace qdissect {

/// Syntax or semantic error in a product spec, at a byte offset.
class SpecParseError : public std::invalid_argument {
public:
    SpecParseError(const std::string &message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// product := factor+ ; factor := "(" term "," term ";" "q^" uint ")" ("^" uint)?
/// term := "-"? "q" ("^" uint)?
/// Whitespace may appear between tokens. The two term exponents must sum to
/// the base exponent.
ProductSpec parse_spec(std::string_view text);

} // namespace qdissect
