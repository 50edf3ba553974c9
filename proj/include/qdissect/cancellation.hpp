#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdissect/lattice.hpp"

namespace qdissect {

enum class CancelMode {
    /// signed multiset of canonical forms cancels exactly (all n)
    certified,
    /// signed sum of part series vanishes to the given order
    truncated,
};

std::string to_string(CancelMode mode);

/// sign * (sum of the decomp's parts)
struct SignedDecomp {
    int sign = 1;
    ResidueClassDecomp decomp;
};

struct CancellationReport {
    std::int64_t t = 1;
    std::int64_t r = 0;
    CancelMode mode = CancelMode::certified;
    bool cancelled = false;
    /// Pairs of indices into the flattened part list (decomps in order, parts
    /// in order within each), smaller index first.
    std::vector<std::array<std::size_t, 2>> pairing;
    /// Least exponent of the nonzero residual sum, if it shows up below the
    /// order.
    std::optional<Exponent> residual_first_exponent;
};

/// All decomps must share (t, r); throws std::invalid_argument otherwise.
/// Failure to cancel is a report outcome, not an error.
CancellationReport components_cancel(std::span<const SignedDecomp> xs, Exponent order, CancelMode mode);

} // namespace qdissect
