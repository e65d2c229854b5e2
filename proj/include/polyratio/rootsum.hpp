#pragma once

#include <cstddef>
#include <vector>

#include "polyratio/rational.hpp"

namespace polyratio {

/// Sum of square roots of nonnegative rationals, kept symbolic so that sign
/// decisions can be certified. Exact-backend perimeters are values of this
/// form: each edge contributes sqrt of its exact squared length.
///
/// Comparisons are evaluated by interval arithmetic with directed rounding
/// at 64, 128 then 256 bits of precision; if the interval still straddles
/// the threshold at 256 bits the comparison raises PrecisionExhausted rather
/// than guessing.
class RootSum {
public:
    RootSum() = default;

    /// Adds sqrt(square); square must be >= 0.
    void add_sqrt(const Rat& square);
    void add(const RootSum& other);

    std::size_t term_count() const { return squares_.size(); }
    const std::vector<Rat>& squared_terms() const { return squares_; }

    /// Nearest-double evaluation (128-bit intermediate).
    double to_double() const;

    /// Certified sign of (sum - rhs): -1, 0 only when exactly representable
    /// stays impossible to certify, so 0 is never returned; +1 or -1, or
    /// PrecisionExhausted.
    int compare(const Rat& rhs) const;

    bool exceeds(const Rat& rhs) const { return compare(rhs) > 0; }

private:
    std::vector<Rat> squares_;
};

} // namespace polyratio
