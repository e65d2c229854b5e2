#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace polyratio {

/// Exact rational scalar. mpq_class values produced by the factories below
/// (and by arithmetic on them) are always canonical: lowest terms, positive
/// denominator.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double v);

inline double to_double(const Rat& q) { return q.get_d(); }

inline int sign_of(const Rat& q) { return sgn(q); }

/// Parses "p/q" or a plain integer string. Returns nullopt on malformed input
/// or zero denominator.
std::optional<Rat> parse_rational(const std::string& text);

/// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rat& q);

} // namespace polyratio
