#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pcoh {

// Exact rational scalar. All construction goes through helpers that
// canonicalize, because mpq_class(p, q) does not reduce p/q on its own.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q" with arbitrary-precision integers.
// Returns std::nullopt on malformed input (empty, stray characters, q == 0).
std::optional<Rat> rat_parse(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" reduced.
std::string rat_str(const Rat& r);

}  // namespace pcoh
