#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace arrzeta {

using Int = mpz_class;
using Rat = mpq_class;

// Malformed user input (text format, JSON, CLI arguments, bad preconditions
// that callers can trigger). CLI exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematically guaranteed condition failed at runtime. Always a bug in
// this library, never bad input. CLI exit code 2.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// Canonicalized rational from numerator/denominator.
Rat make_rat(const Int& num, const Int& den);

// Parses "p", "-p", "p/q". Throws InputError on anything else.
Rat parse_rat(const std::string& text);

// Canonical "p" or "p/q" form, as used in all JSON payloads.
std::string rat_str(const Rat& q);

bool rat_is_integer(const Rat& q);

// q - floor(q), in [0, 1).
Rat rat_mod1(const Rat& q);

// Checked narrowing; throws InvariantError if out of range.
long to_long(const Int& z);

}  // namespace arrzeta
