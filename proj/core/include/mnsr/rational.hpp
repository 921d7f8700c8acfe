#pragma once

#include <gmpxx.h>

#include <string>

#include "mnsr/errors.hpp"

namespace mnsr {

// Exact rational arithmetic; the reliability semantics never rounds.
using rational = mpq_class;

// Parses "p/q" or "p" and validates 0 <= value <= 1.
rational parse_probability(const std::string& text);

std::string to_string(const rational& q);

}  // namespace mnsr
