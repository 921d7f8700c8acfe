#pragma once

#include <string>
#include <string_view>

#include "mnsr/ft_order.hpp"
#include "mnsr/ideals.hpp"
#include "mnsr/morphisms.hpp"
#include "mnsr/semiring.hpp"

namespace mnsr {

// Algebra file: header lines `size K`, `m M`, `n N`, then an `f` payload and
// a `g` payload. A payload is either `f table` followed by K^M whitespace
// separated entries (row-major, leftmost argument most significant) or
// `f rule NAME` with NAME one of mod-add, mod-mul, union, intersection.
// Blank lines and `#` comments are allowed everywhere.
mn_semiring parse_algebra_text(std::string_view text, limits bounds = {});
mn_semiring parse_algebra_file(const std::string& path, limits bounds = {});

// Emits the explicit-table form; parsing it back reproduces the tables
// bit-exactly.
std::string serialize_algebra(const mn_semiring& s);

// Poset file: one `a <= b` per line.
atom_poset parse_poset_text(std::string_view text);
atom_poset parse_poset_file(const std::string& path);

// Assignment file: one `a = p/q` per line.
reliability_assignment parse_assignment_text(std::string_view text);
reliability_assignment parse_assignment_file(const std::string& path);

// Comma-separated element list, e.g. "0,2,4".
carrier_subset parse_subset(std::string_view text, unsigned carrier_size);
std::string format_subset(const carrier_subset& s);

// Blocks separated by '|', elements by ',': "0,3|1,4|2,5". Must cover the
// carrier exactly.
congruence parse_partition(std::string_view text, unsigned carrier_size);
std::string format_partition(const congruence& c);

// Comma-separated images indexed by domain element: "0,1,2,0,1,2".
morphism parse_map(std::string_view text, unsigned codomain_size);
std::string format_map(const morphism& phi);

}  // namespace mnsr
