#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mnsr {

// Base class for recoverable errors raised on bad caller input.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct arity_mismatch : error { using error::error; };
struct index_out_of_range : error { using error::error; };
struct budget_exceeded : error { using error::error; };
struct carrier_mismatch : error { using error::error; };
struct arity_bound : error { using error::error; };
struct no_identity : error { using error::error; };
struct carrier_too_large : error { using error::error; };
struct not_a_congruence : error { using error::error; };
struct not_a_homomorphism : error { using error::error; };
struct size_mismatch : error { using error::error; };
struct position_out_of_range : error { using error::error; };
struct empty_subset : error { using error::error; };
struct empty_intersection : error { using error::error; };
struct unassigned_atom : error { using error::error; };
struct poset_cycle : error { using error::error; };

// Term-text parse failure; `position` is a byte offset into the input.
struct syntax_error : error {
  std::size_t position;
  syntax_error(const std::string& what, std::size_t pos)
      : error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// An f/g application with no arguments at all.
struct empty_operator : syntax_error {
  using syntax_error::syntax_error;
};

// Malformed line-based input file; `line` is 1-based.
struct format_error : error {
  std::size_t line;
  format_error(const std::string& what, std::size_t line_no)
      : error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// A broken internal invariant. Indicates a bug, not bad input.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mnsr
