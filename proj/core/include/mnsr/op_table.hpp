#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "mnsr/errors.hpp"

namespace mnsr {

// Index into the carrier {0, ..., k-1}.
using element = unsigned;

// Dense table of an m-ary operation on the carrier {0, ..., k-1}.
//
// Entries are stored in lexicographic argument order with the leftmost
// argument most significant, i.e. the value of op(x1, ..., xm) lives at
// ((x1 * k + x2) * k + ...) + xm. Closure (every entry < k) is checked at
// construction; tables are immutable afterwards.
class op_table {
 public:
  op_table(unsigned arity, unsigned carrier_size, std::vector<element> entries);

  static op_table from_function(
      unsigned arity, unsigned carrier_size,
      const std::function<element(std::span<const element>)>& fn);

  unsigned arity() const { return arity_; }
  unsigned carrier_size() const { return k_; }
  const std::vector<element>& entries() const { return entries_; }

  element eval(std::span<const element> args) const;
  element eval(std::initializer_list<element> args) const;

  bool operator==(const op_table&) const = default;

 private:
  unsigned arity_;
  unsigned k_;
  std::vector<element> entries_;
};

// k^arity, the entry count of a dense table. Throws carrier_too_large if the
// result does not fit in size_t.
std::size_t table_size(unsigned arity, unsigned k);

// Advances `tuple` to its lexicographic successor in {0..k-1}^len, treating
// the last position as least significant. Returns false once the tuple wraps
// back to all zeros, so a do/while loop visits every tuple exactly once.
bool next_tuple(std::vector<element>& tuple, unsigned k);

}  // namespace mnsr
