#include "mnsr/op_table.hpp"

#include <limits>

namespace mnsr {

std::size_t table_size(unsigned arity, unsigned k) {
  std::size_t size = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (k != 0 && size > std::numeric_limits<std::size_t>::max() / k)
      throw carrier_too_large("operation table would exceed addressable size");
    size *= k;
  }
  return size;
}

op_table::op_table(unsigned arity, unsigned carrier_size, std::vector<element> entries)
    : arity_(arity), k_(carrier_size), entries_(std::move(entries)) {
  if (carrier_size == 0)
    throw carrier_mismatch("carrier must be nonempty");
  if (entries_.size() != table_size(arity, k_))
    throw size_mismatch("table has " + std::to_string(entries_.size()) +
                        " entries, expected " + std::to_string(table_size(arity, k_)));
  for (element e : entries_)
    if (e >= k_)
      throw index_out_of_range("table entry " + std::to_string(e) +
                               " outside carrier of size " + std::to_string(k_));
}

op_table op_table::from_function(
    unsigned arity, unsigned carrier_size,
    const std::function<element(std::span<const element>)>& fn) {
  std::vector<element> entries;
  entries.reserve(table_size(arity, carrier_size));
  std::vector<element> args(arity, 0);
  do {
    entries.push_back(fn(args));
  } while (next_tuple(args, carrier_size));
  return op_table(arity, carrier_size, std::move(entries));
}

element op_table::eval(std::span<const element> args) const {
  if (args.size() != arity_)
    throw arity_mismatch("operation expects " + std::to_string(arity_) +
                         " arguments, got " + std::to_string(args.size()));
  std::size_t index = 0;
  for (element a : args) {
    if (a >= k_)
      throw index_out_of_range("argument " + std::to_string(a) +
                               " outside carrier of size " + std::to_string(k_));
    index = index * k_ + a;
  }
  return entries_[index];
}

element op_table::eval(std::initializer_list<element> args) const {
  return eval(std::span<const element>(args.begin(), args.size()));
}

bool next_tuple(std::vector<element>& tuple, unsigned k) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < k) return true;
    tuple[i] = 0;
  }
  return false;
}

}  // namespace mnsr
