#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mnsr/semiring.hpp"

namespace mnsr {

// Exhaustive checkers refuse to run past this many elementary evaluations
// unless the caller raises the budget. They never fall back to sampling.
inline constexpr std::uint64_t default_budget = 100'000'000;

enum class witness_kind {
  assoc_fail,
  comm_fail,
  dist_fail,
  cancel_fail,
  zero_divisor,
  zero_sum,
  other,
};

// Counterexample to a checked law, with enough data to replay it.
//
// Layout by kind (positions are 1-based argument positions):
//   assoc_fail    args = {tuple of 2*arity-1}, positions = {i, j}; the i- and
//                 j-nestings of the tuple give lhs != rhs.
//   comm_fail     args = {tuple}, positions = {i, j}; swapping positions i,j
//                 changes the result from lhs to rhs.
//   dist_fail     args = {outer context of n-1, inner tuple of m},
//                 positions = {i}; lhs = g(ctx, f(inner) at i),
//                 rhs = f(g with each inner element substituted).
//   cancel_fail   args = {context of arity-1, {a, b}}, positions = {i};
//                 substituting a and b at position i both yield lhs (== rhs).
//   zero_divisor  args = {tuple with no zero}; g(tuple) = lhs = rhs = zero.
//   zero_sum      args = {tuple, not all zero}; f(tuple) = lhs = rhs = zero.
//   other         shape documented at the operation that produced it.
struct witness {
  witness_kind kind = witness_kind::other;
  bool on_g = false;
  std::vector<unsigned> positions;
  std::vector<std::vector<element>> args;
  element lhs = 0;
  element rhs = 0;
};

struct check_result {
  bool ok = true;
  std::optional<witness> counterexample;

  explicit operator bool() const { return ok; }
  static check_result pass() { return {}; }
  static check_result fail(witness w) { return {false, std::move(w)}; }
};

// Associativity of an m-ary operation: all nestings of two applications of
// op over a (2m-1)-tuple agree. Only adjacent nesting positions (i, i+1) are
// compared; equality chains to every pair i <= j.
check_result check_associativity(const op_table& op,
                                 std::uint64_t budget = default_budget);

// Invariance of op under argument permutations. Only adjacent transpositions
// are tested; they generate the full symmetric group.
check_result check_commutativity(const op_table& op,
                                 std::uint64_t budget = default_budget);

// g distributes over f: g(x1^{i-1}, f(a1^m), x_{i+1}^n) equals
// f applied to the g-images of the a's, for every position i.
check_result check_distributivity(const op_table& g, const op_table& f,
                                  std::uint64_t budget = default_budget);

// Least element neutral in every argument position, or nullopt. Operations
// of arity >= 3 can have more than one identity (e.g. ternary xor, where
// any repeated pad element cancels itself); all_identities lists them all.
std::optional<element> find_identity(const op_table& op);
std::vector<element> all_identities(const op_table& op);

// z forces g to return z whenever z occurs in any argument position.
bool is_absorbing(const mn_semiring& s, element z);

// g(x1^n) = 0 only when some xi = 0. Requires the f-identity.
check_result is_zero_divisor_free(const mn_semiring& s);

// f(x1^m) = 0 only when every xi = 0. Requires the f-identity.
check_result is_zero_sum_free(const mn_semiring& s);

// In every position and context, distinct arguments give distinct results.
check_result is_cancellative(const op_table& op,
                             std::uint64_t budget = default_budget);

// a -> op(tuple, a) is injective for this fixed (arity-1)-tuple.
bool is_left_cancellable_tuple(const op_table& op,
                               std::span<const element> tuple);

// Every (n-1)-tuple over the nonzero elements is left cancellable in g.
// Requires the f-identity.
bool is_mult_left_cancellative(const mn_semiring& s);

// { x : op(x, ..., x) = x }, minus `exclude` if given.
std::vector<element> idempotent_elements(const op_table& op,
                                         std::optional<element> exclude = {});

struct property_report {
  check_result associative_f;
  check_result associative_g;
  check_result distributive;
  check_result commutative_f;
  check_result commutative_g;
  std::optional<element> f_identity;
  std::optional<element> g_identity;
  // Properties below that need the f-identity stay unset without one.
  std::optional<bool> absorbing_zero;
  std::optional<check_result> zero_divisor_free;
  std::optional<check_result> zero_sum_free;
  check_result add_cancellative;
  check_result mult_cancellative;
  check_result add_idempotent;
  check_result mult_idempotent;

  // The defining axioms; commutativity and the rest are informational.
  bool is_mn_semiring() const {
    return associative_f.ok && associative_g.ok && distributive.ok;
  }
};

// Runs every structural check against one algebra. The value is an
// (m,n)-semiring exactly when is_mn_semiring() holds on the result.
property_report verify_mn_semiring(const mn_semiring& s,
                                   std::uint64_t budget = default_budget);

// Re-evaluates a witness against the table(s) it indicts and confirms the
// recorded violation still reproduces.
bool replay_witness(const op_table& op, const witness& w);
bool replay_witness(const op_table& g, const op_table& f, const witness& w);
bool replay_witness(const mn_semiring& s, const witness& w);

std::string describe(const witness& w);

}  // namespace mnsr
