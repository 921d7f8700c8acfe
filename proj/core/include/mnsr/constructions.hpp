#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mnsr/checks.hpp"
#include "mnsr/semiring.hpp"

namespace mnsr {

// An ordinary binary semiring (carrier, +, x) used as raw material for the
// folded m-ary/n-ary construction. The axioms are not validated here; run
// verify_mn_semiring on the folded result.
struct binary_semiring_spec {
  unsigned k;
  op_table add;  // arity 2
  op_table mul;  // arity 2
};

// f(x1..xm) = x1 + ... + xm and g(y1..yn) = y1 * ... * yn, both folded
// left to right. Whenever the spec is a genuine semiring the result passes
// verify_mn_semiring.
mn_semiring from_binary_semiring(const binary_semiring_spec& spec, unsigned m,
                                 unsigned n, limits bounds = {});

// Subsets of an `atoms`-element set as bitmasks; f is m-ary union, g is
// n-ary intersection. The f-identity is the empty set, the g-identity the
// full set.
mn_semiring boolean_mn_semiring(unsigned atoms, unsigned m, unsigned n,
                                limits bounds = {});

// Folded (Z_k, + mod k, * mod k).
mn_semiring modular_mn_semiring(unsigned k, unsigned m, unsigned n,
                                limits bounds = {});

// Binary operations obtained by pinning all but the outer arguments:
// x (+) y = f(x, a_fix..., y) and x (*) y = g(x, b_fix..., y).
std::pair<op_table, op_table> derive_binary_ops(const mn_semiring& s,
                                                std::span<const element> a_fix,
                                                std::span<const element> b_fix);

// Same with a_fix = (0,...,0) and b_fix = (1,...,1), recovering the ordinary
// x + y and x * y. Throws no_identity if either identity is absent.
std::pair<op_table, op_table> derive_binary_ops(const mn_semiring& s);

// Evaluation width for rule-defined carriers. Sampled pseudo-elements are
// 64-bit, but nested check instances multiply several of them, so the rules
// compute 128-bit wide to stay exact over the sampler's range.
using wide_int = __int128;

std::string to_string(wide_int v);

// A carrier given by rules instead of tables, possibly infinite. Closure of
// the rules over the members is exactly what sampled_verify probes.
struct rule_carrier {
  std::string name;
  std::function<std::int64_t(std::mt19937_64&)> sample;
  std::function<wide_int(std::span<const wide_int>)> f_rule;  // any arity
  std::function<wide_int(std::span<const wide_int>)> g_rule;
  std::function<bool(wide_int)> member;
};

// The negative integers with f = sum and g = product; the sampler draws
// uniformly from [-10^6, -1].
rule_carrier negative_integers_carrier();

// Finite algebra wrapped as a rule carrier (sampler draws element indices).
rule_carrier wrap_finite(const mn_semiring& s);

enum class sampled_violation_kind {
  closure_f,
  closure_g,
  assoc_f,
  assoc_g,
  dist,
};

struct sampled_violation {
  sampled_violation_kind kind;
  unsigned position = 0;                // 1-based, for assoc/dist instances
  std::vector<std::int64_t> args;       // the sampled base tuple(s), flattened
  wide_int lhs = 0;
  wide_int rhs = 0;
};

// Randomized evidence, never a proof: the report says so and carries the
// seed so any failure replays exactly.
struct sampled_report {
  std::string carrier_name;
  unsigned m = 0;
  unsigned n = 0;
  unsigned trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t checks_run = 0;
  std::uint64_t violation_count = 0;
  std::vector<sampled_violation> violations;  // first few, for display

  bool clean() const { return violation_count == 0; }
  std::string label() const;
};

// Draws `trials` pseudo-random tuples and probes closure under f and g,
// associativity instances of both, and distributivity instances.
// Deterministic for a fixed seed.
sampled_report sampled_verify(const rule_carrier& rc, unsigned m, unsigned n,
                              unsigned trials, std::uint64_t seed);

}  // namespace mnsr
