#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mnsr/rational.hpp"
#include "mnsr/term.hpp"

namespace mnsr {

// Atom id -> exact failure probability in [0, 1]. Duplicate occurrences of
// an atom inside a term are independent copies sharing the probability.
struct reliability_assignment {
  std::map<std::string, rational> prob;

  const rational& at(const std::string& atom) const;  // throws unassigned_atom
};

// P(zero) = 0, P(one) = 1, P(series) = 1 - prod(1 - P(child)),
// P(parallel) = prod P(child). Exact rational arithmetic throughout.
rational failure_probability(const term& t, const reliability_assignment& r);

// Fault-tolerance facts between atoms, kept reflexively and transitively
// closed. a <= b reads "a is at least as fault-tolerant as b". A cycle
// through distinct atoms would break antisymmetry and is rejected.
class atom_poset {
 public:
  atom_poset() = default;
  atom_poset(std::vector<std::string> atoms,
             std::span<const std::pair<std::string, std::string>> leq_pairs);

  bool leq(const std::string& a, const std::string& b) const;
  const std::vector<std::string>& atoms() const { return atoms_; }
  // The closed relation without reflexive pairs.
  std::vector<std::pair<std::string, std::string>> strict_pairs() const;

 private:
  std::vector<std::string> atoms_;
  std::map<std::string, unsigned> index_;
  std::vector<std::vector<bool>> leq_;
};

enum class order_relation { less_equal, greater_equal, equal, unknown };

// Outcome of the syntactic derivation. The derivation lists the names of
// the rules applied, outermost first; unknown carries none.
struct order_result {
  order_relation relation = order_relation::unknown;
  std::vector<std::string> derivation;
};

const char* to_string(order_relation r);

// Sound, deliberately incomplete derivation of the fault-tolerance order
// between two terms. Terms are normalized first. Rules: constant bounds,
// poset facts between atoms, membership bounds (a parallel system is at
// most any of its parts, a series system at least any of its parts), and
// monotone matching of series/series and parallel/parallel children with
// padding. unknown is an acceptable answer; less_equal is only returned
// when derivable.
order_result derive_order(const term& t1, const term& t2, const atom_poset& p);

enum class semantic_relation { less_equal, greater_equal, equal, incomparable };

const char* to_string(semantic_relation r);

// Monte Carlo comparison under the exact probability semantics.
struct semantic_order_result {
  semantic_relation relation = semantic_relation::equal;
  unsigned samples = 0;
  // Assignments witnessing strict P(t1) > P(t2) resp. P(t1) < P(t2).
  std::optional<reliability_assignment> witness_greater;
  std::optional<reliability_assignment> witness_less;
};

// Draws `samples` assignments with probabilities on the grid {0, 1/256,
// ..., 1}, rejection-sampled until consistent with the poset, and compares
// exact failure probabilities. Deterministic for a fixed seed.
semantic_order_result semantic_order_sampled(const term& t1, const term& t2,
                                             const atom_poset& p,
                                             unsigned samples,
                                             std::uint64_t seed);

// One consistent grid assignment for the given atoms (helper shared with
// the soundness tests).
reliability_assignment sample_assignment(std::span<const std::string> atoms,
                                         const atom_poset& p,
                                         std::mt19937_64& rng);

}  // namespace mnsr
