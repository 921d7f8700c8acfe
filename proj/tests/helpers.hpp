#pragma once

// Brute-force reference implementations used as independent oracles. They
// deliberately avoid the shortcuts the library takes (adjacent-pair
// associativity, adjacent transpositions, single-position congruence
// substitution) so the optimized checkers can be validated against them.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "mnsr/ft_order.hpp"
#include "mnsr/morphisms.hpp"
#include "mnsr/op_table.hpp"
#include "mnsr/semiring.hpp"

namespace oracle {

using mnsr::element;

// Associativity over every nesting pair 1 <= i <= j <= m, not just
// adjacent ones.
inline bool assoc_all_pairs(const mnsr::op_table& op) {
  const unsigned m = op.arity();
  const unsigned k = op.carrier_size();
  auto nest = [&](const std::vector<element>& t, unsigned i) {
    std::vector<element> outer(t.begin(), t.begin() + (i - 1));
    std::vector<element> inner(t.begin() + (i - 1), t.begin() + (i - 1) + m);
    outer.push_back(op.eval(inner));
    outer.insert(outer.end(), t.begin() + (i - 1) + m, t.end());
    return op.eval(outer);
  };
  std::vector<element> tuple(2 * m - 1, 0);
  do {
    for (unsigned i = 1; i <= m; ++i)
      for (unsigned j = i; j <= m; ++j)
        if (nest(tuple, i) != nest(tuple, j)) return false;
  } while (mnsr::next_tuple(tuple, k));
  return true;
}

// Commutativity over every permutation of the arguments.
inline bool comm_all_permutations(const mnsr::op_table& op) {
  const unsigned m = op.arity();
  const unsigned k = op.carrier_size();
  std::vector<element> tuple(m, 0);
  do {
    element base = op.eval(tuple);
    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<element> permuted(m);
    do {
      for (unsigned i = 0; i < m; ++i) permuted[i] = tuple[perm[i]];
      if (op.eval(permuted) != base) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (mnsr::next_tuple(tuple, k));
  return true;
}

// The full simultaneous congruence condition: replacing every argument by a
// block-mate at once keeps the block of the result.
inline bool congruence_full_substitution(const mnsr::mn_semiring& s,
                                         const mnsr::congruence& part) {
  for (const mnsr::op_table* op : {&s.f(), &s.g()}) {
    const unsigned arity = op->arity();
    const unsigned k = s.carrier_size();
    std::vector<element> xs(arity, 0);
    do {
      std::vector<element> ys(arity, 0);
      do {
        bool related = true;
        for (unsigned i = 0; i < arity; ++i)
          if (part.block_of[xs[i]] != part.block_of[ys[i]]) {
            related = false;
            break;
          }
        if (related &&
            part.block_of[op->eval(xs)] != part.block_of[op->eval(ys)])
          return false;
      } while (mnsr::next_tuple(ys, k));
    } while (mnsr::next_tuple(xs, k));
  }
  return true;
}

// Every partition of {0..k-1} as a restricted growth string.
inline std::vector<mnsr::congruence> all_partitions(unsigned k) {
  std::vector<mnsr::congruence> out;
  std::vector<unsigned> assign(k, 0);
  auto rec = [&](auto&& self, unsigned e, unsigned used) -> void {
    if (e == k) {
      out.push_back(mnsr::congruence{k, assign});
      return;
    }
    for (unsigned b = 0; b <= used && b < k; ++b) {
      assign[e] = b;
      self(self, e + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Failure probability by enumerating the joint up/down outcomes of every
// atom occurrence (occurrences are independent copies). Exponential, for
// small terms only; checks the product-form evaluator from first principles.
inline mnsr::rational enumerate_failure_probability(
    const mnsr::term& t, const mnsr::reliability_assignment& r) {
  std::vector<const mnsr::term*> occurrences;
  auto collect = [&](auto&& self, const mnsr::term& node) -> void {
    if (node.node_kind() == mnsr::term::kind::atom)
      occurrences.push_back(&node);
    else
      for (const mnsr::term& c : node.children()) self(self, c);
  };
  collect(collect, t);

  mnsr::rational total(0);
  const std::size_t count = occurrences.size();
  for (std::size_t outcome = 0; outcome < (std::size_t{1} << count);
       ++outcome) {
    std::size_t cursor = 0;
    auto failed = [&](auto&& self, const mnsr::term& node) -> bool {
      switch (node.node_kind()) {
        case mnsr::term::kind::zero: return false;
        case mnsr::term::kind::one: return true;
        case mnsr::term::kind::atom: return (outcome >> cursor++) & 1;
        case mnsr::term::kind::series: {
          bool any = false;
          for (const mnsr::term& c : node.children())
            any = self(self, c) || any;  // keep traversing: cursor must advance
          return any;
        }
        case mnsr::term::kind::parallel: {
          bool all = true;
          for (const mnsr::term& c : node.children())
            all = self(self, c) && all;
          return all;
        }
      }
      return false;
    };
    mnsr::rational weight(1);
    std::size_t bit = 0;
    for (const mnsr::term* occ : occurrences) {
      const mnsr::rational& p = r.at(occ->atom_id());
      weight *= ((outcome >> bit++) & 1) ? p : mnsr::rational(1) - p;
    }
    if (failed(failed, t)) total += weight;
  }
  return total;
}

}  // namespace oracle
