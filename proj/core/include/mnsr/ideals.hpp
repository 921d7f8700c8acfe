#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "mnsr/checks.hpp"
#include "mnsr/semiring.hpp"

namespace mnsr {

// Subset of the carrier as a bitmask (carriers here never exceed 64).
struct carrier_subset {
  unsigned carrier_size = 0;
  std::uint64_t mask = 0;

  static carrier_subset of(unsigned k, std::initializer_list<element> members);
  static carrier_subset full(unsigned k);

  bool contains(element x) const { return x < 64 && (mask >> x) & 1; }
  void insert(element x);
  bool empty() const { return mask == 0; }
  unsigned count() const;
  std::vector<element> members() const;

  bool operator==(const carrier_subset&) const = default;
  bool subset_of(const carrier_subset& other) const {
    return (mask & ~other.mask) == 0;
  }
};

// I is closed under f, and g pulls the whole carrier into I through
// position i: g(x1^{i-1}, a, x_{i+1}^n) lies in I for every a in I and
// every choice of the other arguments.
check_result is_i_ideal(const mn_semiring& s, const carrier_subset& subset,
                        unsigned i);

// i-ideal in every position 1..n.
bool is_ideal(const mn_semiring& s, const carrier_subset& subset);

// Least ideal containing seed: the fixpoint of closing under f over members
// and absorbing through g in every position.
carrier_subset ideal_generated_by(const mn_semiring& s,
                                  const carrier_subset& seed);

// { f(a1, ..., am) : aj in parts[j] }. Takes exactly m subsets.
carrier_subset f_image_of_ideals(const mn_semiring& s,
                                 std::span<const carrier_subset> parts);

// Elementary g-products g(a1, ..., an) with aj drawn from parts[j], closed
// under f. Takes exactly n subsets.
carrier_subset product_of_subsets(const mn_semiring& s,
                                  std::span<const carrier_subset> parts);

// Set intersection; throws empty_intersection when the result is empty,
// since ideals are nonempty by definition.
carrier_subset intersect_ideals(const mn_semiring& s,
                                std::span<const carrier_subset> ideals);

}  // namespace mnsr
