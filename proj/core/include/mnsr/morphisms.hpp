#pragma once

#include <optional>
#include <vector>

#include "mnsr/checks.hpp"
#include "mnsr/semiring.hpp"

namespace mnsr {

// Partition of the carrier, stored as block id per element. Canonical form
// is a restricted-growth string: block ids appear in first-occurrence order,
// so blocks are numbered 0..b-1 contiguously.
struct congruence {
  unsigned carrier_size = 0;
  std::vector<unsigned> block_of;

  unsigned block_count() const;
  std::vector<std::vector<element>> blocks() const;
  void canonicalize();

  static congruence singletons(unsigned k);
  static congruence single_block(unsigned k);

  bool operator==(const congruence&) const = default;
};

// Compatibility of the partition with f and g: replacing one argument by a
// block-mate never changes the block of the result. Substituting a single
// position suffices; the full simultaneous condition follows by chaining.
check_result is_congruence(const mn_semiring& s, const congruence& part);

// Every congruence of s, in restricted-growth-string order. Guarded by
// k <= 10 (Bell(10) = 115975 partitions). Always contains the all-singleton
// and the single-block partitions.
std::vector<congruence> enumerate_congruences(const mn_semiring& s);

// The algebra on the blocks of sigma, with operations applied to block
// representatives. Throws not_a_congruence when sigma is incompatible.
mn_semiring quotient(const mn_semiring& s, const congruence& sigma);

// Total map between carriers.
struct morphism {
  unsigned domain_size = 0;
  unsigned codomain_size = 0;
  std::vector<element> map;

  element operator()(element x) const;
  static morphism identity(unsigned k);

  bool operator==(const morphism&) const = default;
};

// phi(f(x1..xm)) = f'(phi x1, ..., phi xm) and likewise for g, exhaustively.
check_result is_homomorphism(const mn_semiring& s, const mn_semiring& t,
                             const morphism& phi);

// x -> psi(phi(x)).
morphism compose_maps(const morphism& phi, const morphism& psi);

// Partition of the domain by image, canonical block ids.
congruence kernel(const morphism& phi);

// quotient(s, ker phi) together with the injective map it factors through:
// injection(projection(x)) = phi(x) for every x.
struct factorization {
  congruence ker;
  mn_semiring quot;
  morphism projection;  // s -> quot, x -> block of x
  morphism injection;   // quot -> t, block -> phi(representative)
};

factorization induced_injection(const mn_semiring& s, const mn_semiring& t,
                                const morphism& phi);

// A bijective homomorphism between s and t if one exists. Searches over
// element bijections, pruning by per-element structural profiles (identity
// flags, idempotency, absorption). Guarded by carrier size <= 8.
std::optional<morphism> is_isomorphic(const mn_semiring& s,
                                      const mn_semiring& t);

// rho refines sigma: every rho-block is contained in a single sigma-block.
bool refines(const congruence& rho, const congruence& sigma);

// sigma viewed on the blocks of rho (requires refines(rho, sigma)).
congruence quotient_congruence(const congruence& rho, const congruence& sigma);

}  // namespace mnsr
