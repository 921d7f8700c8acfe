#include <doctest.h>

#include "helpers.hpp"
#include "mnsr/checks.hpp"
#include "mnsr/constructions.hpp"

using namespace mnsr;

namespace {

op_table sub_mod3() {
  return op_table::from_function(2, 3, [](std::span<const element> a) {
    return (a[0] + 3 - a[1]) % 3;
  });
}

op_table max_mod3() {
  return op_table::from_function(2, 3, [](std::span<const element> a) {
    return std::max(a[0], a[1]);
  });
}

}  // namespace

TEST_CASE("associativity: mod-5 addition passes, mod-3 subtraction fails") {
  CHECK(check_associativity(modular_mn_semiring(5, 2, 2).f()).ok);

  check_result r = check_associativity(sub_mod3());
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.counterexample.has_value());
  CHECK(replay_witness(sub_mod3(), *r.counterexample));
  // A hand-built counterexample replays too: (0-1)-2 = 0 vs 0-(1-2) = 1.
  witness by_hand{witness_kind::assoc_fail, false, {1, 2}, {{0, 1, 2}}, 0, 1};
  CHECK(replay_witness(sub_mod3(), by_hand));
}

TEST_CASE("associativity: boolean union of three") {
  CHECK(check_associativity(boolean_mn_semiring(2, 3, 2).f()).ok);
}

TEST_CASE("adjacent-pair associativity agrees with the all-pairs oracle") {
  // Tables small enough to brute force every nesting pair.
  std::vector<op_table> tables;
  tables.push_back(modular_mn_semiring(3, 3, 2).f());
  tables.push_back(modular_mn_semiring(4, 2, 3).g());
  tables.push_back(sub_mod3());
  tables.push_back(max_mod3());
  tables.push_back(boolean_mn_semiring(1, 3, 2).f());
  // A random-looking non-associative ternary table.
  tables.push_back(op_table::from_function(3, 2, [](std::span<const element> a) {
    return static_cast<element>((a[0] + a[1] * a[2] + 1) % 2);
  }));
  for (const op_table& t : tables)
    CHECK(check_associativity(t).ok == oracle::assoc_all_pairs(t));
}

TEST_CASE("commutativity: witness and permutation oracle") {
  CHECK(check_commutativity(modular_mn_semiring(5, 2, 2).f()).ok);
  CHECK(check_commutativity(boolean_mn_semiring(2, 2, 2).g()).ok);

  check_result r = check_commutativity(sub_mod3());
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->args[0] == std::vector<element>{0, 1});
  CHECK(replay_witness(sub_mod3(), *r.counterexample));

  std::vector<op_table> tables;
  tables.push_back(modular_mn_semiring(3, 4, 2).f());
  tables.push_back(sub_mod3());
  tables.push_back(op_table::from_function(
      3, 3, [](std::span<const element> a) { return (a[0] * 2 + a[1] + a[2]) % 3; }));
  for (const op_table& t : tables)
    CHECK(check_commutativity(t).ok == oracle::comm_all_permutations(t));
}

TEST_CASE("distributivity: modular and boolean instances hold, max fails") {
  mn_semiring z4 = modular_mn_semiring(4, 2, 3);
  CHECK(check_distributivity(z4.g(), z4.f()).ok);

  mn_semiring b = boolean_mn_semiring(2, 3, 2);
  CHECK(check_distributivity(b.g(), b.f()).ok);

  op_table add3 = modular_mn_semiring(3, 2, 2).f();
  check_result r = check_distributivity(max_mod3(), add3);
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.counterexample.has_value());
  CHECK(replay_witness(max_mod3(), add3, *r.counterexample));

  // Confirm by brute force that a violating tuple really exists.
  bool found = false;
  for (element x = 0; x < 3 && !found; ++x)
    for (element a = 0; a < 3 && !found; ++a)
      for (element b2 = 0; b2 < 3 && !found; ++b2) {
        element lhs1 = std::max(x, (a + b2) % 3u);
        element rhs1 = (std::max(x, a) + std::max(x, b2)) % 3;
        element lhs2 = std::max((a + b2) % 3u, x);
        element rhs2 = (std::max(a, x) + std::max(b2, x)) % 3;
        found = lhs1 != rhs1 || lhs2 != rhs2;
      }
  CHECK(found);
}

TEST_CASE("distributivity rejects mismatched carriers") {
  CHECK_THROWS_AS(
      check_distributivity(max_mod3(), modular_mn_semiring(4, 2, 2).f()),
      carrier_mismatch);
}

TEST_CASE("verify_mn_semiring across the worked examples") {
  property_report z4 = verify_mn_semiring(modular_mn_semiring(4, 2, 3));
  CHECK(z4.is_mn_semiring());
  CHECK(z4.associative_f.ok);
  CHECK(z4.associative_g.ok);
  CHECK(z4.distributive.ok);

  property_report borep = verify_mn_semiring(boolean_mn_semiring(2, 3, 2));
  CHECK(borep.is_mn_semiring());

  mn_semiring broken(sub_mod3(), modular_mn_semiring(3, 2, 2).g());
  property_report rep = verify_mn_semiring(broken);
  CHECK_FALSE(rep.associative_f.ok);
  CHECK_FALSE(rep.is_mn_semiring());
  CHECK(replay_witness(broken, *rep.associative_f.counterexample));
}

TEST_CASE("identity search") {
  mn_semiring b = boolean_mn_semiring(2, 3, 2);
  CHECK(b.f_identity() == element{0});        // empty set
  CHECK(b.g_identity() == element{3});        // full set {a,b}
  CHECK(find_identity(modular_mn_semiring(4, 2, 3).g()) == element{1});
  CHECK(find_identity(max_mod3()) == element{0});
}

TEST_CASE("ternary fold over Z2 has two identities; least one is returned") {
  // x + e + e = x mod 2 for both e = 0 and e = 1.
  op_table xor3 = modular_mn_semiring(2, 3, 2).f();
  CHECK(all_identities(xor3) == std::vector<element>{0, 1});
  CHECK(find_identity(xor3) == element{0});
  // Same effect multiplicatively: 1*1*x = 3*3*x = x mod 4.
  op_table mul3_z4 = modular_mn_semiring(4, 2, 3).g();
  CHECK(all_identities(mul3_z4) == std::vector<element>{1, 3});
}

TEST_CASE("absorbing element checks") {
  mn_semiring z4 = modular_mn_semiring(4, 2, 3);
  CHECK(is_absorbing(z4, 0));
  CHECK_FALSE(is_absorbing(z4, 2));  // g(2,2,1) = 0 != 2
  CHECK(z4.g().eval({2, 2, 1}) == 0);
  mn_semiring b = boolean_mn_semiring(2, 3, 2);
  CHECK(is_absorbing(b, 0));
  CHECK_THROWS_AS(is_absorbing(z4, 7), index_out_of_range);
}

TEST_CASE("zero-divisor freeness") {
  mn_semiring z4 = modular_mn_semiring(4, 2, 3);
  check_result r = is_zero_divisor_free(z4);
  REQUIRE_FALSE(r.ok);
  CHECK(replay_witness(z4, *r.counterexample));
  // The specific tuple 2*2*1 = 0 mod 4 is also a valid witness.
  witness by_hand{witness_kind::zero_divisor, true, {}, {{2, 2, 1}}, 0, 0};
  CHECK(replay_witness(z4, by_hand));

  CHECK(is_zero_divisor_free(modular_mn_semiring(3, 2, 2)).ok);

  mn_semiring b = boolean_mn_semiring(2, 3, 2);
  check_result rb = is_zero_divisor_free(b);
  REQUIRE_FALSE(rb.ok);  // {a} intersect {b} is empty
  CHECK(replay_witness(b, *rb.counterexample));
}

TEST_CASE("zero-sum freeness") {
  CHECK(is_zero_sum_free(boolean_mn_semiring(2, 3, 2)).ok);

  mn_semiring z4 = modular_mn_semiring(4, 2, 3);
  check_result r = is_zero_sum_free(z4);
  REQUIRE_FALSE(r.ok);
  CHECK(r.counterexample->args[0] == std::vector<element>{1, 3});
  CHECK(replay_witness(z4, *r.counterexample));

  CHECK(is_zero_sum_free(modular_mn_semiring(1, 2, 2)).ok);
}

TEST_CASE("cancellativity") {
  CHECK(is_cancellative(modular_mn_semiring(5, 2, 2).f()).ok);

  op_table mul3_z4 = modular_mn_semiring(4, 2, 3).g();
  check_result r = is_cancellative(mul3_z4);
  REQUIRE_FALSE(r.ok);
  CHECK(replay_witness(mul3_z4, *r.counterexample));
  // 2*1*1 = 2*3*1 = 2 mod 4 seen from the hand-built witness.
  witness by_hand{witness_kind::cancel_fail, true, {2}, {{2, 1}, {1, 3}}, 2, 2};
  CHECK(replay_witness(mul3_z4, by_hand));

  op_table union3 = boolean_mn_semiring(2, 3, 2).f();
  check_result ru = is_cancellative(union3);
  REQUIRE_FALSE(ru.ok);
  CHECK(replay_witness(union3, *ru.counterexample));
}

TEST_CASE("left cancellable tuples") {
  op_table mul3_z4 = modular_mn_semiring(4, 2, 3).g();
  std::vector<element> ones{1, 1};
  std::vector<element> two_one{2, 1};
  CHECK(is_left_cancellable_tuple(mul3_z4, ones));
  CHECK_FALSE(is_left_cancellable_tuple(mul3_z4, two_one));
  CHECK(mul3_z4.eval({2, 1, 1}) == mul3_z4.eval({2, 1, 3}));

  op_table add5 = modular_mn_semiring(5, 2, 2).f();
  std::vector<element> three{3};
  CHECK(is_left_cancellable_tuple(add5, three));
  CHECK_THROWS_AS(is_left_cancellable_tuple(add5, ones), arity_mismatch);
}

TEST_CASE("idempotent elements") {
  op_table union3 = boolean_mn_semiring(2, 3, 2).f();
  CHECK(idempotent_elements(union3) == std::vector<element>{0, 1, 2, 3});

  op_table mul_z3 = modular_mn_semiring(3, 2, 2).g();
  CHECK(idempotent_elements(mul_z3, element{0}) == std::vector<element>{1});

  op_table add5 = modular_mn_semiring(5, 2, 2).f();
  CHECK(idempotent_elements(add5) == std::vector<element>{0});
}

// Left-cancellable tuples admit no left zero-divisors: g(tuple, a) = 0
// forces a = 0. Exhaustive over small modular and boolean algebras.
TEST_CASE("left-cancellable tuples are not left zero-divisors") {
  std::vector<mn_semiring> corpus;
  for (unsigned k = 1; k <= 6; ++k) {
    corpus.push_back(modular_mn_semiring(k, 2, 2));
    corpus.push_back(modular_mn_semiring(k, 2, 3));
  }
  corpus.push_back(boolean_mn_semiring(1, 2, 2));
  corpus.push_back(boolean_mn_semiring(2, 3, 2));

  for (const mn_semiring& s : corpus) {
    REQUIRE(s.f_identity().has_value());
    const element zero = *s.f_identity();
    std::vector<element> tuple(s.n() - 1, 0);
    do {
      if (!is_left_cancellable_tuple(s.g(), tuple)) continue;
      std::vector<element> args(tuple.begin(), tuple.end());
      args.push_back(0);
      for (element a = 0; a < s.carrier_size(); ++a) {
        args.back() = a;
        if (s.g().eval(args) == zero) CHECK(a == zero);
      }
    } while (next_tuple(tuple, s.carrier_size()));
  }
}

// Multiplicative left cancellativity (nonzero tuples) implies zero-divisor
// freeness on every verified algebra of the corpus.
TEST_CASE("cancellative algebras are zero-divisor free") {
  std::vector<mn_semiring> corpus;
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned m = 2; m <= 3; ++m)
      for (unsigned n = 2; n <= 3; ++n)
        corpus.push_back(modular_mn_semiring(k, m, n));
  corpus.push_back(boolean_mn_semiring(1, 2, 2));
  corpus.push_back(boolean_mn_semiring(2, 2, 2));

  for (const mn_semiring& s : corpus) {
    if (!verify_mn_semiring(s).is_mn_semiring()) continue;
    if (!s.f_identity()) continue;
    if (is_mult_left_cancellative(s)) CHECK(is_zero_divisor_free(s).ok);
  }
}

// Two distinct multiplicative idempotents rule out cancellativity.
TEST_CASE("two idempotents forbid multiplicative cancellativity") {
  for (unsigned atoms = 1; atoms <= 3; ++atoms)
    for (unsigned m = 2; m <= 3; ++m)
      for (unsigned n = 2; n <= 3; ++n) {
        mn_semiring b = boolean_mn_semiring(atoms, m, n);
        REQUIRE(b.g_identity().has_value());
        auto idem = idempotent_elements(b.g(), b.f_identity());
        if (idem.size() >= 2) CHECK_FALSE(is_cancellative(b.g()).ok);
      }
}

// On a verified algebra with a multiplicative identity, additive idempotency
// is equivalent to the f-fold of that identity being the identity again:
// x = g(x, 1, ..., 1) and distributivity turn f(x, ..., x) into
// g(x, f(1^m), 1^{n-2}). Note the multiplicative identity is essential; the
// f-identity satisfies f(0,...,0) = 0 unconditionally and decides nothing.
TEST_CASE("additive idempotency criterion via the multiplicative identity") {
  std::vector<mn_semiring> corpus;
  for (unsigned k = 1; k <= 6; ++k)
    for (unsigned m = 2; m <= 3; ++m)
      for (unsigned n = 2; n <= 3; ++n)
        corpus.push_back(modular_mn_semiring(k, m, n));
  for (unsigned atoms = 1; atoms <= 3; ++atoms)
    corpus.push_back(boolean_mn_semiring(atoms, 3, 2));

  unsigned idempotent_seen = 0;
  for (const mn_semiring& s : corpus) {
    property_report rep = verify_mn_semiring(s);
    if (!rep.is_mn_semiring() || !s.g_identity()) continue;
    std::vector<element> ones(s.m(), *s.g_identity());
    bool one_fixed = s.f().eval(ones) == *s.g_identity();
    CHECK(rep.add_idempotent.ok == one_fixed);
    if (rep.add_idempotent.ok) ++idempotent_seen;
  }
  CHECK(idempotent_seen > 0);  // boolean algebras and odd ternary folds
}

// Every false flag in a property report must carry a witness, and every
// witness must re-evaluate to the recorded violation.
TEST_CASE("property report witnesses are present and replay") {
  std::vector<mn_semiring> corpus;
  corpus.push_back(modular_mn_semiring(6, 2, 2));
  corpus.push_back(modular_mn_semiring(4, 2, 3));
  corpus.push_back(boolean_mn_semiring(2, 3, 2));
  corpus.push_back(mn_semiring(sub_mod3(), max_mod3()));
  corpus.push_back(mn_semiring(max_mod3(), sub_mod3()));
  corpus.push_back(
      mn_semiring(modular_mn_semiring(3, 2, 2).f(), max_mod3()));

  unsigned replayed = 0;
  for (const mn_semiring& s : corpus) {
    property_report rep = verify_mn_semiring(s);
    std::vector<const check_result*> checks{
        &rep.associative_f,    &rep.associative_g,   &rep.distributive,
        &rep.commutative_f,    &rep.commutative_g,   &rep.add_cancellative,
        &rep.mult_cancellative, &rep.add_idempotent, &rep.mult_idempotent};
    if (rep.zero_divisor_free) checks.push_back(&*rep.zero_divisor_free);
    if (rep.zero_sum_free) checks.push_back(&*rep.zero_sum_free);
    for (const check_result* r : checks) {
      if (r->ok) continue;
      REQUIRE(r->counterexample.has_value());
      CHECK(replay_witness(s, *r->counterexample));
      ++replayed;
    }
  }
  CHECK(replayed > 10);  // the corpus is built to violate plenty
}

TEST_CASE("the one-element carrier satisfies everything vacuously") {
  property_report rep = verify_mn_semiring(modular_mn_semiring(1, 2, 2));
  CHECK(rep.is_mn_semiring());
  CHECK(rep.commutative_f.ok);
  CHECK(rep.f_identity == element{0});
  CHECK(rep.g_identity == element{0});
  CHECK(rep.absorbing_zero == true);
  CHECK(rep.zero_divisor_free->ok);
  CHECK(rep.zero_sum_free->ok);
  CHECK(rep.add_cancellative.ok);
  CHECK(rep.mult_cancellative.ok);
  CHECK(rep.add_idempotent.ok);
  CHECK(rep.mult_idempotent.ok);
}

TEST_CASE("budget guard refuses rather than sampling") {
  op_table big = modular_mn_semiring(12, 2, 2).f();
  CHECK_THROWS_AS(check_associativity(big, 100), budget_exceeded);
  CHECK_NOTHROW(check_associativity(big));
}

TEST_CASE("arity and carrier bounds are enforced at construction") {
  CHECK_THROWS_AS(modular_mn_semiring(13, 2, 2), arity_bound);
  CHECK_THROWS_AS(modular_mn_semiring(4, 5, 2), arity_bound);
  limits relaxed{4, 16};
  CHECK_NOTHROW(modular_mn_semiring(16, 2, 2, relaxed));
}
