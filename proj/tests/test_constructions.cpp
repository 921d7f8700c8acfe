#include <doctest.h>

#include "mnsr/checks.hpp"
#include "mnsr/constructions.hpp"

using namespace mnsr;

TEST_CASE("folded semiring construction verifies for all bounded arities") {
  mn_semiring z5 = modular_mn_semiring(5, 2, 3);
  CHECK(verify_mn_semiring(z5).is_mn_semiring());

  // Three-way fold over Z2 is parity.
  mn_semiring z2 = modular_mn_semiring(2, 3, 2);
  CHECK(z2.f().eval({1, 1, 1}) == (1 + 1 + 1) % 2);
  CHECK(z2.f().eval({1, 1, 0}) == 0);

  // m = n = 2 reproduces the binary tables verbatim.
  binary_semiring_spec spec{
      4,
      op_table::from_function(2, 4, [](std::span<const element> a) {
        return (a[0] + a[1]) % 4;
      }),
      op_table::from_function(2, 4, [](std::span<const element> a) {
        return (a[0] * a[1]) % 4;
      })};
  mn_semiring folded = from_binary_semiring(spec, 2, 2);
  CHECK(folded.f() == spec.add);
  CHECK(folded.g() == spec.mul);
}

TEST_CASE("boolean construction: identities and idempotency") {
  mn_semiring b = boolean_mn_semiring(2, 3, 2);
  CHECK(b.carrier_size() == 4);
  CHECK(b.f_identity() == element{0});
  CHECK(b.g_identity() == element{3});
  CHECK(verify_mn_semiring(b).is_mn_semiring());
  CHECK(idempotent_elements(b.f()).size() == 4);
  CHECK(idempotent_elements(b.g()).size() == 4);
  CHECK(is_absorbing(b, 0));

  mn_semiring lattice = boolean_mn_semiring(1, 2, 2);
  CHECK(idempotent_elements(lattice.f()).size() == 2);

  CHECK_THROWS_AS(boolean_mn_semiring(4, 2, 2), arity_bound);
  CHECK_THROWS_AS(boolean_mn_semiring(0, 2, 2), arity_bound);
}

TEST_CASE("folding any genuine binary semiring verifies at every arity") {
  std::vector<binary_semiring_spec> specs;
  // (max, min) chain lattice on {0..3}.
  specs.push_back({4,
                   op_table::from_function(2, 4,
                                           [](std::span<const element> a) {
                                             return std::max(a[0], a[1]);
                                           }),
                   op_table::from_function(2, 4,
                                           [](std::span<const element> a) {
                                             return std::min(a[0], a[1]);
                                           })});
  // (or, and) on two-bit masks.
  specs.push_back({4,
                   op_table::from_function(2, 4,
                                           [](std::span<const element> a) {
                                             return a[0] | a[1];
                                           }),
                   op_table::from_function(2, 4,
                                           [](std::span<const element> a) {
                                             return a[0] & a[1];
                                           })});
  specs.push_back({5,
                   op_table::from_function(2, 5,
                                           [](std::span<const element> a) {
                                             return (a[0] + a[1]) % 5;
                                           }),
                   op_table::from_function(2, 5,
                                           [](std::span<const element> a) {
                                             return (a[0] * a[1]) % 5;
                                           })});
  for (const binary_semiring_spec& spec : specs) {
    REQUIRE(check_associativity(spec.add).ok);
    REQUIRE(check_associativity(spec.mul).ok);
    REQUIRE(check_distributivity(spec.mul, spec.add).ok);
    for (unsigned m = 2; m <= 4; ++m)
      for (unsigned n = 2; n <= 4; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(verify_mn_semiring(from_binary_semiring(spec, m, n))
                  .is_mn_semiring());
      }
  }
}

TEST_CASE("every bounded modular instance passes verification") {
  for (unsigned k = 1; k <= 6; ++k)
    for (unsigned m = 2; m <= 3; ++m)
      for (unsigned n = 2; n <= 3; ++n) {
        mn_semiring s = modular_mn_semiring(k, m, n);
        property_report rep = verify_mn_semiring(s);
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(rep.is_mn_semiring());
        CHECK(rep.commutative_f.ok);
        CHECK(rep.commutative_g.ok);
      }
}

TEST_CASE("derived binary operations") {
  mn_semiring z4 = modular_mn_semiring(4, 2, 3);
  std::vector<element> b_fix{1};
  auto [plus, times] = derive_binary_ops(z4, {}, b_fix);
  for (element x = 0; x < 4; ++x)
    for (element y = 0; y < 4; ++y) {
      CHECK(plus.eval({x, y}) == (x + y) % 4);
      CHECK(times.eval({x, y}) == (x * y) % 4);
    }

  mn_semiring b = boolean_mn_semiring(2, 3, 2);
  std::vector<element> a_fix{0};
  auto [join, meet] = derive_binary_ops(b, a_fix, {});
  for (element x = 0; x < 4; ++x)
    for (element y = 0; y < 4; ++y) CHECK(join.eval({x, y}) == (x | y));

  // Pinning a non-identity changes the operation: x + 1 + y over Z2.
  mn_semiring z2 = modular_mn_semiring(2, 3, 2);
  std::vector<element> pin_one{1};
  auto [shifted, unused] = derive_binary_ops(z2, pin_one, {});
  CHECK(shifted.eval({0, 0}) == 1);
  CHECK(shifted.eval({0, 1}) == 0);

  CHECK_THROWS_AS(derive_binary_ops(z4, b_fix, b_fix), arity_mismatch);
}

TEST_CASE("identity-padded binary ops exist iff both identities do") {
  mn_semiring z4 = modular_mn_semiring(4, 2, 3);
  auto [plus, times] = derive_binary_ops(z4);
  CHECK(check_associativity(plus).ok);
  CHECK(check_associativity(times).ok);

  // max/add over Z3 has no g-identity... build one that lacks it: f = add,
  // g = constant 0 (no identity).
  op_table const0 = op_table::from_function(
      3, 3, [](std::span<const element>) { return element{0}; });
  mn_semiring no_id(modular_mn_semiring(3, 2, 2).f(), const0);
  CHECK_FALSE(no_id.g_identity().has_value());
  CHECK_THROWS_AS(derive_binary_ops(no_id), no_identity);
}

TEST_CASE("derived ops from verified algebras stay associative") {
  for (unsigned k = 2; k <= 5; ++k) {
    mn_semiring s = modular_mn_semiring(k, 3, 3);
    auto [plus, times] = derive_binary_ops(s);
    CHECK(check_associativity(plus).ok);
    CHECK(check_associativity(times).ok);
  }
}

TEST_CASE("sampled verification of the negative integers") {
  rule_carrier zneg = negative_integers_carrier();

  // f binary sum, g ternary product: closed and clean over 10^4 trials.
  sampled_report good = sampled_verify(zneg, 2, 3, 10'000, 7);
  CHECK(good.clean());
  CHECK(good.checks_run > 0);
  CHECK(good.label().find("not a proof") != std::string::npos);

  // Binary products escape the carrier: (-1) * (-1) = 1.
  sampled_report bad = sampled_verify(zneg, 2, 2, 100, 7);
  CHECK_FALSE(bad.clean());
  REQUIRE_FALSE(bad.violations.empty());
  bool closure_g_seen = false;
  for (const sampled_violation& v : bad.violations)
    if (v.kind == sampled_violation_kind::closure_g) {
      closure_g_seen = true;
      CHECK(v.lhs > 0);  // a positive product witnessed
    }
  CHECK(closure_g_seen);
}

TEST_CASE("sampled verification is deterministic per seed") {
  rule_carrier zneg = negative_integers_carrier();
  sampled_report a = sampled_verify(zneg, 2, 2, 200, 99);
  sampled_report b = sampled_verify(zneg, 2, 2, 200, 99);
  CHECK(a.violation_count == b.violation_count);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i)
    CHECK(a.violations[i].args == b.violations[i].args);
  sampled_report c = sampled_verify(zneg, 2, 2, 200, 100);
  CHECK((c.violations.empty() ||
         c.violations[0].args != a.violations[0].args));
}

TEST_CASE("wrapped finite tables never contradict the exhaustive checker") {
  for (const mn_semiring& s :
       {modular_mn_semiring(4, 2, 3), boolean_mn_semiring(2, 3, 2),
        mn_semiring(op_table::from_function(2, 3,
                                            [](std::span<const element> a) {
                                              return (a[0] + 2 * a[1]) % 3;
                                            }),
                    modular_mn_semiring(3, 2, 2).g())}) {
    property_report rep = verify_mn_semiring(s);
    sampled_report sampled = sampled_verify(wrap_finite(s), s.m(), s.n(), 2'000, 3);
    if (rep.is_mn_semiring() && rep.commutative_f.ok && rep.commutative_g.ok) {
      CHECK(sampled.clean());
    }
    // A sampled violation on a finite table implies the exhaustive check
    // fails too (never the other way: sampling can only miss).
    for (const sampled_violation& v : sampled.violations) {
      switch (v.kind) {
        case sampled_violation_kind::assoc_f:
          CHECK_FALSE(check_associativity(s.f()).ok);
          break;
        case sampled_violation_kind::assoc_g:
          CHECK_FALSE(check_associativity(s.g()).ok);
          break;
        case sampled_violation_kind::dist:
          CHECK_FALSE(check_distributivity(s.g(), s.f()).ok);
          break;
        default:
          CHECK(false);  // closure violations are impossible for tables
      }
    }
  }
}
