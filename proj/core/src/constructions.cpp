#include "mnsr/constructions.hpp"

#include <algorithm>

namespace mnsr {

namespace {

op_table fold_table(const op_table& binary, unsigned arity) {
  return op_table::from_function(
      arity, binary.carrier_size(), [&](std::span<const element> args) {
        element acc = args[0];
        for (std::size_t i = 1; i < args.size(); ++i)
          acc = binary.eval({acc, args[i]});
        return acc;
      });
}

}  // namespace

mn_semiring from_binary_semiring(const binary_semiring_spec& spec, unsigned m,
                                 unsigned n, limits bounds) {
  if (spec.add.arity() != 2 || spec.mul.arity() != 2)
    throw arity_mismatch("binary semiring spec needs arity-2 tables");
  if (spec.add.carrier_size() != spec.k || spec.mul.carrier_size() != spec.k)
    throw carrier_mismatch("spec tables disagree with the declared carrier");
  return mn_semiring(fold_table(spec.add, m), fold_table(spec.mul, n), bounds);
}

mn_semiring boolean_mn_semiring(unsigned atoms, unsigned m, unsigned n,
                                limits bounds) {
  if (atoms < 1 || atoms > 3)
    throw arity_bound("boolean construction supports 1..3 atoms, got " +
                      std::to_string(atoms));
  const unsigned k = 1u << atoms;
  op_table f = op_table::from_function(m, k, [](std::span<const element> a) {
    element acc = 0;
    for (element x : a) acc |= x;
    return acc;
  });
  op_table g =
      op_table::from_function(n, k, [&](std::span<const element> a) {
        element acc = k - 1;
        for (element x : a) acc &= x;
        return acc;
      });
  return mn_semiring(std::move(f), std::move(g), bounds);
}

mn_semiring modular_mn_semiring(unsigned k, unsigned m, unsigned n,
                                limits bounds) {
  binary_semiring_spec spec{
      k,
      op_table::from_function(
          2, k, [&](std::span<const element> a) { return (a[0] + a[1]) % k; }),
      op_table::from_function(
          2, k, [&](std::span<const element> a) { return (a[0] * a[1]) % k; })};
  return from_binary_semiring(spec, m, n, bounds);
}

std::pair<op_table, op_table> derive_binary_ops(
    const mn_semiring& s, std::span<const element> a_fix,
    std::span<const element> b_fix) {
  if (a_fix.size() + 2 != s.m() || b_fix.size() + 2 != s.n())
    throw arity_mismatch("fixed sequences must have lengths m-2 and n-2");
  const unsigned k = s.carrier_size();
  for (element e : a_fix)
    if (e >= k) throw index_out_of_range("a_fix element outside carrier");
  for (element e : b_fix)
    if (e >= k) throw index_out_of_range("b_fix element outside carrier");

  auto pinned = [k](const op_table& op, std::span<const element> fix) {
    return op_table::from_function(2, k, [&](std::span<const element> xy) {
      std::vector<element> args;
      args.reserve(op.arity());
      args.push_back(xy[0]);
      args.insert(args.end(), fix.begin(), fix.end());
      args.push_back(xy[1]);
      return op.eval(args);
    });
  };
  return {pinned(s.f(), a_fix), pinned(s.g(), b_fix)};
}

std::pair<op_table, op_table> derive_binary_ops(const mn_semiring& s) {
  if (!s.f_identity() || !s.g_identity())
    throw no_identity("identity-padded binary ops need both identities");
  std::vector<element> a_fix(s.m() - 2, *s.f_identity());
  std::vector<element> b_fix(s.n() - 2, *s.g_identity());
  return derive_binary_ops(s, a_fix, b_fix);
}

std::string to_string(wide_int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

rule_carrier negative_integers_carrier() {
  rule_carrier rc;
  rc.name = "negative-integers";
  rc.sample = [](std::mt19937_64& rng) {
    return -1 - static_cast<std::int64_t>(rng() % 1'000'000);
  };
  rc.f_rule = [](std::span<const wide_int> args) {
    wide_int acc = 0;
    for (wide_int x : args) acc += x;
    return acc;
  };
  rc.g_rule = [](std::span<const wide_int> args) {
    wide_int acc = 1;
    for (wide_int x : args) acc *= x;
    return acc;
  };
  rc.member = [](wide_int x) { return x <= -1; };
  return rc;
}

rule_carrier wrap_finite(const mn_semiring& s) {
  rule_carrier rc;
  rc.name = "finite-table";
  const unsigned k = s.carrier_size();
  rc.sample = [k](std::mt19937_64& rng) {
    return static_cast<std::int64_t>(rng() % k);
  };
  auto lift = [](const op_table& op) {
    return [op](std::span<const wide_int> args) -> wide_int {
      std::vector<element> idx(args.size());
      for (std::size_t i = 0; i < args.size(); ++i)
        idx[i] = static_cast<element>(args[i]);
      return op.eval(idx);
    };
  };
  rc.f_rule = lift(s.f());
  rc.g_rule = lift(s.g());
  rc.member = [k](wide_int x) {
    return x >= 0 && x < static_cast<wide_int>(k);
  };
  return rc;
}

std::string sampled_report::label() const {
  return "sampled evidence only, not a proof (carrier " + carrier_name +
         ", seed " + std::to_string(seed) + ")";
}

namespace {

struct sampler_state {
  const rule_carrier& rc;
  std::mt19937_64 rng;
  sampled_report& report;

  std::vector<wide_int> draw(unsigned count) {
    std::vector<wide_int> out(count);
    for (auto& v : out) v = rc.sample(rng);
    return out;
  }

  void record(sampled_violation_kind kind, unsigned position,
              std::span<const wide_int> args, wide_int lhs, wide_int rhs) {
    ++report.violation_count;
    if (report.violations.size() < 16) {
      sampled_violation v;
      v.kind = kind;
      v.position = position;
      v.args.reserve(args.size());
      for (wide_int a : args) v.args.push_back(static_cast<std::int64_t>(a));
      v.lhs = lhs;
      v.rhs = rhs;
      report.violations.push_back(std::move(v));
    }
  }

  void check_closure(bool on_g, unsigned arity) {
    auto args = draw(arity);
    const auto& rule = on_g ? rc.g_rule : rc.f_rule;
    wide_int r = rule(args);
    ++report.checks_run;
    if (!rc.member(r))
      record(on_g ? sampled_violation_kind::closure_g
                  : sampled_violation_kind::closure_f,
             0, args, r, r);
  }

  void check_assoc(bool on_g, unsigned arity) {
    auto tuple = draw(2 * arity - 1);
    const auto& rule = on_g ? rc.g_rule : rc.f_rule;
    auto nest = [&](unsigned i) {
      std::span<const wide_int> all(tuple);
      wide_int inner = rule(all.subspan(i - 1, arity));
      std::vector<wide_int> outer(tuple.begin(), tuple.begin() + (i - 1));
      outer.push_back(inner);
      outer.insert(outer.end(), tuple.begin() + (i - 1) + arity, tuple.end());
      return rule(outer);
    };
    wide_int prev = nest(1);
    for (unsigned i = 1; i < arity; ++i) {
      wide_int next = nest(i + 1);
      ++report.checks_run;
      if (prev != next)
        record(on_g ? sampled_violation_kind::assoc_g
                    : sampled_violation_kind::assoc_f,
               i, tuple, prev, next);
      prev = next;
    }
  }

  void check_dist(unsigned m, unsigned n) {
    unsigned i = 1 + static_cast<unsigned>(rng() % n);
    auto ctx = draw(n - 1);
    auto inner = draw(m);
    std::vector<wide_int> g_args(n);
    std::copy(ctx.begin(), ctx.begin() + (i - 1), g_args.begin());
    std::copy(ctx.begin() + (i - 1), ctx.end(), g_args.begin() + i);
    g_args[i - 1] = rc.f_rule(inner);
    wide_int lhs = rc.g_rule(g_args);
    std::vector<wide_int> f_args(m);
    for (unsigned j = 0; j < m; ++j) {
      g_args[i - 1] = inner[j];
      f_args[j] = rc.g_rule(g_args);
    }
    wide_int rhs = rc.f_rule(f_args);
    ++report.checks_run;
    if (lhs != rhs) {
      std::vector<wide_int> flat(ctx);
      flat.insert(flat.end(), inner.begin(), inner.end());
      record(sampled_violation_kind::dist, i, flat, lhs, rhs);
    }
  }
};

}  // namespace

sampled_report sampled_verify(const rule_carrier& rc, unsigned m, unsigned n,
                              unsigned trials, std::uint64_t seed) {
  if (trials < 1) throw error("sampled verification needs at least one trial");
  sampled_report report;
  report.carrier_name = rc.name;
  report.m = m;
  report.n = n;
  report.trials = trials;
  report.seed = seed;

  sampler_state st{rc, std::mt19937_64(seed), report};
  for (unsigned t = 0; t < trials; ++t) {
    st.check_closure(false, m);
    st.check_closure(true, n);
    st.check_assoc(false, m);
    st.check_assoc(true, n);
    st.check_dist(m, n);
  }
  return report;
}

}  // namespace mnsr
