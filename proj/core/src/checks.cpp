#include "mnsr/checks.hpp"

#include <algorithm>
#include <sstream>

namespace mnsr {

namespace {

// k^exp capped against the evaluation budget; throws instead of sampling.
void require_budget(unsigned k, unsigned exp, std::uint64_t factor,
                    std::uint64_t budget) {
  long double cost = static_cast<long double>(factor);
  for (unsigned i = 0; i < exp; ++i) cost *= k;
  if (cost > static_cast<long double>(budget)) {
    std::ostringstream os;
    os << "exhaustive check needs ~" << cost << " evaluations, budget is "
       << budget;
    throw budget_exceeded(os.str());
  }
}

// Value of the i-nesting (1-based) of op over a (2*arity-1)-tuple: the inner
// application consumes positions i..i+arity-1, the rest feed the outer one.
element nest_at(const op_table& op, std::span<const element> tuple, unsigned i,
                std::vector<element>& scratch) {
  const unsigned m = op.arity();
  element inner = op.eval(tuple.subspan(i - 1, m));
  scratch.clear();
  scratch.insert(scratch.end(), tuple.begin(), tuple.begin() + (i - 1));
  scratch.push_back(inner);
  scratch.insert(scratch.end(), tuple.begin() + (i - 1) + m, tuple.end());
  return op.eval(scratch);
}

check_result check_idempotency(const op_table& op,
                               std::optional<element> exclude) {
  std::vector<element> diag(op.arity());
  for (element x = 0; x < op.carrier_size(); ++x) {
    if (exclude && *exclude == x) continue;
    std::fill(diag.begin(), diag.end(), x);
    element r = op.eval(diag);
    if (r != x)
      return check_result::fail(
          {witness_kind::other, false, {}, {{x}}, r, x});
  }
  return check_result::pass();
}

}  // namespace

check_result check_associativity(const op_table& op, std::uint64_t budget) {
  const unsigned m = op.arity();
  const unsigned k = op.carrier_size();
  require_budget(k, 2 * m - 1, 1, budget);

  std::vector<element> tuple(2 * m - 1, 0);
  std::vector<element> scratch;
  do {
    element prev = nest_at(op, tuple, 1, scratch);
    for (unsigned i = 1; i < m; ++i) {
      element next = nest_at(op, tuple, i + 1, scratch);
      if (prev != next)
        return check_result::fail(
            {witness_kind::assoc_fail, false, {i, i + 1}, {tuple}, prev, next});
      prev = next;
    }
  } while (next_tuple(tuple, k));
  return check_result::pass();
}

check_result check_commutativity(const op_table& op, std::uint64_t budget) {
  const unsigned m = op.arity();
  const unsigned k = op.carrier_size();
  require_budget(k, m, m, budget);

  std::vector<element> tuple(m, 0);
  do {
    element base = op.eval(tuple);
    for (unsigned i = 0; i + 1 < m; ++i) {
      if (tuple[i] == tuple[i + 1]) continue;
      std::swap(tuple[i], tuple[i + 1]);
      element swapped = op.eval(tuple);
      std::swap(tuple[i], tuple[i + 1]);
      if (base != swapped)
        return check_result::fail({witness_kind::comm_fail,
                                   false,
                                   {i + 1, i + 2},
                                   {tuple},
                                   base,
                                   swapped});
    }
  } while (next_tuple(tuple, k));
  return check_result::pass();
}

check_result check_distributivity(const op_table& g, const op_table& f,
                                  std::uint64_t budget) {
  if (g.carrier_size() != f.carrier_size())
    throw carrier_mismatch("distributivity needs a shared carrier");
  const unsigned n = g.arity();
  const unsigned m = f.arity();
  const unsigned k = g.carrier_size();
  require_budget(k, n - 1 + m, n, budget);

  std::vector<element> ctx(n - 1, 0);
  std::vector<element> g_args(n);
  std::vector<element> f_args(m);
  for (unsigned i = 1; i <= n; ++i) {
    std::fill(ctx.begin(), ctx.end(), 0);
    do {
      std::vector<element> inner(m, 0);
      do {
        element folded = f.eval(inner);
        std::copy(ctx.begin(), ctx.begin() + (i - 1), g_args.begin());
        std::copy(ctx.begin() + (i - 1), ctx.end(), g_args.begin() + i);
        g_args[i - 1] = folded;
        element lhs = g.eval(g_args);
        for (unsigned j = 0; j < m; ++j) {
          g_args[i - 1] = inner[j];
          f_args[j] = g.eval(g_args);
        }
        element rhs = f.eval(f_args);
        if (lhs != rhs)
          return check_result::fail(
              {witness_kind::dist_fail, true, {i}, {ctx, inner}, lhs, rhs});
      } while (next_tuple(inner, k));
    } while (next_tuple(ctx, k));
  }
  return check_result::pass();
}

std::vector<element> all_identities(const op_table& op) {
  const unsigned m = op.arity();
  const unsigned k = op.carrier_size();
  std::vector<element> found;
  std::vector<element> args(m);
  for (element e = 0; e < k; ++e) {
    bool neutral = true;
    for (unsigned i = 0; i < m && neutral; ++i) {
      std::fill(args.begin(), args.end(), e);
      for (element x = 0; x < k; ++x) {
        args[i] = x;
        if (op.eval(args) != x) {
          neutral = false;
          break;
        }
      }
    }
    if (neutral) found.push_back(e);
  }
  return found;
}

std::optional<element> find_identity(const op_table& op) {
  std::vector<element> ids = all_identities(op);
  if (ids.empty()) return std::nullopt;
  return ids.front();
}

bool is_absorbing(const mn_semiring& s, element z) {
  const op_table& g = s.g();
  if (z >= s.carrier_size())
    throw index_out_of_range("element " + std::to_string(z) +
                             " outside carrier");
  const unsigned n = g.arity();
  std::vector<element> ctx(n - 1, 0);
  std::vector<element> args(n);
  for (unsigned i = 0; i < n; ++i) {
    std::fill(ctx.begin(), ctx.end(), 0);
    do {
      std::copy(ctx.begin(), ctx.begin() + i, args.begin());
      args[i] = z;
      std::copy(ctx.begin() + i, ctx.end(), args.begin() + i + 1);
      if (g.eval(args) != z) return false;
    } while (next_tuple(ctx, s.carrier_size()));
  }
  return true;
}

check_result is_zero_divisor_free(const mn_semiring& s) {
  if (!s.f_identity()) throw no_identity("no f-identity: zero is undefined");
  const element zero = *s.f_identity();
  const op_table& g = s.g();
  const unsigned k = s.carrier_size();
  if (k == 1) return check_result::pass();

  // Walk tuples over the k-1 nonzero elements only.
  std::vector<element> index(g.arity(), 0);
  std::vector<element> args(g.arity());
  do {
    for (std::size_t i = 0; i < index.size(); ++i)
      args[i] = index[i] < zero ? index[i] : index[i] + 1;
    if (g.eval(args) == zero)
      return check_result::fail(
          {witness_kind::zero_divisor, true, {}, {args}, zero, zero});
  } while (next_tuple(index, k - 1));
  return check_result::pass();
}

check_result is_zero_sum_free(const mn_semiring& s) {
  if (!s.f_identity()) throw no_identity("no f-identity: zero is undefined");
  const element zero = *s.f_identity();
  const op_table& f = s.f();
  std::vector<element> tuple(f.arity(), 0);
  do {
    if (f.eval(tuple) == zero &&
        std::any_of(tuple.begin(), tuple.end(),
                    [&](element x) { return x != zero; }))
      return check_result::fail(
          {witness_kind::zero_sum, false, {}, {tuple}, zero, zero});
  } while (next_tuple(tuple, s.carrier_size()));
  return check_result::pass();
}

check_result is_cancellative(const op_table& op, std::uint64_t budget) {
  const unsigned m = op.arity();
  const unsigned k = op.carrier_size();
  require_budget(k, m, k, budget);

  constexpr element unseen = ~element{0};
  std::vector<element> ctx(m - 1, 0);
  std::vector<element> args(m);
  std::vector<element> first_arg(k);
  for (unsigned i = 0; i < m; ++i) {
    std::fill(ctx.begin(), ctx.end(), 0);
    do {
      std::fill(first_arg.begin(), first_arg.end(), unseen);
      std::copy(ctx.begin(), ctx.begin() + i, args.begin());
      std::copy(ctx.begin() + i, ctx.end(), args.begin() + i + 1);
      for (element a = 0; a < k; ++a) {
        args[i] = a;
        element r = op.eval(args);
        if (first_arg[r] != unseen)
          return check_result::fail({witness_kind::cancel_fail,
                                     false,
                                     {i + 1},
                                     {ctx, {first_arg[r], a}},
                                     r,
                                     r});
        first_arg[r] = a;
      }
    } while (next_tuple(ctx, k));
  }
  return check_result::pass();
}

bool is_left_cancellable_tuple(const op_table& op,
                               std::span<const element> tuple) {
  const unsigned m = op.arity();
  if (tuple.size() + 1 != m)
    throw arity_mismatch("context needs " + std::to_string(m - 1) +
                         " elements, got " + std::to_string(tuple.size()));
  const unsigned k = op.carrier_size();
  std::vector<element> args(tuple.begin(), tuple.end());
  args.push_back(0);
  std::vector<bool> seen(k, false);
  for (element a = 0; a < k; ++a) {
    args.back() = a;
    element r = op.eval(args);
    if (seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

bool is_mult_left_cancellative(const mn_semiring& s) {
  if (!s.f_identity()) throw no_identity("no f-identity: zero is undefined");
  const element zero = *s.f_identity();
  const unsigned k = s.carrier_size();
  if (k == 1) return true;

  std::vector<element> index(s.n() - 1, 0);
  std::vector<element> tuple(s.n() - 1);
  do {
    for (std::size_t i = 0; i < index.size(); ++i)
      tuple[i] = index[i] < zero ? index[i] : index[i] + 1;
    if (!is_left_cancellable_tuple(s.g(), tuple)) return false;
  } while (next_tuple(index, k - 1));
  return true;
}

std::vector<element> idempotent_elements(const op_table& op,
                                         std::optional<element> exclude) {
  std::vector<element> out;
  std::vector<element> diag(op.arity());
  for (element x = 0; x < op.carrier_size(); ++x) {
    if (exclude && *exclude == x) continue;
    std::fill(diag.begin(), diag.end(), x);
    if (op.eval(diag) == x) out.push_back(x);
  }
  return out;
}

property_report verify_mn_semiring(const mn_semiring& s,
                                   std::uint64_t budget) {
  property_report r;
  r.associative_f = check_associativity(s.f(), budget);
  r.associative_g = check_associativity(s.g(), budget);
  if (r.associative_g.counterexample) r.associative_g.counterexample->on_g = true;
  r.distributive = check_distributivity(s.g(), s.f(), budget);
  r.commutative_f = check_commutativity(s.f(), budget);
  r.commutative_g = check_commutativity(s.g(), budget);
  if (r.commutative_g.counterexample) r.commutative_g.counterexample->on_g = true;
  r.f_identity = s.f_identity();
  r.g_identity = s.g_identity();
  if (r.f_identity) {
    r.absorbing_zero = is_absorbing(s, *r.f_identity);
    r.zero_divisor_free = is_zero_divisor_free(s);
    r.zero_sum_free = is_zero_sum_free(s);
  }
  r.add_cancellative = is_cancellative(s.f(), budget);
  r.mult_cancellative = is_cancellative(s.g(), budget);
  if (r.mult_cancellative.counterexample)
    r.mult_cancellative.counterexample->on_g = true;
  r.add_idempotent = check_idempotency(s.f(), std::nullopt);
  r.mult_idempotent = check_idempotency(s.g(), s.f_identity());
  if (r.mult_idempotent.counterexample)
    r.mult_idempotent.counterexample->on_g = true;
  return r;
}

bool replay_witness(const op_table& op, const witness& w) {
  std::vector<element> scratch;
  switch (w.kind) {
    case witness_kind::assoc_fail: {
      if (w.args.size() != 1 || w.positions.size() != 2) return false;
      element lhs = nest_at(op, w.args[0], w.positions[0], scratch);
      element rhs = nest_at(op, w.args[0], w.positions[1], scratch);
      return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
    }
    case witness_kind::comm_fail: {
      if (w.args.size() != 1 || w.positions.size() != 2) return false;
      std::vector<element> t = w.args[0];
      element lhs = op.eval(t);
      std::swap(t[w.positions[0] - 1], t[w.positions[1] - 1]);
      element rhs = op.eval(t);
      return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
    }
    case witness_kind::cancel_fail: {
      if (w.args.size() != 2 || w.args[1].size() != 2 ||
          w.positions.size() != 1)
        return false;
      const unsigned i = w.positions[0] - 1;
      std::vector<element> args(w.args[0]);
      args.insert(args.begin() + i, w.args[1][0]);
      element ra = op.eval(args);
      args[i] = w.args[1][1];
      element rb = op.eval(args);
      return ra == rb && ra == w.lhs && w.args[1][0] != w.args[1][1];
    }
    case witness_kind::zero_divisor: {
      if (w.args.size() != 1) return false;
      const element zero = w.rhs;
      for (element x : w.args[0])
        if (x == zero) return false;
      return op.eval(w.args[0]) == zero;
    }
    case witness_kind::zero_sum: {
      if (w.args.size() != 1) return false;
      const element zero = w.rhs;
      bool some_nonzero = std::any_of(w.args[0].begin(), w.args[0].end(),
                                      [&](element x) { return x != zero; });
      return some_nonzero && op.eval(w.args[0]) == zero;
    }
    case witness_kind::other: {
      // Idempotency failure: one element whose diagonal image differs.
      if (w.args.size() != 1 || w.args[0].size() != 1) return false;
      std::vector<element> diag(op.arity(), w.args[0][0]);
      return op.eval(diag) == w.lhs && w.lhs != w.rhs;
    }
    case witness_kind::dist_fail:
      return false;  // needs both tables
  }
  return false;
}

bool replay_witness(const op_table& g, const op_table& f, const witness& w) {
  if (w.kind != witness_kind::dist_fail) return replay_witness(w.on_g ? g : f, w);
  if (w.args.size() != 2 || w.positions.size() != 1) return false;
  const unsigned i = w.positions[0];
  const std::vector<element>& ctx = w.args[0];
  const std::vector<element>& inner = w.args[1];
  if (ctx.size() + 1 != g.arity() || inner.size() != f.arity()) return false;

  std::vector<element> g_args(g.arity());
  std::copy(ctx.begin(), ctx.begin() + (i - 1), g_args.begin());
  std::copy(ctx.begin() + (i - 1), ctx.end(), g_args.begin() + i);
  g_args[i - 1] = f.eval(inner);
  element lhs = g.eval(g_args);
  std::vector<element> f_args(f.arity());
  for (unsigned j = 0; j < f.arity(); ++j) {
    g_args[i - 1] = inner[j];
    f_args[j] = g.eval(g_args);
  }
  element rhs = f.eval(f_args);
  return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
}

bool replay_witness(const mn_semiring& s, const witness& w) {
  if (w.kind == witness_kind::dist_fail) return replay_witness(s.g(), s.f(), w);
  return replay_witness(w.on_g ? s.g() : s.f(), w);
}

std::string describe(const witness& w) {
  static const char* names[] = {"associativity", "commutativity",
                                "distributivity", "cancellativity",
                                "zero-divisor", "zero-sum", "property"};
  std::ostringstream os;
  os << names[static_cast<int>(w.kind)] << " violation on "
     << (w.on_g ? 'g' : 'f');
  if (!w.positions.empty()) {
    os << ", position" << (w.positions.size() > 1 ? "s (" : " (");
    for (std::size_t i = 0; i < w.positions.size(); ++i)
      os << (i ? "," : "") << w.positions[i];
    os << ")";
  }
  for (const auto& tuple : w.args) {
    os << ", (";
    for (std::size_t i = 0; i < tuple.size(); ++i)
      os << (i ? "," : "") << tuple[i];
    os << ")";
  }
  os << ": " << w.lhs << " vs " << w.rhs;
  return os.str();
}

}  // namespace mnsr
