#include "mnsr/morphisms.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace mnsr {

unsigned congruence::block_count() const {
  unsigned max_id = 0;
  for (unsigned b : block_of) max_id = std::max(max_id, b);
  return block_of.empty() ? 0 : max_id + 1;
}

std::vector<std::vector<element>> congruence::blocks() const {
  std::vector<std::vector<element>> out(block_count());
  for (element x = 0; x < block_of.size(); ++x)
    out[block_of[x]].push_back(x);
  return out;
}

void congruence::canonicalize() {
  constexpr unsigned unset = ~0u;
  std::vector<unsigned> rename(block_of.size(), unset);
  unsigned next = 0;
  for (unsigned& b : block_of) {
    if (b >= rename.size())
      throw invariant_violation("block id exceeds carrier size");
    if (rename[b] == unset) rename[b] = next++;
    b = rename[b];
  }
}

congruence congruence::singletons(unsigned k) {
  congruence c{k, std::vector<unsigned>(k)};
  for (unsigned i = 0; i < k; ++i) c.block_of[i] = i;
  return c;
}

congruence congruence::single_block(unsigned k) {
  return congruence{k, std::vector<unsigned>(k, 0)};
}

namespace {

// Single-position compatibility of one same-block pair (a, b) under op:
// for every context and position, op(..a..) and op(..b..) land in the same
// block. Returns a witness on failure.
std::optional<witness> pair_compatible(const op_table& op, bool on_g,
                                       const std::vector<unsigned>& block_of,
                                       element a, element b) {
  const unsigned arity = op.arity();
  const unsigned k = op.carrier_size();
  std::vector<element> ctx(arity - 1, 0);
  std::vector<element> args(arity);
  for (unsigned i = 0; i < arity; ++i) {
    std::fill(ctx.begin(), ctx.end(), 0);
    do {
      std::copy(ctx.begin(), ctx.begin() + i, args.begin());
      std::copy(ctx.begin() + i, ctx.end(), args.begin() + i + 1);
      args[i] = a;
      element ra = op.eval(args);
      args[i] = b;
      element rb = op.eval(args);
      if (block_of[ra] != block_of[rb])
        return witness{witness_kind::other, on_g, {i + 1}, {ctx, {a, b}}, ra, rb};
    } while (next_tuple(ctx, k));
  }
  return std::nullopt;
}

}  // namespace

check_result is_congruence(const mn_semiring& s, const congruence& part) {
  if (part.carrier_size != s.carrier_size() ||
      part.block_of.size() != s.carrier_size())
    throw carrier_mismatch("partition size disagrees with the carrier");
  for (unsigned b : part.block_of)
    if (b >= part.carrier_size)
      throw carrier_mismatch("block id exceeds carrier size");

  const unsigned k = s.carrier_size();
  for (element a = 0; a < k; ++a)
    for (element b = a + 1; b < k; ++b) {
      if (part.block_of[a] != part.block_of[b]) continue;
      for (const op_table* op : {&s.f(), &s.g()}) {
        auto w = pair_compatible(*op, op == &s.g(), part.block_of, a, b);
        if (w) return check_result::fail(std::move(*w));
      }
    }
  return check_result::pass();
}

namespace {

// Recursive restricted-growth-string enumeration. After assigning element e
// to a block we check every same-block pair (r, e) against contexts whose
// results are already assigned; full is_congruence still runs at the leaves
// because results above e gain blocks only later.
struct congruence_search {
  const mn_semiring& s;
  std::vector<unsigned> assign;
  std::vector<congruence>& out;

  bool partial_ok(element e) {
    for (element r = 0; r < e; ++r) {
      if (assign[r] != assign[e]) continue;
      for (const op_table* op : {&s.f(), &s.g()}) {
        const unsigned arity = op->arity();
        std::vector<element> ctx(arity - 1, 0);
        std::vector<element> args(arity);
        for (unsigned i = 0; i < arity; ++i) {
          std::fill(ctx.begin(), ctx.end(), 0);
          do {
            std::copy(ctx.begin(), ctx.begin() + i, args.begin());
            std::copy(ctx.begin() + i, ctx.end(), args.begin() + i + 1);
            args[i] = r;
            element u = op->eval(args);
            args[i] = e;
            element v = op->eval(args);
            if (u <= e && v <= e && assign[u] != assign[v]) return false;
          } while (next_tuple(ctx, s.carrier_size()));
        }
      }
    }
    return true;
  }

  void rec(element e, unsigned used_blocks) {
    const unsigned k = s.carrier_size();
    if (e == k) {
      congruence cand{k, assign};
      if (is_congruence(s, cand).ok) out.push_back(std::move(cand));
      return;
    }
    for (unsigned b = 0; b <= used_blocks && b < k; ++b) {
      assign[e] = b;
      if (partial_ok(e))
        rec(e + 1, std::max(used_blocks, b + 1));
    }
  }
};

}  // namespace

std::vector<congruence> enumerate_congruences(const mn_semiring& s) {
  const unsigned k = s.carrier_size();
  if (k > 10)
    throw carrier_too_large("congruence enumeration is guarded at k <= 10");
  std::vector<congruence> out;
  congruence_search search{s, std::vector<unsigned>(k, 0), out};
  search.rec(0, 0);
  return out;
}

mn_semiring quotient(const mn_semiring& s, const congruence& sigma) {
  if (auto check = is_congruence(s, sigma); !check.ok)
    throw not_a_congruence("partition is not compatible with f and g" +
                           (check.counterexample
                                ? ": " + describe(*check.counterexample)
                                : std::string()));
  congruence canon = sigma;
  canon.canonicalize();
  const unsigned b = canon.block_count();
  std::vector<element> rep(b, 0);
  std::vector<bool> seen(b, false);
  for (element x = 0; x < s.carrier_size(); ++x)
    if (!seen[canon.block_of[x]]) {
      seen[canon.block_of[x]] = true;
      rep[canon.block_of[x]] = x;
    }

  auto collapse = [&](const op_table& op) {
    return op_table::from_function(
        op.arity(), b, [&](std::span<const element> blocks) {
          std::vector<element> args(blocks.size());
          for (std::size_t i = 0; i < blocks.size(); ++i)
            args[i] = rep[blocks[i]];
          return static_cast<element>(canon.block_of[op.eval(args)]);
        });
  };
  return mn_semiring(collapse(s.f()), collapse(s.g()), s.bounds());
}

element morphism::operator()(element x) const {
  if (x >= domain_size) throw index_out_of_range("element outside domain");
  return map[x];
}

morphism morphism::identity(unsigned k) {
  morphism phi{k, k, std::vector<element>(k)};
  for (unsigned i = 0; i < k; ++i) phi.map[i] = i;
  return phi;
}

check_result is_homomorphism(const mn_semiring& s, const mn_semiring& t,
                             const morphism& phi) {
  if (s.m() != t.m() || s.n() != t.n())
    throw arity_mismatch("homomorphism needs matching arities");
  if (phi.domain_size != s.carrier_size() ||
      phi.codomain_size != t.carrier_size() ||
      phi.map.size() != phi.domain_size)
    throw size_mismatch("map does not fit the two carriers");
  for (element img : phi.map)
    if (img >= phi.codomain_size)
      throw index_out_of_range("image outside codomain");

  for (const bool on_g : {false, true}) {
    const op_table& src = on_g ? s.g() : s.f();
    const op_table& dst = on_g ? t.g() : t.f();
    std::vector<element> tuple(src.arity(), 0);
    std::vector<element> mapped(src.arity());
    do {
      element lhs = phi.map[src.eval(tuple)];
      for (std::size_t i = 0; i < tuple.size(); ++i)
        mapped[i] = phi.map[tuple[i]];
      element rhs = dst.eval(mapped);
      if (lhs != rhs)
        return check_result::fail(
            {witness_kind::other, on_g, {}, {tuple}, lhs, rhs});
    } while (next_tuple(tuple, s.carrier_size()));
  }
  return check_result::pass();
}

morphism compose_maps(const morphism& phi, const morphism& psi) {
  if (phi.codomain_size != psi.domain_size)
    throw size_mismatch("inner codomain differs from outer domain");
  morphism out{phi.domain_size, psi.codomain_size,
               std::vector<element>(phi.domain_size)};
  for (unsigned x = 0; x < phi.domain_size; ++x)
    out.map[x] = psi.map[phi.map[x]];
  return out;
}

congruence kernel(const morphism& phi) {
  congruence ker{phi.domain_size, std::vector<unsigned>(phi.domain_size)};
  constexpr unsigned unset = ~0u;
  std::vector<unsigned> block_of_image(phi.codomain_size, unset);
  unsigned next = 0;
  for (element x = 0; x < phi.domain_size; ++x) {
    element img = phi.map[x];
    if (block_of_image[img] == unset) block_of_image[img] = next++;
    ker.block_of[x] = block_of_image[img];
  }
  return ker;
}

factorization induced_injection(const mn_semiring& s, const mn_semiring& t,
                                const morphism& phi) {
  if (auto check = is_homomorphism(s, t, phi); !check.ok)
    throw not_a_homomorphism(
        "map is not a homomorphism: " +
        (check.counterexample ? describe(*check.counterexample)
                              : std::string("no witness")));
  congruence ker = kernel(phi);
  mn_semiring quot = quotient(s, ker);
  morphism projection{s.carrier_size(), ker.block_count(), {}};
  projection.map.assign(ker.block_of.begin(), ker.block_of.end());
  morphism injection{ker.block_count(), t.carrier_size(),
                     std::vector<element>(ker.block_count())};
  for (element x = 0; x < s.carrier_size(); ++x)
    injection.map[ker.block_of[x]] = phi.map[x];
  return {std::move(ker), std::move(quot), std::move(projection),
          std::move(injection)};
}

namespace {

// Per-element structural profile preserved by any isomorphism.
struct element_profile {
  bool f_id, g_id, f_idem, g_idem, g_absorbing;
  auto operator<=>(const element_profile&) const = default;
};

std::vector<element_profile> profiles(const mn_semiring& s) {
  const unsigned k = s.carrier_size();
  std::vector<element_profile> out(k);
  auto f_ids = all_identities(s.f());
  auto g_ids = all_identities(s.g());
  auto f_idem = idempotent_elements(s.f());
  auto g_idem = idempotent_elements(s.g());
  for (element x = 0; x < k; ++x) {
    out[x].f_id = std::ranges::count(f_ids, x) > 0;
    out[x].g_id = std::ranges::count(g_ids, x) > 0;
    out[x].f_idem = std::ranges::count(f_idem, x) > 0;
    out[x].g_idem = std::ranges::count(g_idem, x) > 0;
    out[x].g_absorbing = is_absorbing(s, x);
  }
  return out;
}

struct iso_search {
  const mn_semiring& s;
  const mn_semiring& t;
  std::vector<element_profile> prof_s, prof_t;
  std::vector<element> image;
  std::vector<bool> used;

  // Checks every f/g tuple drawn from the first `assigned` elements whose
  // result is also among them.
  bool consistent(unsigned assigned) {
    for (const bool on_g : {false, true}) {
      const op_table& src = on_g ? s.g() : s.f();
      const op_table& dst = on_g ? t.g() : t.f();
      std::vector<element> tuple(src.arity(), 0);
      std::vector<element> mapped(src.arity());
      do {
        element r = src.eval(tuple);
        if (r >= assigned) continue;
        for (std::size_t i = 0; i < tuple.size(); ++i)
          mapped[i] = image[tuple[i]];
        if (image[r] != dst.eval(mapped)) return false;
      } while (next_tuple(tuple, assigned));
    }
    return true;
  }

  bool rec(unsigned x) {
    if (x == s.carrier_size()) return true;
    for (element y = 0; y < t.carrier_size(); ++y) {
      if (used[y] || prof_s[x] != prof_t[y]) continue;
      image[x] = y;
      used[y] = true;
      if (consistent(x + 1) && rec(x + 1)) return true;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<morphism> is_isomorphic(const mn_semiring& s,
                                      const mn_semiring& t) {
  if (s.carrier_size() > 8 || t.carrier_size() > 8)
    throw carrier_too_large("isomorphism search is guarded at k <= 8");
  if (s.carrier_size() != t.carrier_size() || s.m() != t.m() ||
      s.n() != t.n())
    return std::nullopt;

  iso_search search{s,
                    t,
                    profiles(s),
                    profiles(t),
                    std::vector<element>(s.carrier_size(), 0),
                    std::vector<bool>(t.carrier_size(), false)};
  {
    // Profile multisets must agree before any search.
    auto ps = search.prof_s;
    auto pt = search.prof_t;
    std::sort(ps.begin(), ps.end());
    std::sort(pt.begin(), pt.end());
    if (ps != pt) return std::nullopt;
  }
  if (!search.rec(0)) return std::nullopt;

  morphism phi{s.carrier_size(), t.carrier_size(), search.image};
  if (!is_homomorphism(s, t, phi).ok)
    throw invariant_violation("isomorphism search returned a non-homomorphism");
  return phi;
}

bool refines(const congruence& rho, const congruence& sigma) {
  if (rho.carrier_size != sigma.carrier_size) return false;
  // Within one rho-block all sigma-blocks must agree.
  std::map<unsigned, unsigned> sigma_of_rho_block;
  for (element x = 0; x < rho.carrier_size; ++x) {
    auto [it, inserted] =
        sigma_of_rho_block.emplace(rho.block_of[x], sigma.block_of[x]);
    if (!inserted && it->second != sigma.block_of[x]) return false;
  }
  return true;
}

congruence quotient_congruence(const congruence& rho,
                               const congruence& sigma) {
  if (rho.carrier_size != sigma.carrier_size)
    throw carrier_mismatch("partitions live on different carriers");
  if (!refines(rho, sigma))
    throw not_a_congruence("first partition does not refine the second");
  congruence rho_c = rho;
  rho_c.canonicalize();
  congruence out{rho_c.block_count(),
                 std::vector<unsigned>(rho_c.block_count())};
  for (element x = 0; x < rho.carrier_size; ++x)
    out.block_of[rho_c.block_of[x]] = sigma.block_of[x];
  out.canonicalize();
  return out;
}

}  // namespace mnsr
