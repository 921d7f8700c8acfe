#include "mnsr/ideals.hpp"

#include <algorithm>
#include <bit>

namespace mnsr {

carrier_subset carrier_subset::of(unsigned k,
                                  std::initializer_list<element> members) {
  carrier_subset s{k, 0};
  for (element x : members) s.insert(x);
  return s;
}

carrier_subset carrier_subset::full(unsigned k) {
  if (k > 64) throw carrier_too_large("subset bitmask holds at most 64");
  return {k, k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1};
}

void carrier_subset::insert(element x) {
  if (x >= carrier_size || x >= 64)
    throw index_out_of_range("element " + std::to_string(x) +
                             " outside carrier of size " +
                             std::to_string(carrier_size));
  mask |= std::uint64_t{1} << x;
}

unsigned carrier_subset::count() const {
  return static_cast<unsigned>(std::popcount(mask));
}

std::vector<element> carrier_subset::members() const {
  std::vector<element> out;
  out.reserve(count());
  for (element x = 0; x < carrier_size; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

namespace {

void require_same_carrier(const mn_semiring& s, const carrier_subset& subset) {
  if (subset.carrier_size != s.carrier_size())
    throw carrier_mismatch("subset carrier differs from the algebra");
}

// Next tuple over an explicit member list (indices into members).
bool next_member_tuple(std::vector<std::size_t>& idx, std::size_t count) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < count) return true;
    idx[i] = 0;
  }
  return false;
}

// Mixed-radix variant for one member list per position.
bool next_mixed_tuple(std::vector<std::size_t>& idx,
                      const std::vector<std::vector<element>>& members) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < members[i].size()) return true;
    idx[i] = 0;
  }
  return false;
}

std::optional<witness> f_closure_gap(const mn_semiring& s,
                                     const carrier_subset& subset) {
  const auto members = subset.members();
  std::vector<std::size_t> idx(s.m(), 0);
  std::vector<element> args(s.m());
  do {
    for (std::size_t i = 0; i < idx.size(); ++i) args[i] = members[idx[i]];
    element r = s.f().eval(args);
    if (!subset.contains(r))
      return witness{witness_kind::other, false, {}, {args}, r, r};
  } while (next_member_tuple(idx, members.size()));
  return std::nullopt;
}

}  // namespace

check_result is_i_ideal(const mn_semiring& s, const carrier_subset& subset,
                        unsigned i) {
  require_same_carrier(s, subset);
  if (i < 1 || i > s.n())
    throw position_out_of_range("position " + std::to_string(i) +
                                " outside 1.." + std::to_string(s.n()));
  if (subset.empty()) throw empty_subset("ideals are nonempty");

  if (auto w = f_closure_gap(s, subset)) return check_result::fail(*w);

  const unsigned k = s.carrier_size();
  std::vector<element> ctx(s.n() - 1, 0);
  std::vector<element> args(s.n());
  do {
    std::copy(ctx.begin(), ctx.begin() + (i - 1), args.begin());
    std::copy(ctx.begin() + (i - 1), ctx.end(), args.begin() + i);
    for (element a : subset.members()) {
      args[i - 1] = a;
      element r = s.g().eval(args);
      if (!subset.contains(r))
        return check_result::fail(
            {witness_kind::other, true, {i}, {ctx, {a}}, r, r});
    }
  } while (next_tuple(ctx, k));
  return check_result::pass();
}

bool is_ideal(const mn_semiring& s, const carrier_subset& subset) {
  for (unsigned i = 1; i <= s.n(); ++i)
    if (!is_i_ideal(s, subset, i).ok) return false;
  return true;
}

carrier_subset ideal_generated_by(const mn_semiring& s,
                                  const carrier_subset& seed) {
  require_same_carrier(s, seed);
  if (seed.empty()) throw empty_subset("cannot generate from the empty set");

  carrier_subset current = seed;
  const unsigned k = s.carrier_size();
  for (;;) {
    carrier_subset next = current;

    const auto members = current.members();
    std::vector<std::size_t> idx(s.m(), 0);
    std::vector<element> args(s.m());
    do {
      for (std::size_t i = 0; i < idx.size(); ++i) args[i] = members[idx[i]];
      next.insert(s.f().eval(args));
    } while (next_member_tuple(idx, members.size()));

    std::vector<element> ctx(s.n() - 1, 0);
    std::vector<element> g_args(s.n());
    for (unsigned i = 1; i <= s.n(); ++i) {
      std::fill(ctx.begin(), ctx.end(), 0);
      do {
        std::copy(ctx.begin(), ctx.begin() + (i - 1), g_args.begin());
        std::copy(ctx.begin() + (i - 1), ctx.end(), g_args.begin() + i);
        for (element a : members) {
          g_args[i - 1] = a;
          next.insert(s.g().eval(g_args));
        }
      } while (next_tuple(ctx, k));
    }

    if (next == current) return current;
    current = next;
  }
}

carrier_subset f_image_of_ideals(const mn_semiring& s,
                                 std::span<const carrier_subset> parts) {
  if (parts.size() != s.m())
    throw arity_mismatch("f-image needs exactly m subsets");
  std::vector<std::vector<element>> members;
  for (const auto& part : parts) {
    require_same_carrier(s, part);
    if (part.empty()) throw empty_subset("ideals are nonempty");
    members.push_back(part.members());
  }

  carrier_subset image{s.carrier_size(), 0};
  std::vector<std::size_t> idx(s.m(), 0);
  std::vector<element> args(s.m());
  do {
    for (std::size_t i = 0; i < idx.size(); ++i)
      args[i] = members[i][idx[i]];
    image.insert(s.f().eval(args));
  } while (next_mixed_tuple(idx, members));
  return image;
}

carrier_subset product_of_subsets(const mn_semiring& s,
                                  std::span<const carrier_subset> parts) {
  if (parts.size() != s.n())
    throw arity_mismatch("product needs exactly n subsets");
  std::vector<std::vector<element>> members;
  for (const auto& part : parts) {
    require_same_carrier(s, part);
    if (part.empty()) throw empty_subset("product factors are nonempty");
    members.push_back(part.members());
  }

  // Elementary g-products, then close under f. Associativity of f makes the
  // closure coincide with iterated block sums of elementary products.
  carrier_subset current{s.carrier_size(), 0};
  {
    std::vector<std::size_t> idx(s.n(), 0);
    std::vector<element> args(s.n());
    do {
      for (std::size_t i = 0; i < idx.size(); ++i)
        args[i] = members[i][idx[i]];
      current.insert(s.g().eval(args));
    } while (next_mixed_tuple(idx, members));
  }

  for (;;) {
    carrier_subset next = current;
    const auto elems = current.members();
    std::vector<std::size_t> idx(s.m(), 0);
    std::vector<element> args(s.m());
    do {
      for (std::size_t i = 0; i < idx.size(); ++i) args[i] = elems[idx[i]];
      next.insert(s.f().eval(args));
    } while (next_member_tuple(idx, elems.size()));
    if (next == current) return current;
    current = next;
  }
}

carrier_subset intersect_ideals(const mn_semiring& s,
                                std::span<const carrier_subset> ideals) {
  if (ideals.empty()) throw empty_subset("nothing to intersect");
  carrier_subset out = carrier_subset::full(s.carrier_size());
  for (const auto& ideal : ideals) {
    require_same_carrier(s, ideal);
    if (ideal.empty()) throw empty_subset("ideals are nonempty");
    out.mask &= ideal.mask;
  }
  if (out.empty())
    throw empty_intersection("ideals intersect to the empty set");
  return out;
}

}  // namespace mnsr
