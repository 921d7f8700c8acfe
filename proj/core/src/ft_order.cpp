#include "mnsr/ft_order.hpp"

#include <algorithm>

namespace mnsr {

const rational& reliability_assignment::at(const std::string& atom) const {
  auto it = prob.find(atom);
  if (it == prob.end()) throw unassigned_atom("atom '" + atom + "' has no probability");
  return it->second;
}

rational failure_probability(const term& t, const reliability_assignment& r) {
  switch (t.node_kind()) {
    case term::kind::zero: return rational(0);
    case term::kind::one: return rational(1);
    case term::kind::atom: return r.at(t.atom_id());
    case term::kind::series: {
      rational survive(1);
      for (const term& c : t.children())
        survive *= rational(1) - failure_probability(c, r);
      return rational(1) - survive;
    }
    case term::kind::parallel: {
      rational all_fail(1);
      for (const term& c : t.children()) all_fail *= failure_probability(c, r);
      return all_fail;
    }
  }
  throw invariant_violation("unreachable term kind");
}

atom_poset::atom_poset(
    std::vector<std::string> atoms,
    std::span<const std::pair<std::string, std::string>> leq_pairs)
    : atoms_(std::move(atoms)) {
  for (const std::string& a : atoms_) {
    if (index_.contains(a)) throw error("duplicate atom '" + a + "'");
    unsigned id = static_cast<unsigned>(index_.size());
    index_[a] = id;
  }
  // Atoms mentioned only in pairs are registered on the fly.
  for (const auto& [a, b] : leq_pairs)
    for (const std::string* name : {&a, &b})
      if (!index_.contains(*name)) {
        index_[*name] = static_cast<unsigned>(atoms_.size());
        atoms_.push_back(*name);
      }
  const unsigned n = static_cast<unsigned>(atoms_.size());
  leq_.assign(n, std::vector<bool>(n, false));
  for (unsigned i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [a, b] : leq_pairs) leq_[index_[a]][index_[b]] = true;
  // Warshall closure.
  for (unsigned k = 0; k < n; ++k)
    for (unsigned i = 0; i < n; ++i)
      if (leq_[i][k])
        for (unsigned j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i])
        throw poset_cycle("atoms '" + atoms_[i] + "' and '" + atoms_[j] +
                          "' order each other");
}

bool atom_poset::leq(const std::string& a, const std::string& b) const {
  if (a == b) return true;
  auto ia = index_.find(a);
  auto ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end()) return false;
  return leq_[ia->second][ib->second];
}

std::vector<std::pair<std::string, std::string>> atom_poset::strict_pairs()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  for (unsigned i = 0; i < atoms_.size(); ++i)
    for (unsigned j = 0; j < atoms_.size(); ++j)
      if (i != j && leq_[i][j]) out.emplace_back(atoms_[i], atoms_[j]);
  return out;
}

const char* to_string(order_relation r) {
  switch (r) {
    case order_relation::less_equal: return "LE";
    case order_relation::greater_equal: return "GE";
    case order_relation::equal: return "EQ";
    case order_relation::unknown: return "UNKNOWN";
  }
  return "?";
}

const char* to_string(semantic_relation r) {
  switch (r) {
    case semantic_relation::less_equal: return "LE";
    case semantic_relation::greater_equal: return "GE";
    case semantic_relation::equal: return "EQ";
    case semantic_relation::incomparable: return "INC";
  }
  return "?";
}

namespace {

struct term_pair_less {
  bool operator()(const std::pair<term, term>& a,
                  const std::pair<term, term>& b) const {
    if (auto c = term_order(a.first, b.first); c != 0) return c < 0;
    return term_order(a.second, b.second) < 0;
  }
};

// Memoized recursive prover for s <= t over normalized terms. Every
// successful pair remembers the rule that closed it and the subgoal pairs,
// so a readable derivation can be reconstructed afterwards.
struct order_prover {
  const atom_poset& poset;

  struct step {
    const char* rule;
    std::vector<std::pair<term, term>> subgoals;
  };
  std::map<std::pair<term, term>, bool, term_pair_less> memo;
  std::map<std::pair<term, term>, step, term_pair_less> proof;

  bool le(const term& s, const term& t) {
    auto key = std::make_pair(s, t);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    memo[key] = false;  // cycles cannot occur; this guards double work only
    bool ok = derive(s, t, key);
    memo[key] = ok;
    return ok;
  }

  bool derive(const term& s, const term& t,
              const std::pair<term, term>& key) {
    using k = term::kind;

    if (s == t) {
      proof[key] = {"reflexivity", {}};
      return true;
    }
    if (s.node_kind() == k::zero) {
      proof[key] = {"zero-bound", {}};
      return true;
    }
    if (t.node_kind() == k::one) {
      proof[key] = {"one-bound", {}};
      return true;
    }
    if (s.node_kind() == k::atom && t.node_kind() == k::atom &&
        poset.leq(s.atom_id(), t.atom_id())) {
      proof[key] = {"poset-fact", {}};
      return true;
    }
    // A parallel system is at most any of its parts.
    if (s.node_kind() == k::parallel) {
      for (const term& c : s.children())
        if (le(c, t)) {
          proof[key] = {"parallel-member", {{c, t}}};
          return true;
        }
    }
    // A series system is at least any of its parts.
    if (t.node_kind() == k::series) {
      for (const term& c : t.children())
        if (le(s, c)) {
          proof[key] = {"series-member", {{s, c}}};
          return true;
        }
    }
    if (s.node_kind() == k::series && t.node_kind() == k::series)
      return match_children(s.children(), t.children(), key, false);
    if (s.node_kind() == k::parallel && t.node_kind() == k::parallel)
      return match_children(t.children(), s.children(), key, true);
    return false;
  }

  // Injective matching: every term in `need` paired with a distinct term in
  // `offer` such that the pair is derivable. For series/series `need` is the
  // left child list (extra right children only worsen the right side); for
  // parallel/parallel it is the right one (extra left children only improve
  // the left side). `flipped` says the goal direction is offer <= need.
  bool match_children(const std::vector<term>& need,
                      const std::vector<term>& offer,
                      const std::pair<term, term>& key, bool flipped) {
    if (need.size() > offer.size()) return false;
    std::vector<std::vector<std::size_t>> edges(need.size());
    for (std::size_t i = 0; i < need.size(); ++i)
      for (std::size_t j = 0; j < offer.size(); ++j) {
        bool ok = flipped ? le(offer[j], need[i]) : le(need[i], offer[j]);
        if (ok) edges[i].push_back(j);
      }

    // Kuhn's augmenting-path matching; child counts stay tiny.
    std::vector<std::size_t> matched_offer(offer.size(), SIZE_MAX);
    std::vector<bool> visited;
    auto augment = [&](auto&& self, std::size_t i) -> bool {
      for (std::size_t j : edges[i]) {
        if (visited[j]) continue;
        visited[j] = true;
        if (matched_offer[j] == SIZE_MAX || self(self, matched_offer[j])) {
          matched_offer[j] = i;
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < need.size(); ++i) {
      visited.assign(offer.size(), false);
      if (!augment(augment, i)) return false;
    }

    step st;
    st.rule = flipped ? "parallel-monotone" : "series-monotone";
    for (std::size_t j = 0; j < offer.size(); ++j)
      if (matched_offer[j] != SIZE_MAX) {
        const term& a = flipped ? offer[j] : need[matched_offer[j]];
        const term& b = flipped ? need[matched_offer[j]] : offer[j];
        st.subgoals.emplace_back(a, b);
      }
    proof[key] = std::move(st);
    return true;
  }

  void trail(const std::pair<term, term>& key,
             std::vector<std::string>& out) const {
    auto it = proof.find(key);
    if (it == proof.end()) return;
    out.push_back(it->second.rule);
    for (const auto& sub : it->second.subgoals) trail(sub, out);
  }
};

}  // namespace

order_result derive_order(const term& t1, const term& t2,
                          const atom_poset& p) {
  term a = normalize(t1);
  term b = normalize(t2);

  order_prover forward{p};
  order_prover backward{p};
  bool le12 = forward.le(a, b);
  bool le21 = backward.le(b, a);

  order_result out;
  if (le12 && le21) {
    out.relation = order_relation::equal;
    forward.trail({a, b}, out.derivation);
    backward.trail({b, a}, out.derivation);
  } else if (le12) {
    out.relation = order_relation::less_equal;
    forward.trail({a, b}, out.derivation);
  } else if (le21) {
    out.relation = order_relation::greater_equal;
    backward.trail({b, a}, out.derivation);
  }
  return out;
}

reliability_assignment sample_assignment(std::span<const std::string> atoms,
                                         const atom_poset& p,
                                         std::mt19937_64& rng) {
  constexpr unsigned grid = 256;
  reliability_assignment r;
  for (unsigned attempt = 0; attempt < 1'000'000; ++attempt) {
    r.prob.clear();
    for (const std::string& a : atoms) {
      rational p(static_cast<unsigned long>(rng() % (grid + 1)),
                 static_cast<unsigned long>(grid));
      p.canonicalize();
      r.prob[a] = p;
    }
    bool consistent = true;
    for (const std::string& a : atoms) {
      for (const std::string& b : atoms) {
        if (a != b && p.leq(a, b) && r.prob[a] > r.prob[b]) {
          consistent = false;
          break;
        }
      }
      if (!consistent) break;
    }
    if (consistent) return r;
  }
  throw error("rejection sampling failed to respect the poset");
}

semantic_order_result semantic_order_sampled(const term& t1, const term& t2,
                                             const atom_poset& p,
                                             unsigned samples,
                                             std::uint64_t seed) {
  if (samples < 1) throw error("need at least one sample");
  std::vector<std::string> atoms = atoms_of(t1);
  for (std::string& a : atoms_of(t2))
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end())
      atoms.push_back(std::move(a));
  std::sort(atoms.begin(), atoms.end());

  std::mt19937_64 rng(seed);
  semantic_order_result out;
  out.samples = samples;
  bool all_le = true;
  bool all_ge = true;
  for (unsigned i = 0; i < samples; ++i) {
    reliability_assignment r = sample_assignment(atoms, p, rng);
    rational p1 = failure_probability(t1, r);
    rational p2 = failure_probability(t2, r);
    if (p1 > p2) {
      all_le = false;
      if (!out.witness_greater) out.witness_greater = r;
    }
    if (p1 < p2) {
      all_ge = false;
      if (!out.witness_less) out.witness_less = r;
    }
  }
  if (all_le && all_ge)
    out.relation = semantic_relation::equal;
  else if (all_le)
    out.relation = semantic_relation::less_equal;
  else if (all_ge)
    out.relation = semantic_relation::greater_equal;
  else
    out.relation = semantic_relation::incomparable;
  return out;
}

}  // namespace mnsr
