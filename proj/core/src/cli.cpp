#include "mnsr/cli.hpp"

#include <charconv>
#include <ostream>

#include "mnsr/checks.hpp"
#include "mnsr/constructions.hpp"
#include "mnsr/ft_order.hpp"
#include "mnsr/ideals.hpp"
#include "mnsr/io.hpp"
#include "mnsr/morphisms.hpp"

namespace mnsr::cli {

namespace {

constexpr const char* usage_text = R"(usage: mnsr <command> [args] [flags]

commands:
  algebra check <file>                     verify the semiring axioms
  algebra props <file>                     full structural property report
  algebra congruences <file>               enumerate all congruences
  algebra quotient <file> <partition>      quotient algebra by a congruence
  algebra iso <file1> <file2>              search for an isomorphism
  hom check <src> <dst> <map>              homomorphism check
  hom kernel <map>                         kernel partition of a map
  hom factor <src> <dst> <map>             factor a homomorphism through its kernel
  ideal check <file> <subset>              ideal check
  ideal generate <file> <subset>           least ideal containing the subset
  ideal product <file> <subset>...         product of n subsets
  ideal intersect <file> <subset>...       intersection of ideals
  order compare <poset> <term1> <term2>    derive the fault-tolerance order
  order soundness <poset> <term1> <term2>  derivation vs sampled semantics
  reliability eval <assignment> <term>     exact failure probability

flags: --seed N   --samples N   --budget N   --max-k N

formats: subsets "0,2,4"; partitions "0,3|1,4|2,5"; maps "0,1,2,0,1,2";
poset files "a <= b" per line; assignment files "a = p/q" per line.
)";

struct options {
  std::uint64_t seed = 1;
  unsigned samples = 64;
  std::uint64_t budget = default_budget;
  unsigned max_k = 12;
  std::vector<std::string> positional;

  limits bounds() const { return limits{4, max_k}; }
};

struct usage_error_exc {
  std::string message;
};

[[noreturn]] void usage_fail(const std::string& message) {
  throw usage_error_exc{message};
}

std::uint64_t parse_flag_value(const std::string& flag,
                               const std::string& word) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    usage_fail("flag " + flag + " needs a number, got '" + word + "'");
  return value;
}

options parse_options(const std::vector<std::string>& args) {
  options opt;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) {
      opt.positional.push_back(a);
      continue;
    }
    if (i + 1 >= args.size()) usage_fail("flag " + a + " needs a value");
    const std::string& v = args[++i];
    if (a == "--seed")
      opt.seed = parse_flag_value(a, v);
    else if (a == "--samples")
      opt.samples = static_cast<unsigned>(parse_flag_value(a, v));
    else if (a == "--budget")
      opt.budget = parse_flag_value(a, v);
    else if (a == "--max-k")
      opt.max_k = static_cast<unsigned>(parse_flag_value(a, v));
    else
      usage_fail("unknown flag " + a);
  }
  return opt;
}

const char* yn(bool b) { return b ? "true" : "false"; }

void print_check(std::ostream& out, const char* name, const check_result& r) {
  out << name << ": " << yn(r.ok) << "\n";
  if (!r.ok && r.counterexample)
    out << name << "_witness: " << describe(*r.counterexample) << "\n";
}

void print_opt_element(std::ostream& out, const char* name,
                       const std::optional<element>& e) {
  out << name << ": ";
  if (e)
    out << *e;
  else
    out << "none";
  out << "\n";
}

int cmd_algebra_check(const options& opt, std::ostream& out) {
  mn_semiring s = parse_algebra_file(opt.positional[2], opt.bounds());
  property_report rep = verify_mn_semiring(s, opt.budget);
  out << "command: algebra check\n";
  out << "file: " << opt.positional[2] << "\n";
  out << "semiring: " << yn(rep.is_mn_semiring()) << "\n";
  print_check(out, "associative_f", rep.associative_f);
  print_check(out, "associative_g", rep.associative_g);
  print_check(out, "distributive", rep.distributive);
  return rep.is_mn_semiring() ? 0 : 1;
}

int cmd_algebra_props(const options& opt, std::ostream& out) {
  mn_semiring s = parse_algebra_file(opt.positional[2], opt.bounds());
  property_report rep = verify_mn_semiring(s, opt.budget);
  out << "command: algebra props\n";
  out << "file: " << opt.positional[2] << "\n";
  out << "semiring: " << yn(rep.is_mn_semiring()) << "\n";
  print_check(out, "associative_f", rep.associative_f);
  print_check(out, "associative_g", rep.associative_g);
  print_check(out, "distributive", rep.distributive);
  print_check(out, "commutative_f", rep.commutative_f);
  print_check(out, "commutative_g", rep.commutative_g);
  print_opt_element(out, "f_identity", rep.f_identity);
  print_opt_element(out, "g_identity", rep.g_identity);
  if (rep.absorbing_zero)
    out << "absorbing_zero: " << yn(*rep.absorbing_zero) << "\n";
  else
    out << "absorbing_zero: undefined (no f-identity)\n";
  if (rep.zero_divisor_free)
    print_check(out, "zero_divisor_free", *rep.zero_divisor_free);
  if (rep.zero_sum_free) print_check(out, "zero_sum_free", *rep.zero_sum_free);
  print_check(out, "add_cancellative", rep.add_cancellative);
  print_check(out, "mult_cancellative", rep.mult_cancellative);
  print_check(out, "add_idempotent", rep.add_idempotent);
  print_check(out, "mult_idempotent", rep.mult_idempotent);
  carrier_subset f_idem{s.carrier_size(), 0}, g_idem{s.carrier_size(), 0};
  for (element x : idempotent_elements(s.f())) f_idem.insert(x);
  for (element x : idempotent_elements(s.g())) g_idem.insert(x);
  out << "idempotents_f: " << format_subset(f_idem) << "\n";
  out << "idempotents_g: " << format_subset(g_idem) << "\n";
  return rep.is_mn_semiring() ? 0 : 1;
}

int cmd_algebra_congruences(const options& opt, std::ostream& out) {
  mn_semiring s = parse_algebra_file(opt.positional[2], opt.bounds());
  auto congruences = enumerate_congruences(s);
  out << "command: algebra congruences\n";
  out << "count: " << congruences.size() << "\n";
  for (const congruence& c : congruences)
    out << "congruence: " << format_partition(c) << "\n";
  return 0;
}

int cmd_algebra_quotient(const options& opt, std::ostream& out) {
  mn_semiring s = parse_algebra_file(opt.positional[2], opt.bounds());
  congruence sigma = parse_partition(opt.positional[3], s.carrier_size());
  if (auto check = is_congruence(s, sigma); !check.ok) {
    out << "command: algebra quotient\n";
    out << "congruence: false\n";
    if (check.counterexample)
      out << "witness: " << describe(*check.counterexample) << "\n";
    return 1;
  }
  mn_semiring q = quotient(s, sigma);
  out << "command: algebra quotient\n";
  out << "congruence: true\n";
  out << "blocks: " << sigma.block_count() << "\n";
  out << serialize_algebra(q);
  return 0;
}

int cmd_algebra_iso(const options& opt, std::ostream& out) {
  mn_semiring s = parse_algebra_file(opt.positional[2], opt.bounds());
  mn_semiring t = parse_algebra_file(opt.positional[3], opt.bounds());
  auto phi = is_isomorphic(s, t);
  out << "command: algebra iso\n";
  out << "isomorphic: " << yn(phi.has_value()) << "\n";
  if (phi) out << "map: " << format_map(*phi) << "\n";
  return phi ? 0 : 1;
}

int cmd_hom_check(const options& opt, std::ostream& out) {
  mn_semiring s = parse_algebra_file(opt.positional[2], opt.bounds());
  mn_semiring t = parse_algebra_file(opt.positional[3], opt.bounds());
  morphism phi = parse_map(opt.positional[4], t.carrier_size());
  check_result r = is_homomorphism(s, t, phi);
  out << "command: hom check\n";
  print_check(out, "homomorphism", r);
  return r.ok ? 0 : 1;
}

int cmd_hom_kernel(const options& opt, std::ostream& out) {
  // Only the map matters for the kernel; the codomain is implied by it.
  morphism phi = parse_map(opt.positional[2], ~0u);
  phi.codomain_size = 0;
  for (element img : phi.map)
    phi.codomain_size = std::max(phi.codomain_size, img + 1);
  out << "command: hom kernel\n";
  out << "kernel: " << format_partition(kernel(phi)) << "\n";
  return 0;
}

int cmd_hom_factor(const options& opt, std::ostream& out) {
  mn_semiring s = parse_algebra_file(opt.positional[2], opt.bounds());
  mn_semiring t = parse_algebra_file(opt.positional[3], opt.bounds());
  morphism phi = parse_map(opt.positional[4], t.carrier_size());
  out << "command: hom factor\n";
  if (auto check = is_homomorphism(s, t, phi); !check.ok) {
    print_check(out, "homomorphism", check);
    return 1;
  }
  factorization fact = induced_injection(s, t, phi);
  out << "homomorphism: true\n";
  out << "kernel: " << format_partition(fact.ker) << "\n";
  out << "quotient_size: " << fact.quot.carrier_size() << "\n";
  out << "injection: " << format_map(fact.injection) << "\n";
  bool exact = compose_maps(fact.projection, fact.injection) == phi;
  out << "factorization_exact: " << yn(exact) << "\n";
  return exact ? 0 : 1;
}

int cmd_ideal(const options& opt, std::ostream& out) {
  const std::string& verb = opt.positional[1];
  mn_semiring s = parse_algebra_file(opt.positional[2], opt.bounds());
  std::vector<carrier_subset> subsets;
  for (std::size_t i = 3; i < opt.positional.size(); ++i)
    subsets.push_back(parse_subset(opt.positional[i], s.carrier_size()));

  out << "command: ideal " << verb << "\n";
  if (verb == "check") {
    bool ok = is_ideal(s, subsets[0]);
    out << "ideal: " << yn(ok) << "\n";
    if (!ok)
      for (unsigned i = 1; i <= s.n(); ++i)
        if (auto r = is_i_ideal(s, subsets[0], i); !r.ok) {
          out << "witness: position " << i << ", "
              << describe(*r.counterexample) << "\n";
          break;
        }
    return ok ? 0 : 1;
  }
  if (verb == "generate") {
    out << "ideal: " << format_subset(ideal_generated_by(s, subsets[0]))
        << "\n";
    return 0;
  }
  if (verb == "product") {
    out << "product: " << format_subset(product_of_subsets(s, subsets))
        << "\n";
    return 0;
  }
  if (verb == "intersect") {
    out << "intersection: " << format_subset(intersect_ideals(s, subsets))
        << "\n";
    return 0;
  }
  usage_fail("unknown ideal subcommand '" + verb + "'");
}

int cmd_order_compare(const options& opt, std::ostream& out) {
  atom_poset poset = parse_poset_file(opt.positional[2]);
  term t1 = parse_term(opt.positional[3]);
  term t2 = parse_term(opt.positional[4]);
  order_result r = derive_order(t1, t2, poset);
  out << "command: order compare\n";
  out << "relation: " << to_string(r.relation) << "\n";
  for (const std::string& rule : r.derivation) out << "rule: " << rule << "\n";
  // Incompleteness is expected: unknown is a valid answer, not a failure.
  return 0;
}

void print_assignment(std::ostream& out, const char* name,
                      const reliability_assignment& r) {
  out << name << ":";
  for (const auto& [atom, p] : r.prob) out << " " << atom << "=" << to_string(p);
  out << "\n";
}

int cmd_order_soundness(const options& opt, std::ostream& out) {
  atom_poset poset = parse_poset_file(opt.positional[2]);
  term t1 = parse_term(opt.positional[3]);
  term t2 = parse_term(opt.positional[4]);
  order_result derived = derive_order(t1, t2, poset);
  semantic_order_result sem =
      semantic_order_sampled(t1, t2, poset, opt.samples, opt.seed);
  out << "command: order soundness\n";
  out << "derived: " << to_string(derived.relation) << "\n";
  out << "sampled: " << to_string(sem.relation) << " (" << sem.samples
      << " samples)\n";

  bool sound = true;
  switch (derived.relation) {
    case order_relation::less_equal:
      sound = !sem.witness_greater.has_value();
      break;
    case order_relation::greater_equal:
      sound = !sem.witness_less.has_value();
      break;
    case order_relation::equal:
      sound = !sem.witness_greater && !sem.witness_less;
      break;
    case order_relation::unknown:
      break;  // nothing was claimed
  }
  out << "soundness: " << (sound ? "consistent" : "VIOLATED") << "\n";
  if (!sound) {
    if (sem.witness_greater)
      print_assignment(out, "witness_greater", *sem.witness_greater);
    if (sem.witness_less) print_assignment(out, "witness_less", *sem.witness_less);
  }
  return sound ? 0 : 1;
}

int cmd_reliability_eval(const options& opt, std::ostream& out) {
  reliability_assignment r = parse_assignment_file(opt.positional[2]);
  term t = parse_term(opt.positional[3]);
  rational p = failure_probability(t, r);
  out << "command: reliability eval\n";
  out << "failure_probability: " << to_string(p) << "\n";
  out << "approx: " << p.get_d() << "\n";
  return 0;
}

int dispatch(const options& opt, std::ostream& out) {
  const auto& pos = opt.positional;
  auto want = [&](std::size_t lo, std::size_t hi = 0) {
    std::size_t upper = hi ? hi : lo;
    if (pos.size() < lo || pos.size() > upper)
      usage_fail("wrong number of arguments for '" + pos[0] + " " + pos[1] +
                 "'");
  };
  const std::string& group = pos[0];
  const std::string& verb = pos.size() > 1 ? pos[1] : std::string();

  if (group == "algebra") {
    if (verb == "check") return want(3), cmd_algebra_check(opt, out);
    if (verb == "props") return want(3), cmd_algebra_props(opt, out);
    if (verb == "congruences") return want(3), cmd_algebra_congruences(opt, out);
    if (verb == "quotient") return want(4), cmd_algebra_quotient(opt, out);
    if (verb == "iso") return want(4), cmd_algebra_iso(opt, out);
  } else if (group == "hom") {
    if (verb == "check") return want(5), cmd_hom_check(opt, out);
    if (verb == "kernel") return want(3), cmd_hom_kernel(opt, out);
    if (verb == "factor") return want(5), cmd_hom_factor(opt, out);
  } else if (group == "ideal") {
    if (verb == "check" || verb == "generate") return want(4), cmd_ideal(opt, out);
    if (verb == "product" || verb == "intersect")
      return want(4, 16), cmd_ideal(opt, out);
  } else if (group == "order") {
    if (verb == "compare") return want(5), cmd_order_compare(opt, out);
    if (verb == "soundness") return want(5), cmd_order_soundness(opt, out);
  } else if (group == "reliability") {
    if (verb == "eval") return want(4), cmd_reliability_eval(opt, out);
  }
  usage_fail("unknown command '" + group + (verb.empty() ? "" : " " + verb) +
             "'");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  try {
    options opt = parse_options(args);
    if (opt.positional.empty()) {
      err << usage_text;
      return 2;
    }
    return dispatch(opt, out);
  } catch (const usage_error_exc& e) {
    err << "error: " << e.message << "\n" << usage_text;
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mnsr::cli
