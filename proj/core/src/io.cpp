#include "mnsr/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mnsr {

namespace {

// Line-oriented scanner: strips '#' comments, skips blanks, tracks the
// 1-based line number for error messages.
struct line_scanner {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool next(std::string& out) {
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + (eol < text.size() ? 1 : 0);
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      std::size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) continue;
      std::size_t e = line.find_last_not_of(" \t\r");
      out.assign(line.substr(b, e - b + 1));
      return true;
    }
    return false;
  }
};

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream in(line);
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

unsigned parse_uint(std::string_view word, std::size_t line_no) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(word.begin(), word.end(), value);
  if (ec != std::errc() || ptr != word.end())
    throw format_error("expected a number, got '" + std::string(word) + "'",
                       line_no);
  return value;
}

unsigned expect_header(line_scanner& in, const std::string& key) {
  std::string line;
  if (!in.next(line)) throw format_error("missing '" + key + "' header", in.line_no);
  auto words = split_words(line);
  if (words.size() != 2 || words[0] != key)
    throw format_error("expected '" + key + " <number>', got '" + line + "'",
                       in.line_no);
  return parse_uint(words[1], in.line_no);
}

op_table rule_table(const std::string& name, unsigned arity, unsigned k,
                    std::size_t line_no) {
  if (name == "mod-add")
    return op_table::from_function(arity, k, [&](std::span<const element> a) {
      element acc = 0;
      for (element x : a) acc = (acc + x) % k;
      return acc;
    });
  if (name == "mod-mul")
    return op_table::from_function(arity, k, [&](std::span<const element> a) {
      unsigned long long acc = 1 % k;
      for (element x : a) acc = acc * x % k;
      return static_cast<element>(acc);
    });
  if (name == "union" || name == "intersection") {
    if ((k & (k - 1)) != 0)
      throw format_error("rule '" + name + "' needs a power-of-two carrier",
                         line_no);
    if (name == "union")
      return op_table::from_function(arity, k, [](std::span<const element> a) {
        element acc = 0;
        for (element x : a) acc |= x;
        return acc;
      });
    return op_table::from_function(arity, k, [&](std::span<const element> a) {
      element acc = k - 1;
      for (element x : a) acc &= x;
      return acc;
    });
  }
  throw format_error("unknown rule '" + name + "'", line_no);
}

op_table parse_payload(line_scanner& in, const std::string& op_name,
                       unsigned arity, unsigned k) {
  std::string line;
  if (!in.next(line))
    throw format_error("missing '" + op_name + "' payload", in.line_no);
  auto words = split_words(line);
  if (words.size() < 2 || words[0] != op_name)
    throw format_error("expected '" + op_name + " table' or '" + op_name +
                           " rule NAME', got '" + line + "'",
                       in.line_no);
  if (words[1] == "rule") {
    if (words.size() != 3)
      throw format_error("expected '" + op_name + " rule NAME'", in.line_no);
    return rule_table(words[2], arity, k, in.line_no);
  }
  if (words[1] != "table")
    throw format_error("payload must be 'table' or 'rule'", in.line_no);

  const std::size_t wanted = table_size(arity, k);
  std::vector<element> entries;
  entries.reserve(wanted);
  for (std::size_t i = 2; i < words.size(); ++i)
    entries.push_back(parse_uint(words[i], in.line_no));
  while (entries.size() < wanted && in.next(line))
    for (const std::string& w : split_words(line))
      entries.push_back(parse_uint(w, in.line_no));
  if (entries.size() != wanted)
    throw format_error("'" + op_name + " table' needs " +
                           std::to_string(wanted) + " entries, got " +
                           std::to_string(entries.size()),
                       in.line_no);
  for (element e : entries)
    if (e >= k)
      throw format_error("table entry " + std::to_string(e) +
                             " outside carrier of size " + std::to_string(k),
                         in.line_no);
  return op_table(arity, k, std::move(entries));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

mn_semiring parse_algebra_text(std::string_view text, limits bounds) {
  line_scanner in{text};
  unsigned k = expect_header(in, "size");
  unsigned m = expect_header(in, "m");
  unsigned n = expect_header(in, "n");
  if (k == 0) throw format_error("carrier must be nonempty", in.line_no);
  op_table f = parse_payload(in, "f", m, k);
  op_table g = parse_payload(in, "g", n, k);
  std::string rest;
  if (in.next(rest))
    throw format_error("unexpected trailing line '" + rest + "'", in.line_no);
  return mn_semiring(std::move(f), std::move(g), bounds);
}

mn_semiring parse_algebra_file(const std::string& path, limits bounds) {
  return parse_algebra_text(read_file(path), bounds);
}

std::string serialize_algebra(const mn_semiring& s) {
  std::ostringstream out;
  out << "size " << s.carrier_size() << "\n";
  out << "m " << s.m() << "\n";
  out << "n " << s.n() << "\n";
  auto emit = [&](const char* name, const op_table& op) {
    out << name << " table\n";
    const auto& entries = op.entries();
    const unsigned k = op.carrier_size();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      out << entries[i];
      out << ((i % k == k - 1 || i + 1 == entries.size()) ? '\n' : ' ');
    }
  };
  emit("f", s.f());
  emit("g", s.g());
  return out.str();
}

atom_poset parse_poset_text(std::string_view text) {
  line_scanner in{text};
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  while (in.next(line)) {
    auto words = split_words(line);
    if (words.size() != 3 || words[1] != "<=")
      throw format_error("expected 'a <= b', got '" + line + "'", in.line_no);
    pairs.emplace_back(words[0], words[2]);
  }
  return atom_poset({}, pairs);
}

atom_poset parse_poset_file(const std::string& path) {
  return parse_poset_text(read_file(path));
}

reliability_assignment parse_assignment_text(std::string_view text) {
  line_scanner in{text};
  reliability_assignment r;
  std::string line;
  while (in.next(line)) {
    auto words = split_words(line);
    if (words.size() != 3 || words[1] != "=")
      throw format_error("expected 'a = p/q', got '" + line + "'", in.line_no);
    try {
      r.prob[words[0]] = parse_probability(words[2]);
    } catch (const error& e) {
      throw format_error(e.what(), in.line_no);
    }
  }
  return r;
}

reliability_assignment parse_assignment_file(const std::string& path) {
  return parse_assignment_text(read_file(path));
}

namespace {

std::vector<unsigned> parse_uint_list(std::string_view text, char sep) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view word = text.substr(start, end - start);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(word.begin(), word.end(), value);
    if (ec != std::errc() || ptr != word.end())
      throw format_error("expected a number, got '" + std::string(word) + "'",
                         1);
    out.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

carrier_subset parse_subset(std::string_view text, unsigned carrier_size) {
  carrier_subset s{carrier_size, 0};
  for (unsigned e : parse_uint_list(text, ','))
    s.insert(e);
  return s;
}

std::string format_subset(const carrier_subset& s) {
  std::string out;
  for (element x : s.members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out.empty() ? "(empty)" : out;
}

congruence parse_partition(std::string_view text, unsigned carrier_size) {
  congruence c{carrier_size, std::vector<unsigned>(carrier_size, ~0u)};
  unsigned block = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('|', start);
    if (end == std::string_view::npos) end = text.size();
    for (unsigned e : parse_uint_list(text.substr(start, end - start), ',')) {
      if (e >= carrier_size)
        throw format_error("element " + std::to_string(e) +
                               " outside carrier of size " +
                               std::to_string(carrier_size),
                           1);
      if (c.block_of[e] != ~0u)
        throw format_error("element " + std::to_string(e) + " listed twice", 1);
      c.block_of[e] = block;
    }
    ++block;
    if (end == text.size()) break;
    start = end + 1;
  }
  for (unsigned e = 0; e < carrier_size; ++e)
    if (c.block_of[e] == ~0u)
      throw format_error("element " + std::to_string(e) + " missing from partition", 1);
  c.canonicalize();
  return c;
}

std::string format_partition(const congruence& c) {
  std::string out;
  for (const auto& block : c.blocks()) {
    if (!out.empty()) out += '|';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

morphism parse_map(std::string_view text, unsigned codomain_size) {
  auto images = parse_uint_list(text, ',');
  morphism phi{static_cast<unsigned>(images.size()), codomain_size, {}};
  phi.map.reserve(images.size());
  for (unsigned img : images) {
    if (img >= codomain_size)
      throw format_error("image " + std::to_string(img) +
                             " outside codomain of size " +
                             std::to_string(codomain_size),
                         1);
    phi.map.push_back(img);
  }
  return phi;
}

std::string format_map(const morphism& phi) {
  std::string out;
  for (std::size_t i = 0; i < phi.map.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(phi.map[i]);
  }
  return out;
}

}  // namespace mnsr
