#include "mnsr/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mnsr {

term term::zero() { return term(kind::zero, {}, {}); }
term term::one() { return term(kind::one, {}, {}); }

term term::atom(std::string id) {
  if (id.empty()) throw error("atom needs a nonempty identifier");
  return term(kind::atom, std::move(id), {});
}

term term::series(std::vector<term> children) {
  if (children.empty())
    throw empty_operator("series composition of nothing", 0);
  return term(kind::series, {}, std::move(children));
}

term term::parallel(std::vector<term> children) {
  if (children.empty())
    throw empty_operator("parallel composition of nothing", 0);
  return term(kind::parallel, {}, std::move(children));
}

const std::string& term::atom_id() const {
  if (kind_ != kind::atom) throw invariant_violation("not an atom");
  return atom_;
}

const std::vector<term>& term::children() const { return children_; }

bool term::operator==(const term& other) const {
  return kind_ == other.kind_ && atom_ == other.atom_ &&
         children_ == other.children_;
}

std::string term::str() const {
  switch (kind_) {
    case kind::zero: return "0";
    case kind::one: return "1";
    case kind::atom: return atom_;
    case kind::series:
    case kind::parallel: {
      std::string out = kind_ == kind::series ? "(f" : "(g";
      for (const term& c : children_) {
        out += ' ';
        out += c.str();
      }
      out += ')';
      return out;
    }
  }
  return {};
}

std::strong_ordering term_order(const term& a, const term& b) {
  auto rank = [](const term& t) {
    switch (t.node_kind()) {
      case term::kind::zero: return 0;
      case term::kind::one: return 1;
      case term::kind::atom: return 2;
      case term::kind::series: return 3;
      case term::kind::parallel: return 4;
    }
    return 5;
  };
  if (auto c = rank(a) <=> rank(b); c != 0) return c;
  if (a.node_kind() == term::kind::atom) return a.atom_id() <=> b.atom_id();
  if (a.is_constant()) return std::strong_ordering::equal;
  const auto& ca = a.children();
  const auto& cb = b.children();
  for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i)
    if (auto c = term_order(ca[i], cb[i]); c != 0) return c;
  return ca.size() <=> cb.size();
}

namespace {

struct parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_space();
    return pos == text.size();
  }

  [[noreturn]] void fail(const std::string& what) {
    throw syntax_error(what, pos);
  }

  std::string ident() {
    std::size_t start = pos;
    if (!std::isalpha(static_cast<unsigned char>(text[pos])))
      fail("expected an identifier");
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  // A constant or identifier token must end at whitespace or a bracket.
  void require_token_end(const char* what) {
    if (pos < text.size() &&
        (std::isalnum(static_cast<unsigned char>(text[pos])) ||
         text[pos] == '_'))
      fail(std::string("malformed ") + what);
  }

  term parse() {
    skip_space();
    if (pos == text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '0') {
      ++pos;
      require_token_end("constant");
      return term::zero();
    }
    if (c == '1') {
      ++pos;
      require_token_end("constant");
      return term::one();
    }
    if (c == '(') return composite();
    if (std::isalpha(static_cast<unsigned char>(c))) return term::atom(ident());
    fail(std::string("unexpected character '") + c + "'");
  }

  term composite() {
    std::size_t open = pos;
    ++pos;  // '('
    skip_space();
    if (pos == text.size()) fail("unterminated '('");
    if (!std::isalpha(static_cast<unsigned char>(text[pos])))
      fail("expected operator f or g after '('");
    std::string op = ident();
    if (op != "f" && op != "g") fail("operator must be f or g, got '" + op + "'");
    const bool is_series = op == "f";

    std::vector<term> children;
    for (;;) {
      skip_space();
      if (pos == text.size()) fail("unterminated '('");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      children.push_back(parse());
    }
    if (children.empty()) {
      pos = open;
      throw empty_operator("operator applied to no arguments", open);
    }
    if (children.size() < 2)
      throw syntax_error("operator needs at least two arguments", open);
    return is_series ? term::series(std::move(children))
                     : term::parallel(std::move(children));
  }
};

}  // namespace

term parse_term(std::string_view text) {
  parser p{text};
  term t = p.parse();
  if (!p.at_end()) p.fail("trailing input after term");
  return t;
}

namespace {

term normalize_rec(const term& t) {
  switch (t.node_kind()) {
    case term::kind::zero:
    case term::kind::one:
    case term::kind::atom:
      return t;
    case term::kind::series:
    case term::kind::parallel:
      break;
  }
  const bool series = t.node_kind() == term::kind::series;
  const term::kind same = t.node_kind();
  // Under series, zero is neutral and one absorbs; under parallel the
  // two constants swap roles.
  const term::kind neutral = series ? term::kind::zero : term::kind::one;
  const term::kind absorbing = series ? term::kind::one : term::kind::zero;

  std::vector<term> flat;
  for (const term& child : t.children()) {
    term c = normalize_rec(child);
    if (c.node_kind() == same) {
      // A normalized child of the same operator is already flat one level.
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    } else {
      flat.push_back(std::move(c));
    }
  }

  std::vector<term> kept;
  for (term& c : flat) {
    if (c.node_kind() == absorbing)
      return series ? term::one() : term::zero();
    if (c.node_kind() == neutral) continue;
    kept.push_back(std::move(c));
  }

  if (kept.empty()) return series ? term::zero() : term::one();
  if (kept.size() == 1) return kept.front();
  std::sort(kept.begin(), kept.end(),
            [](const term& a, const term& b) { return term_order(a, b) < 0; });
  return series ? term::series(std::move(kept))
                : term::parallel(std::move(kept));
}

}  // namespace

term normalize(const term& t) { return normalize_rec(t); }

bool term_equal(const term& a, const term& b) {
  return normalize(a) == normalize(b);
}

namespace {

void collect_atoms(const term& t, std::set<std::string>& out) {
  if (t.node_kind() == term::kind::atom)
    out.insert(t.atom_id());
  else
    for (const term& c : t.children()) collect_atoms(c, out);
}

}  // namespace

std::vector<std::string> atoms_of(const term& t) {
  std::set<std::string> atoms;
  collect_atoms(t, atoms);
  return {atoms.begin(), atoms.end()};
}

}  // namespace mnsr
