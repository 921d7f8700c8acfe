#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "mnsr/errors.hpp"

namespace mnsr {

// System composition term. A series node (written "f") fails as soon as any
// child fails; a parallel node (written "g") fails only when every child
// has failed. zero is the component that never fails, one the component
// that is always down.
//
// Raw terms allow any child count >= 1. Normal forms additionally have
// children sorted in canonical order, at least two children per node, no
// series directly under series or parallel under parallel, and no constants
// left under either operator.
class term {
 public:
  enum class kind { zero, one, atom, series, parallel };

  static term zero();
  static term one();
  static term atom(std::string id);
  static term series(std::vector<term> children);
  static term parallel(std::vector<term> children);

  kind node_kind() const { return kind_; }
  bool is_constant() const { return kind_ == kind::zero || kind_ == kind::one; }
  const std::string& atom_id() const;
  const std::vector<term>& children() const;

  std::string str() const;  // s-expression form

  bool operator==(const term& other) const;

 private:
  term(kind k, std::string id, std::vector<term> children)
      : kind_(k), atom_(std::move(id)), children_(std::move(children)) {}

  kind kind_;
  std::string atom_;
  std::vector<term> children_;
};

// Canonical total order used to sort children: constants, then atoms by
// identifier, then series, then parallel; composite ties break
// lexicographically by children. Any fixed total order works; this one is
// pinned for reproducibility.
std::strong_ordering term_order(const term& a, const term& b);

// Grammar: term := "0" | "1" | IDENT | "(" ("f"|"g") term term+ ")" with
// IDENT = [A-Za-z][A-Za-z0-9_]*, whitespace separated. Composites need at
// least two children; "(f)" raises empty_operator, one child is a
// syntax_error.
term parse_term(std::string_view text);

// Fixpoint of: flatten same-operator nestings, drop the neutral constant
// under each operator, collapse on the absorbing one, eliminate empty and
// single-child nodes, sort children canonically. Duplicate children are
// kept: f(x, x) and x differ in general.
term normalize(const term& t);

// Structural equality of normal forms.
bool term_equal(const term& a, const term& b);

// Sorted unique atom identifiers occurring in t.
std::vector<std::string> atoms_of(const term& t);

}  // namespace mnsr
