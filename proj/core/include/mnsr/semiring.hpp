#pragma once

#include <optional>

#include "mnsr/op_table.hpp"

namespace mnsr {

// Construction-time bounds. Exhaustive axiom checks are exponential in the
// arities, so both the arities and the carrier size are capped by default.
struct limits {
  unsigned max_arity = 4;
  unsigned max_carrier = 12;
};

// Carrier {0..k-1} equipped with an m-ary operation f and an n-ary
// operation g. Identity elements are located eagerly at construction.
//
// Construction does not run the axiom checks; a fresh value counts as
// unverified until verify_mn_semiring has been run on it.
class mn_semiring {
 public:
  mn_semiring(op_table f, op_table g, limits bounds = {});

  unsigned carrier_size() const { return f_.carrier_size(); }
  unsigned m() const { return f_.arity(); }
  unsigned n() const { return g_.arity(); }
  const op_table& f() const { return f_; }
  const op_table& g() const { return g_; }
  limits bounds() const { return bounds_; }

  // Least identity element of f (resp. g), if any exists. For arities >= 3
  // an operation can have several identities; see all_identities.
  std::optional<element> f_identity() const { return f_identity_; }
  std::optional<element> g_identity() const { return g_identity_; }

  bool operator==(const mn_semiring& other) const {
    return f_ == other.f_ && g_ == other.g_;
  }

 private:
  op_table f_;
  op_table g_;
  limits bounds_;
  std::optional<element> f_identity_;
  std::optional<element> g_identity_;
};

}  // namespace mnsr
