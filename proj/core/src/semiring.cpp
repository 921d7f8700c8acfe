#include "mnsr/semiring.hpp"

#include "mnsr/checks.hpp"

namespace mnsr {

mn_semiring::mn_semiring(op_table f, op_table g, limits bounds)
    : f_(std::move(f)), g_(std::move(g)), bounds_(bounds) {
  if (f_.carrier_size() != g_.carrier_size())
    throw carrier_mismatch("f and g live on carriers of size " +
                           std::to_string(f_.carrier_size()) + " and " +
                           std::to_string(g_.carrier_size()));
  for (unsigned arity : {f_.arity(), g_.arity()})
    if (arity < 2 || arity > bounds_.max_arity)
      throw arity_bound("arity " + std::to_string(arity) + " outside [2, " +
                        std::to_string(bounds_.max_arity) + "]");
  if (carrier_size() > bounds_.max_carrier)
    throw arity_bound("carrier size " + std::to_string(carrier_size()) +
                      " exceeds bound " + std::to_string(bounds_.max_carrier));
  f_identity_ = find_identity(f_);
  g_identity_ = find_identity(g_);
}

}  // namespace mnsr
