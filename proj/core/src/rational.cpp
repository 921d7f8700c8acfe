#include "mnsr/rational.hpp"

namespace mnsr {

rational parse_probability(const std::string& text) {
  rational q;
  try {
    q = rational(text);
  } catch (const std::invalid_argument&) {
    throw error("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw error("zero denominator in '" + text + "'");
  q.canonicalize();
  if (q < 0 || q > 1)
    throw error("probability " + to_string(q) + " outside [0, 1]");
  return q;
}

std::string to_string(const rational& q) { return q.get_str(); }

}  // namespace mnsr
