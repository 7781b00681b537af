#include "symcirc/oracle.hpp"

#include <algorithm>

namespace symcirc {

bool oracle_eval(const Spectrum& spectrum, const std::vector<bool>& assignment) {
  if (assignment.size() != spectrum.n()) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                " bits, function has arity " + std::to_string(spectrum.n()));
  }
  const auto weight = static_cast<std::size_t>(std::count(assignment.begin(), assignment.end(), true));
  return spectrum[weight];
}

}  // namespace symcirc
