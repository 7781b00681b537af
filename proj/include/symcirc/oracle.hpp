#pragma once

/// @file oracle.hpp
/// @brief Reference semantics of a spectrum by direct counting. Includes no
/// circuit headers.

#include <vector>

#include "symcirc/spectrum.hpp"

namespace symcirc {

/// spectrum[number of ones in assignment]. Throws std::invalid_argument if
/// the assignment length differs from the arity.
bool oracle_eval(const Spectrum& spectrum, const std::vector<bool>& assignment);

}  // namespace symcirc
