// aopsynth: JSON serialization of instances, circuits, and solve stats.
#pragma once

#include <string>

#include "aop/aop.hpp"
#include "aop/circuit.hpp"
#include "aop/fractional.hpp"
#include "aop/solver.hpp"

namespace aop {

/// {"nodes":[{"op":"in","idx":i} | {"op":"and","l":a,"r":b} | ...],"out":k}
std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

/// {"gates":"AOAO...","arrival":[...]}; arrival entries must be integers
/// or decimal strings.  Bare non-integral numbers are rejected because
/// binary floating point cannot represent them exactly.
std::string instance_to_json(const AopSpec& spec);
FractionalInstance instance_from_json(const std::string& text);

/// Converts an all-integral fractional instance; throws otherwise.
AopSpec to_integral(const FractionalInstance& inst);

/// {"E":...,"P":...} plus "ms" when timing is requested.
std::string stats_to_json(const SolveStats& stats, bool with_timing);

} // namespace aop
