#ifndef FAULTLOC_INTERP_HPP
#define FAULTLOC_INTERP_HPP

#include <cstdint>
#include <map>
#include <string>

#include "faultloc/ast.hpp"

namespace faultloc {

struct EvalLimits {
    int maxLoopIterations = 10000; // per entry into a while statement
};

using Env = std::map<std::string, std::int64_t>;

/// Concrete reference semantics. `inputs` must cover exactly p.inputs.
/// Returns final values of all input and assigned variables. Conditions
/// treat 0 as false and anything else as true; arithmetic wraps at 64 bits.
/// Throws EvalError on division by zero or when a loop exceeds the limit.
Env run(const Program& p, const Env& inputs, const EvalLimits& limits = {});

} // namespace faultloc

#endif
