#ifndef FAULTLOC_VALUE_EVAL_HPP
#define FAULTLOC_VALUE_EVAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "faultloc/ast.hpp"
#include "faultloc/diagnosis.hpp"
#include "faultloc/interp.hpp"

namespace faultloc {

/// Concrete inputs plus expected final values of output variables.
struct TestCase {
    std::map<std::string, std::int64_t> inputs;
    std::map<std::string, std::int64_t> expected;
};

/// Value in the known/Unknown domain. `provenance` is the set of assignment
/// statements that contributed to it; input values start with none.
struct PartialValue {
    bool known = false;
    std::int64_t value = 0;
    StmtIdSet provenance;

    static PartialValue knownValue(std::int64_t v, StmtIdSet prov = {});
    static PartialValue unknown(StmtIdSet prov);
};

using PartialEnv = std::map<std::string, PartialValue>;

struct EvalWarning {
    int statementId;
    std::string message;
};

struct PartialEvalResult {
    PartialEnv env;
    std::vector<EvalWarning> warnings; // division-by-zero notes
};

/// Forward evaluation under abnormality assumptions. An abnormal assignment
/// sets its target to Unknown; Unknown is strict through every operator.
/// Division by zero under a normal statement yields Unknown plus a warning.
PartialEvalResult evaluatePartial(const Program& p, const TestCase& t,
                                  const StmtIdSet& assumptions = {},
                                  const EvalLimits& limits = {});

/// NoConflict (nullopt) when every expected variable is Unknown or equals
/// its expectation; otherwise the union of the violated variables' normal
/// provenance. Throws InexplicableMismatch when a violated variable has no
/// normal statement in its provenance.
std::optional<Conflict> valueConflict(const Program& p, const TestCase& t,
                                      const StmtIdSet& assumptions = {},
                                      const EvalLimits& limits = {});

/// Oracle over one or more test cases; conflicts from all of them feed a
/// single hitting-set problem (first violated test wins per call).
ConflictOracle makeValueOracle(const Program& p, std::vector<TestCase> tests,
                               const EvalLimits& limits = {});

} // namespace faultloc

#endif
