#ifndef FAULTLOC_DEPENDENCE_HPP
#define FAULTLOC_DEPENDENCE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "faultloc/ast.hpp"
#include "faultloc/diagnosis.hpp"

namespace faultloc {

/// (target, source): a new value of `source` may produce a new value of
/// `target`.
struct DependencePair {
    std::string target;
    std::string source;

    auto operator<=>(const DependencePair&) const = default;
};

/// Computed or specified dependence relation. `provenance` maps each
/// computed pair to the statements that contributed it; `topTargets` holds
/// variables whose dependences are unconstrained because an abnormal
/// statement reaches them (such a target satisfies any specified pair).
struct DependenceSet {
    std::set<DependencePair> pairs;
    std::map<DependencePair, StmtIdSet> provenance;
    std::set<std::string> topTargets;
};

enum class Granularity {
    Local,  // per-definition, syntactic: rhs variables plus enclosing conditions
    Global, // end-to-end: final values' dependence on initial inputs
};

struct DependenceDiff {
    std::set<DependencePair> missing;  // specified but not computed
    std::set<DependencePair> spurious; // computed but not specified
};

struct FixpointStats {
    int maxLoopPasses = 0; // highest pass count over any single while statement
};

/// Abstract dependences of `p` under the given abnormality assumptions.
/// Assumptions must be ids of assignment statements.
DependenceSet computeDependences(const Program& p, Granularity g,
                                 const StmtIdSet& assumptions = {},
                                 FixpointStats* stats = nullptr);

/// missing = specified \ computed (unless the target is Top);
/// spurious = computed \ specified. Both empty iff no anomaly.
DependenceDiff compareDependences(const DependenceSet& computed,
                                  const DependenceSet& specified);

/// One conflict per discrepancy: a spurious pair blames its contributing
/// statements, a missing pair blames every normal definer of its target.
/// Throws InexplicableMismatch when a discrepancy has no normal statement
/// to blame.
std::vector<Conflict> depConflicts(const Program& p,
                                   const DependenceSet& specified,
                                   Granularity g,
                                   const StmtIdSet& assumptions = {});

/// Oracle adapter for the diagnosis engine: first conflict or nullopt.
ConflictOracle makeDependenceOracle(const Program& p,
                                    const DependenceSet& specified,
                                    Granularity g);

} // namespace faultloc

#endif
