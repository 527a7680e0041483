#ifndef FAULTLOC_DIAGNOSIS_HPP
#define FAULTLOC_DIAGNOSIS_HPP

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace faultloc {

using StmtIdSet = std::set<int>;

/// A set of components (statement ids) that cannot all be normal.
using Conflict = StmtIdSet;

/// A subset-minimal hitting set of all known conflicts.
using Diagnosis = StmtIdSet;

/// Consistency oracle: given an assumption set (components assumed
/// abnormal), return a conflict among the remaining normal components, or
/// nullopt when the system is consistent. Must be deterministic.
using ConflictOracle = std::function<std::optional<Conflict>(const StmtIdSet&)>;

struct DiagnosisReport {
    std::vector<Diagnosis> diagnoses;   // ordered by (cardinality, lexicographic)
    std::vector<Conflict> conflictsUsed; // in discovery order
    int oracleCalls = 0;
};

struct DiagnoseOptions {
    int maxCardinality = 3;
    // Greedily shrink each fresh conflict with extra oracle calls.
    bool minimizeConflicts = false;
};

/// Exactly the subset-minimal hitting sets of `conflicts` with cardinality
/// <= maxCardinality, in report order. Conflicts must be nonempty.
/// An empty conflict list yields the single empty diagnosis.
std::vector<Diagnosis> minimalHittingSets(const std::vector<Conflict>& conflicts,
                                          int maxCardinality = 3);

/// Reiter-style hitting-set search with on-demand conflict generation.
/// Oracle errors are rethrown as OracleError carrying the assumption set.
DiagnosisReport diagnose(const ConflictOracle& oracle,
                         const StmtIdSet& componentIds,
                         const DiagnoseOptions& options = {});

/// Reference implementation: enumerate subsets by increasing cardinality.
/// Throws TooManyComponents above 20 components.
std::vector<Diagnosis> bruteForceDiagnose(const ConflictOracle& oracle,
                                          const StmtIdSet& componentIds,
                                          int maxCardinality = 3);

/// Render as "{1, 3}"; ids shown as Roman numerals when `roman` is set.
std::string formatIdSet(const StmtIdSet& ids, bool roman = false);

} // namespace faultloc

#endif
