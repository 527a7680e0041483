#include "faultloc/diagnosis.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "faultloc/error.hpp"
#include "faultloc/pretty.hpp"

namespace faultloc {

namespace {

bool isSubset(const StmtIdSet& a, const StmtIdSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const StmtIdSet& a, const StmtIdSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return true;
    }
    return false;
}

// (cardinality, lexicographic) total order used for every report.
bool reportLess(const StmtIdSet& a, const StmtIdSet& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

void sortAndFilterMinimal(std::vector<Diagnosis>& diagnoses) {
    std::sort(diagnoses.begin(), diagnoses.end(), reportLess);
    diagnoses.erase(std::unique(diagnoses.begin(), diagnoses.end()),
                    diagnoses.end());
    std::vector<Diagnosis> minimal;
    for (const Diagnosis& d : diagnoses) {
        bool dominated = false;
        for (const Diagnosis& kept : minimal) {
            if (isSubset(kept, d)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            minimal.push_back(d);
    }
    diagnoses = std::move(minimal);
}

std::string describeAssumptions(const StmtIdSet& assumptions) {
    std::ostringstream os;
    bool first = true;
    for (int id : assumptions) {
        if (!first)
            os << ", ";
        os << id;
        first = false;
    }
    return os.str();
}

class HsTree {
public:
    HsTree(const ConflictOracle& oracle, const StmtIdSet& componentIds,
           int maxCardinality, bool minimize)
        : oracle_(oracle), componentIds_(componentIds),
          maxCardinality_(maxCardinality), minimize_(minimize) {}

    DiagnosisReport run() {
        DiagnosisReport report;
        std::deque<StmtIdSet> queue;
        std::set<StmtIdSet> seen;
        queue.push_back({});
        seen.insert({});

        // Breadth-first keeps levels in cardinality order, so closing
        // against already-found diagnoses preserves subset-minimality.
        while (!queue.empty()) {
            StmtIdSet h = std::move(queue.front());
            queue.pop_front();

            bool closed = false;
            for (const Diagnosis& d : report.diagnoses) {
                if (isSubset(d, h)) {
                    closed = true;
                    break;
                }
            }
            if (closed)
                continue;

            const Conflict* label = reuseLabel(h);
            if (label == nullptr) {
                std::optional<Conflict> fresh = callOracle(h, report);
                if (!fresh) {
                    report.diagnoses.push_back(h);
                    continue;
                }
                if (minimize_)
                    *fresh = shrinkConflict(*fresh, report);
                pool_.push_back(std::move(*fresh));
                report.conflictsUsed.push_back(pool_.back());
                label = &pool_.back();
            }

            if (static_cast<int>(h.size()) >= maxCardinality_)
                continue;
            for (int e : *label) {
                StmtIdSet child = h;
                child.insert(e);
                if (seen.insert(child).second)
                    queue.push_back(std::move(child));
            }
        }

        sortAndFilterMinimal(report.diagnoses);
        return report;
    }

private:
    const ConflictOracle& oracle_;
    const StmtIdSet& componentIds_;
    int maxCardinality_;
    bool minimize_;
    std::deque<Conflict> pool_; // deque: stable addresses for labels

    const Conflict* reuseLabel(const StmtIdSet& h) const {
        for (const Conflict& c : pool_)
            if (!intersects(c, h))
                return &c;
        return nullptr;
    }

    std::optional<Conflict> callOracle(const StmtIdSet& assumptions,
                                       DiagnosisReport& report) {
        ++report.oracleCalls;
        std::optional<Conflict> result;
        try {
            result = oracle_(assumptions);
        } catch (const std::exception& e) {
            throw OracleError(describeAssumptions(assumptions), e.what());
        }
        if (result) {
            if (result->empty())
                throw Error("oracle returned an empty conflict");
            if (intersects(*result, assumptions))
                throw Error("oracle returned a conflict overlapping its assumption set");
        }
        return result;
    }

    // Deletion-based minimization: C \ {e} is still a conflict iff the
    // observations stay inconsistent with everything outside C \ {e}
    // assumed abnormal.
    Conflict shrinkConflict(Conflict c, DiagnosisReport& report) {
        const std::vector<int> members(c.begin(), c.end());
        for (int e : members) {
            if (c.size() <= 1)
                break;
            if (!c.count(e))
                continue; // already dropped by an earlier shrink
            StmtIdSet outside = componentIds_;
            for (int keep : c)
                if (keep != e)
                    outside.erase(keep);
            std::optional<Conflict> r = callOracle(outside, report);
            if (r)
                c = *r; // r is a conflict within C \ {e}
        }
        return c;
    }
};

} // namespace

std::vector<Diagnosis> minimalHittingSets(const std::vector<Conflict>& conflicts,
                                          int maxCardinality) {
    for (const Conflict& c : conflicts)
        if (c.empty())
            throw Error("conflict sets must be nonempty");

    ConflictOracle poolOracle = [&conflicts](const StmtIdSet& hit) {
        for (const Conflict& c : conflicts)
            if (!intersects(c, hit))
                return std::optional<Conflict>(c);
        return std::optional<Conflict>();
    };
    StmtIdSet components;
    for (const Conflict& c : conflicts)
        components.insert(c.begin(), c.end());
    return HsTree(poolOracle, components, maxCardinality, false).run().diagnoses;
}

DiagnosisReport diagnose(const ConflictOracle& oracle,
                         const StmtIdSet& componentIds,
                         const DiagnoseOptions& options) {
    return HsTree(oracle, componentIds, options.maxCardinality,
                  options.minimizeConflicts)
        .run();
}

std::vector<Diagnosis> bruteForceDiagnose(const ConflictOracle& oracle,
                                          const StmtIdSet& componentIds,
                                          int maxCardinality) {
    if (componentIds.size() > 20)
        throw TooManyComponents(componentIds.size());

    const std::vector<int> ids(componentIds.begin(), componentIds.end());
    const int n = static_cast<int>(ids.size());
    std::vector<Diagnosis> found;

    auto tryCandidate = [&](const StmtIdSet& candidate) {
        for (const Diagnosis& d : found)
            if (isSubset(d, candidate))
                return;
        std::optional<Conflict> r;
        try {
            r = oracle(candidate);
        } catch (const std::exception& e) {
            throw OracleError(describeAssumptions(candidate), e.what());
        }
        if (!r)
            found.push_back(candidate);
    };

    int maxK = std::min(maxCardinality, n);
    tryCandidate({});
    for (int k = 1; k <= maxK; ++k) {
        // lexicographic k-combinations over the sorted id list
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i)
            comb[i] = i;
        for (;;) {
            StmtIdSet candidate;
            for (int i : comb)
                candidate.insert(ids[i]);
            tryCandidate(candidate);

            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j)
                comb[j] = comb[j - 1] + 1;
        }
    }
    sortAndFilterMinimal(found);
    return found;
}

std::string formatIdSet(const StmtIdSet& ids, bool roman) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int id : ids) {
        if (!first)
            os << ", ";
        if (roman)
            os << romanNumeral(id);
        else
            os << id;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace faultloc
