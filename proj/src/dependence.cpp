#include "faultloc/dependence.hpp"

#include <algorithm>

#include "faultloc/error.hpp"

namespace faultloc {

namespace {

void validateAssumptions(const Program& p, const StmtIdSet& assumptions) {
    const StmtIdSet assigns = assignmentIds(p);
    for (int id : assumptions)
        if (!assigns.count(id))
            throw Error("assumption id " + std::to_string(id) +
                        " is not an assignment statement of the program");
}

// ---------------------------------------------------------------------------
// Local granularity: each normal assignment contributes one pair per rhs
// variable and per variable of every enclosing condition.
// ---------------------------------------------------------------------------

void localPairs(const std::vector<Stmt>& body, const StmtIdSet& assumptions,
                std::set<std::string>& condVars, DependenceSet& out) {
    for (const Stmt& s : body) {
        switch (s.kind) {
        case Stmt::Kind::Assign: {
            if (assumptions.count(s.id)) {
                out.topTargets.insert(s.target);
                break;
            }
            std::set<std::string> sources = exprVars(s.rhs);
            sources.insert(condVars.begin(), condVars.end());
            for (const std::string& v : sources) {
                DependencePair pair{s.target, v};
                out.pairs.insert(pair);
                out.provenance[pair].insert(s.id);
            }
            break;
        }
        case Stmt::Kind::If:
        case Stmt::Kind::While: {
            std::set<std::string> inner = condVars;
            std::set<std::string> cv = exprVars(s.cond);
            inner.insert(cv.begin(), cv.end());
            localPairs(s.thenBlock, assumptions, inner, out);
            localPairs(s.elseBlock, assumptions, inner, out);
            break;
        }
        }
    }
}

// ---------------------------------------------------------------------------
// Global granularity: forward fixpoint over var -> {top?, source -> ids}.
// `top` records that an abnormal statement reaches the variable; it makes
// the variable satisfy any specified pair but never erases dependences
// contributed by normal statements (union-only lattice, so assumptions can
// only remove conflicts, never add them).
// ---------------------------------------------------------------------------

struct DepVal {
    bool top = false;
    std::map<std::string, StmtIdSet> deps; // source -> contributing ids

    void merge(const DepVal& other) {
        top = top || other.top;
        for (const auto& [src, ids] : other.deps)
            deps[src].insert(ids.begin(), ids.end());
    }

    bool operator==(const DepVal& other) const = default;
};

using DepState = std::map<std::string, DepVal>;

DepState pointwiseUnion(const DepState& a, const DepState& b) {
    DepState out = a;
    for (const auto& [var, val] : b)
        out[var].merge(val);
    return out;
}

struct GlobalAnalysis {
    const StmtIdSet& assumptions;
    int varCount;
    FixpointStats* stats;

    DepVal evalVars(const DepState& state, const std::set<std::string>& vars) const {
        DepVal out;
        for (const std::string& v : vars) {
            auto it = state.find(v);
            if (it != state.end())
                out.merge(it->second);
        }
        return out;
    }

    void analyze(const std::vector<Stmt>& body, DepState& state,
                 const DepVal& control) const {
        for (const Stmt& s : body) {
            switch (s.kind) {
            case Stmt::Kind::Assign: {
                DepVal nv;
                if (assumptions.count(s.id)) {
                    nv.top = true;
                } else {
                    nv = evalVars(state, exprVars(s.rhs));
                    nv.merge(control);
                    for (auto& [src, ids] : nv.deps)
                        ids.insert(s.id);
                }
                state[s.target] = std::move(nv);
                break;
            }
            case Stmt::Kind::If: {
                DepVal ctrl = control;
                ctrl.merge(evalVars(state, exprVars(s.cond)));
                DepState thenState = state;
                DepState elseState = state;
                analyze(s.thenBlock, thenState, ctrl);
                analyze(s.elseBlock, elseState, ctrl);
                state = pointwiseUnion(thenState, elseState);
                break;
            }
            case Stmt::Kind::While: {
                // Kleene iteration; the lattice is finite and all transfer
                // functions are unions, so |vars|^2 passes bound convergence.
                int passes = 0;
                for (;;) {
                    ++passes;
                    DepVal ctrl = control;
                    ctrl.merge(evalVars(state, exprVars(s.cond)));
                    DepState after = state;
                    analyze(s.thenBlock, after, ctrl);
                    DepState merged = pointwiseUnion(state, after);
                    if (merged == state)
                        break;
                    state = std::move(merged);
                    if (passes > varCount * varCount + 2)
                        throw Error("dependence fixpoint failed to converge");
                }
                if (stats)
                    stats->maxLoopPasses = std::max(stats->maxLoopPasses, passes);
                break;
            }
            }
        }
    }
};

DependenceSet globalPairs(const Program& p, const StmtIdSet& assumptions,
                          FixpointStats* stats) {
    DepState state;
    for (const std::string& v : p.inputs)
        state[v].deps[v]; // identity dependence, no contributing statement yet

    const std::set<std::string> vars = programVars(p);
    GlobalAnalysis analysis{assumptions, static_cast<int>(vars.size()), stats};
    analysis.analyze(p.body, state, DepVal{});

    DependenceSet out;
    for (const std::string& x : assignedVars(p.body)) {
        auto it = state.find(x);
        if (it == state.end())
            continue;
        if (it->second.top)
            out.topTargets.insert(x);
        for (const auto& [src, ids] : it->second.deps) {
            DependencePair pair{x, src};
            out.pairs.insert(pair);
            out.provenance[pair].insert(ids.begin(), ids.end());
        }
    }
    return out;
}

} // namespace

DependenceSet computeDependences(const Program& p, Granularity g,
                                 const StmtIdSet& assumptions,
                                 FixpointStats* stats) {
    validateAssumptions(p, assumptions);
    if (g == Granularity::Local) {
        DependenceSet out;
        std::set<std::string> noConds;
        localPairs(p.body, assumptions, noConds, out);
        return out;
    }
    return globalPairs(p, assumptions, stats);
}

DependenceDiff compareDependences(const DependenceSet& computed,
                                  const DependenceSet& specified) {
    DependenceDiff diff;
    for (const DependencePair& q : specified.pairs) {
        if (computed.pairs.count(q))
            continue;
        if (computed.topTargets.count(q.target))
            continue; // unconstrained target satisfies the requirement
        diff.missing.insert(q);
    }
    for (const DependencePair& q : computed.pairs)
        if (!specified.pairs.count(q))
            diff.spurious.insert(q);
    return diff;
}

std::vector<Conflict> depConflicts(const Program& p,
                                   const DependenceSet& specified,
                                   Granularity g,
                                   const StmtIdSet& assumptions) {
    const DependenceSet computed = computeDependences(p, g, assumptions);
    const DependenceDiff diff = compareDependences(computed, specified);

    std::vector<Conflict> conflicts;
    for (const DependencePair& q : diff.spurious) {
        Conflict c = computed.provenance.at(q);
        for (int id : assumptions)
            c.erase(id);
        if (c.empty())
            throw InexplicableMismatch("spurious dependence " + q.target + " <- " +
                                       q.source + " has no normal contributor");
        conflicts.push_back(std::move(c));
    }
    for (const DependencePair& q : diff.missing) {
        Conflict c = definersOf(p, q.target);
        for (int id : assumptions)
            c.erase(id);
        if (c.empty())
            throw InexplicableMismatch("missing dependence " + q.target + " <- " +
                                       q.source + ": no normal statement defines '" +
                                       q.target + "'");
        conflicts.push_back(std::move(c));
    }
    return conflicts;
}

ConflictOracle makeDependenceOracle(const Program& p,
                                    const DependenceSet& specified,
                                    Granularity g) {
    // Captured by value: oracles routinely outlive the mutant they analyze.
    return [p, specified, g](const StmtIdSet& assumptions) {
        std::vector<Conflict> conflicts = depConflicts(p, specified, g, assumptions);
        if (conflicts.empty())
            return std::optional<Conflict>();
        return std::optional<Conflict>(std::move(conflicts.front()));
    };
}

} // namespace faultloc
