#include "faultloc/interp.hpp"

#include "faultloc/error.hpp"

namespace faultloc {

namespace {

// Wrapping 64-bit arithmetic via unsigned intermediates; plain signed
// overflow would be undefined behavior.
std::int64_t wrapAdd(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) +
                                     static_cast<std::uint64_t>(b));
}
std::int64_t wrapSub(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) -
                                     static_cast<std::uint64_t>(b));
}
std::int64_t wrapMul(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) *
                                     static_cast<std::uint64_t>(b));
}

bool truthy(std::int64_t v) { return v != 0; }

std::int64_t applyBinOp(BinOp op, std::int64_t a, std::int64_t b, int stmtId) {
    switch (op) {
    case BinOp::Add: return wrapAdd(a, b);
    case BinOp::Sub: return wrapSub(a, b);
    case BinOp::Mul: return wrapMul(a, b);
    case BinOp::Div:
        if (b == 0)
            throw EvalError(EvalError::Kind::DivisionByZero, stmtId,
                            "division by zero in statement " + std::to_string(stmtId));
        if (a == INT64_MIN && b == -1)
            return INT64_MIN; // wraps
        return a / b;
    case BinOp::Lt:  return a < b ? 1 : 0;
    case BinOp::Le:  return a <= b ? 1 : 0;
    case BinOp::Gt:  return a > b ? 1 : 0;
    case BinOp::Ge:  return a >= b ? 1 : 0;
    case BinOp::Eq:  return a == b ? 1 : 0;
    case BinOp::Ne:  return a != b ? 1 : 0;
    // No short-circuit: both operands are always evaluated by the caller.
    case BinOp::And: return truthy(a) && truthy(b) ? 1 : 0;
    case BinOp::Or:  return truthy(a) || truthy(b) ? 1 : 0;
    }
    return 0;
}

struct Interp {
    const EvalLimits& limits;
    Env env;

    std::int64_t eval(const Expr& e, int stmtId) {
        switch (e.kind) {
        case Expr::Kind::IntLit:
            return e.value;
        case Expr::Kind::Var:
            return env.at(e.name); // static checks guarantee presence
        case Expr::Kind::Not:
            return truthy(eval(e.operand(), stmtId)) ? 0 : 1;
        case Expr::Kind::Binary:
            return applyBinOp(e.op, eval(e.lhs(), stmtId), eval(e.rhs(), stmtId),
                              stmtId);
        }
        return 0;
    }

    void exec(const std::vector<Stmt>& body) {
        for (const Stmt& s : body) {
            switch (s.kind) {
            case Stmt::Kind::Assign:
                env[s.target] = eval(s.rhs, s.id);
                break;
            case Stmt::Kind::If:
                if (truthy(eval(s.cond, s.id)))
                    exec(s.thenBlock);
                else
                    exec(s.elseBlock);
                break;
            case Stmt::Kind::While: {
                int iterations = 0;
                while (truthy(eval(s.cond, s.id))) {
                    if (++iterations > limits.maxLoopIterations)
                        throw EvalError(EvalError::Kind::LoopLimitExceeded, s.id,
                                        "loop at statement " + std::to_string(s.id) +
                                            " exceeded " +
                                            std::to_string(limits.maxLoopIterations) +
                                            " iterations");
                    exec(s.thenBlock);
                }
                break;
            }
            }
        }
    }
};

} // namespace

Env run(const Program& p, const Env& inputs, const EvalLimits& limits) {
    for (const std::string& v : p.inputs)
        if (!inputs.count(v))
            throw Error("missing input value for '" + v + "'");
    if (inputs.size() != p.inputs.size())
        throw Error("input map does not match the program's input list");
    if (limits.maxLoopIterations < 1)
        throw Error("maxLoopIterations must be at least 1");

    Interp interp{limits, inputs};
    interp.exec(p.body);
    return interp.env;
}

} // namespace faultloc
