#include "faultloc/ast.hpp"

#include <utility>

namespace faultloc {

const char* binOpToken(BinOp op) {
    switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Lt:  return "<";
    case BinOp::Le:  return "<=";
    case BinOp::Gt:  return ">";
    case BinOp::Ge:  return ">=";
    case BinOp::Eq:  return "==";
    case BinOp::Ne:  return "!=";
    case BinOp::And: return "and";
    case BinOp::Or:  return "or";
    }
    return "?";
}

Expr Expr::intLit(std::int64_t v) {
    Expr e;
    e.kind = Kind::IntLit;
    e.value = v;
    return e;
}

Expr Expr::var(std::string name) {
    Expr e;
    e.kind = Kind::Var;
    e.name = std::move(name);
    return e;
}

Expr Expr::notOf(Expr operand) {
    Expr e;
    e.kind = Kind::Not;
    e.children.push_back(std::move(operand));
    return e;
}

Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = Kind::Binary;
    e.op = op;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
}

bool Expr::operator==(const Expr& other) const {
    if (kind != other.kind)
        return false;
    switch (kind) {
    case Kind::IntLit: return value == other.value;
    case Kind::Var:    return name == other.name;
    case Kind::Not:    return children[0] == other.children[0];
    case Kind::Binary:
        return op == other.op && children[0] == other.children[0] &&
               children[1] == other.children[1];
    }
    return false;
}

Stmt Stmt::assign(std::string target, Expr rhs) {
    Stmt s;
    s.kind = Kind::Assign;
    s.target = std::move(target);
    s.rhs = std::move(rhs);
    return s;
}

Stmt Stmt::ifStmt(Expr cond, std::vector<Stmt> thenBlock, std::vector<Stmt> elseBlock) {
    Stmt s;
    s.kind = Kind::If;
    s.cond = std::move(cond);
    s.thenBlock = std::move(thenBlock);
    s.elseBlock = std::move(elseBlock);
    return s;
}

Stmt Stmt::whileStmt(Expr cond, std::vector<Stmt> body) {
    Stmt s;
    s.kind = Kind::While;
    s.cond = std::move(cond);
    s.thenBlock = std::move(body);
    return s;
}

bool Stmt::operator==(const Stmt& other) const {
    if (kind != other.kind || id != other.id)
        return false;
    switch (kind) {
    case Kind::Assign:
        return target == other.target && rhs == other.rhs;
    case Kind::If:
        return cond == other.cond && thenBlock == other.thenBlock &&
               elseBlock == other.elseBlock;
    case Kind::While:
        return cond == other.cond && thenBlock == other.thenBlock;
    }
    return false;
}

bool Program::operator==(const Program& other) const {
    return inputs == other.inputs && outputs == other.outputs && body == other.body;
}

namespace {

void numberBlock(std::vector<Stmt>& body, int& next) {
    for (Stmt& s : body) {
        s.id = next++;
        if (s.kind != Stmt::Kind::Assign) {
            numberBlock(s.thenBlock, next);
            numberBlock(s.elseBlock, next);
        }
    }
}

template <typename StmtT, typename Fn>
void visitBlock(StmtT& body, const Fn& fn) {
    for (auto& s : body) {
        fn(s);
        if (s.kind != Stmt::Kind::Assign) {
            visitBlock(s.thenBlock, fn);
            visitBlock(s.elseBlock, fn);
        }
    }
}

} // namespace

void assignStatementIds(Program& p) {
    int next = 1;
    numberBlock(p.body, next);
}

void forEachStmt(const Program& p, const std::function<void(const Stmt&)>& fn) {
    visitBlock(p.body, fn);
}

void forEachStmt(Program& p, const std::function<void(Stmt&)>& fn) {
    visitBlock(p.body, fn);
}

void collectVars(const Expr& e, std::set<std::string>& out) {
    switch (e.kind) {
    case Expr::Kind::IntLit:
        break;
    case Expr::Kind::Var:
        out.insert(e.name);
        break;
    default:
        for (const Expr& c : e.children)
            collectVars(c, out);
    }
}

std::set<std::string> exprVars(const Expr& e) {
    std::set<std::string> out;
    collectVars(e, out);
    return out;
}

std::set<std::string> assignedVars(const std::vector<Stmt>& body) {
    std::set<std::string> out;
    visitBlock(body, [&out](const Stmt& s) {
        if (s.kind == Stmt::Kind::Assign)
            out.insert(s.target);
    });
    return out;
}

std::set<std::string> programVars(const Program& p) {
    std::set<std::string> out(p.inputs.begin(), p.inputs.end());
    forEachStmt(p, [&out](const Stmt& s) {
        if (s.kind == Stmt::Kind::Assign) {
            out.insert(s.target);
            collectVars(s.rhs, out);
        } else {
            collectVars(s.cond, out);
        }
    });
    return out;
}

std::set<int> assignmentIds(const Program& p) {
    std::set<int> out;
    forEachStmt(p, [&out](const Stmt& s) {
        if (s.kind == Stmt::Kind::Assign)
            out.insert(s.id);
    });
    return out;
}

std::set<int> definersOf(const Program& p, const std::string& var) {
    std::set<int> out;
    forEachStmt(p, [&](const Stmt& s) {
        if (s.kind == Stmt::Kind::Assign && s.target == var)
            out.insert(s.id);
    });
    return out;
}

int statementCount(const Program& p) {
    int n = 0;
    forEachStmt(p, [&n](const Stmt&) { ++n; });
    return n;
}

const Stmt* findStmt(const Program& p, int id) {
    const Stmt* found = nullptr;
    forEachStmt(p, [&](const Stmt& s) {
        if (s.id == id)
            found = &s;
    });
    return found;
}

} // namespace faultloc
