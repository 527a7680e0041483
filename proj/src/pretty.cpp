#include "faultloc/pretty.hpp"

#include <sstream>

namespace faultloc {

namespace {

int precedence(BinOp op) {
    switch (op) {
    case BinOp::Or:  return 1;
    case BinOp::And: return 2;
    case BinOp::Eq:
    case BinOp::Ne:  return 3;
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge:  return 4;
    case BinOp::Add:
    case BinOp::Sub: return 5;
    case BinOp::Mul:
    case BinOp::Div: return 6;
    }
    return 0;
}

constexpr int kUnaryPrec = 7;

int exprPrecedence(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Binary: return precedence(e.op);
    case Expr::Kind::Not:    return kUnaryPrec;
    default:                 return 8; // atoms
    }
}

void emitExpr(std::ostream& os, const Expr& e);

// All binary operators are left-associative: a right child of equal
// precedence needs parentheses, a left child does not.
void emitChild(std::ostream& os, const Expr& child, int parentPrec, bool rightSide) {
    int prec = exprPrecedence(child);
    bool parens = prec < parentPrec || (prec == parentPrec && rightSide);
    if (parens)
        os << '(';
    emitExpr(os, child);
    if (parens)
        os << ')';
}

void emitExpr(std::ostream& os, const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::IntLit:
        os << e.value;
        break;
    case Expr::Kind::Var:
        os << e.name;
        break;
    case Expr::Kind::Not:
        os << "not ";
        emitChild(os, e.operand(), kUnaryPrec, false);
        break;
    case Expr::Kind::Binary: {
        int prec = precedence(e.op);
        emitChild(os, e.lhs(), prec, false);
        os << ' ' << binOpToken(e.op) << ' ';
        emitChild(os, e.rhs(), prec, true);
        break;
    }
    }
}

void emitIndent(std::ostream& os, int depth) {
    for (int i = 0; i < depth; ++i)
        os << "  ";
}

void emitBlock(std::ostream& os, const std::vector<Stmt>& body, int depth);

void emitStmt(std::ostream& os, const Stmt& s, int depth) {
    emitIndent(os, depth);
    switch (s.kind) {
    case Stmt::Kind::Assign:
        os << s.target << " := ";
        emitExpr(os, s.rhs);
        os << ";\n";
        break;
    case Stmt::Kind::If:
        os << "if (";
        emitExpr(os, s.cond);
        os << ") {\n";
        emitBlock(os, s.thenBlock, depth + 1);
        emitIndent(os, depth);
        if (s.elseBlock.empty()) {
            os << "}\n";
        } else {
            os << "} else {\n";
            emitBlock(os, s.elseBlock, depth + 1);
            emitIndent(os, depth);
            os << "}\n";
        }
        break;
    case Stmt::Kind::While:
        os << "while (";
        emitExpr(os, s.cond);
        os << ") {\n";
        emitBlock(os, s.thenBlock, depth + 1);
        emitIndent(os, depth);
        os << "}\n";
        break;
    }
}

void emitBlock(std::ostream& os, const std::vector<Stmt>& body, int depth) {
    for (const Stmt& s : body)
        emitStmt(os, s, depth);
}

void emitDeclList(std::ostream& os, const char* kw,
                  const std::vector<std::string>& names) {
    os << kw;
    for (std::size_t i = 0; i < names.size(); ++i)
        os << (i == 0 ? " " : ", ") << names[i];
    os << ";\n";
}

} // namespace

std::string pretty(const Program& p) {
    std::ostringstream os;
    emitDeclList(os, "input", p.inputs);
    emitDeclList(os, "output", p.outputs);
    emitBlock(os, p.body, 0);
    return os.str();
}

std::string pretty(const Stmt& s, int indent) {
    std::ostringstream os;
    emitStmt(os, s, indent);
    std::string text = os.str();
    if (!text.empty() && text.back() == '\n')
        text.pop_back();
    return text;
}

std::string pretty(const Expr& e) {
    std::ostringstream os;
    emitExpr(os, e);
    return os.str();
}

std::string romanNumeral(int n) {
    static const std::pair<int, const char*> table[] = {
        {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"},
        {100, "C"},  {90, "XC"},  {50, "L"},  {40, "XL"},
        {10, "X"},   {9, "IX"},   {5, "V"},   {4, "IV"},
        {1, "I"},
    };
    if (n <= 0)
        return std::to_string(n);
    std::string out;
    for (const auto& [value, digits] : table) {
        while (n >= value) {
            out += digits;
            n -= value;
        }
    }
    return out;
}

} // namespace faultloc
