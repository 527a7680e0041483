#ifndef FAULTLOC_AST_HPP
#define FAULTLOC_AST_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace faultloc {

enum class BinOp {
    Add, Sub, Mul, Div,
    Lt, Le, Gt, Ge, Eq, Ne,
    And, Or,
};

const char* binOpToken(BinOp op);

/// Expression tree. Tagged struct with value semantics; `children` holds
/// one node for Not and two for Binary.
struct Expr {
    enum class Kind { IntLit, Var, Not, Binary };

    Kind kind = Kind::IntLit;
    std::int64_t value = 0;   // IntLit
    std::string name;         // Var
    BinOp op = BinOp::Add;    // Binary
    std::vector<Expr> children;

    static Expr intLit(std::int64_t v);
    static Expr var(std::string name);
    static Expr notOf(Expr operand);
    static Expr binary(BinOp op, Expr lhs, Expr rhs);

    const Expr& lhs() const { return children[0]; }
    const Expr& rhs() const { return children[1]; }
    const Expr& operand() const { return children[0]; }

    bool operator==(const Expr& other) const;
};

/// One statement. Ids are unique, contiguous, 1-based in textual
/// (pre-order) appearance; they double as diagnosis component ids.
/// While statements keep their body in `thenBlock`.
struct Stmt {
    enum class Kind { Assign, If, While };

    Kind kind = Kind::Assign;
    int id = 0;
    int line = 0; // source line; metadata, not part of structural equality

    std::string target; // Assign
    Expr rhs;           // Assign
    Expr cond;          // If / While
    std::vector<Stmt> thenBlock;
    std::vector<Stmt> elseBlock; // If only

    static Stmt assign(std::string target, Expr rhs);
    static Stmt ifStmt(Expr cond, std::vector<Stmt> thenBlock,
                       std::vector<Stmt> elseBlock = {});
    static Stmt whileStmt(Expr cond, std::vector<Stmt> body);

    const std::vector<Stmt>& body() const { return thenBlock; }
    std::vector<Stmt>& body() { return thenBlock; }

    bool operator==(const Stmt& other) const;
};

struct Program {
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<Stmt> body;

    bool operator==(const Program& other) const;
};

/// Renumber all statement ids 1..n in textual (pre-order) order.
void assignStatementIds(Program& p);

/// Pre-order visit of every statement.
void forEachStmt(const Program& p, const std::function<void(const Stmt&)>& fn);
void forEachStmt(Program& p, const std::function<void(Stmt&)>& fn);

/// Variables occurring in an expression.
void collectVars(const Expr& e, std::set<std::string>& out);
std::set<std::string> exprVars(const Expr& e);

/// Targets of every Assign in a statement list (recursive).
std::set<std::string> assignedVars(const std::vector<Stmt>& body);

/// All variables of the program: inputs plus every assignment target and
/// every variable read anywhere.
std::set<std::string> programVars(const Program& p);

/// Ids of all Assign statements (the diagnosable components).
std::set<int> assignmentIds(const Program& p);

/// Ids of Assign statements with the given target.
std::set<int> definersOf(const Program& p, const std::string& var);

/// Total number of statements.
int statementCount(const Program& p);

/// Lookup by id; nullptr when absent.
const Stmt* findStmt(const Program& p, int id);

} // namespace faultloc

#endif
