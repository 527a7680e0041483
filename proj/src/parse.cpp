#include "faultloc/parse.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <vector>

#include "faultloc/error.hpp"

namespace faultloc {

namespace {

enum class Tok {
    Ident, Int,
    KwInput, KwOutput, KwIf, KwElse, KwWhile, KwNot, KwAnd, KwOr,
    Assign,                       // :=
    Semi, Comma, LParen, RParen, LBrace, RBrace,
    Plus, Minus, Star, Slash,
    Lt, Le, Gt, Ge, EqEq, Ne,
    End,
};

const char* tokName(Tok t) {
    switch (t) {
    case Tok::Ident:   return "identifier";
    case Tok::Int:     return "integer literal";
    case Tok::KwInput: return "'input'";
    case Tok::KwOutput:return "'output'";
    case Tok::KwIf:    return "'if'";
    case Tok::KwElse:  return "'else'";
    case Tok::KwWhile: return "'while'";
    case Tok::KwNot:   return "'not'";
    case Tok::KwAnd:   return "'and'";
    case Tok::KwOr:    return "'or'";
    case Tok::Assign:  return "':='";
    case Tok::Semi:    return "';'";
    case Tok::Comma:   return "','";
    case Tok::LParen:  return "'('";
    case Tok::RParen:  return "')'";
    case Tok::LBrace:  return "'{'";
    case Tok::RBrace:  return "'}'";
    case Tok::Plus:    return "'+'";
    case Tok::Minus:   return "'-'";
    case Tok::Star:    return "'*'";
    case Tok::Slash:   return "'/'";
    case Tok::Lt:      return "'<'";
    case Tok::Le:      return "'<='";
    case Tok::Gt:      return "'>'";
    case Tok::Ge:      return "'>='";
    case Tok::EqEq:    return "'=='";
    case Tok::Ne:      return "'!='";
    case Tok::End:     return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skipSpaceAndComments();
            Token t = next();
            out.push_back(t);
            if (t.kind == Tok::End)
                break;
        }
        return out;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_, col_, msg);
    }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skipSpaceAndComments() {
        for (;;) {
            char c = peek();
            if (c == '#') {
                while (peek() != '\0' && peek() != '\n')
                    advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    static bool identStart(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool identChar(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    Token make(Tok kind, std::string text) const {
        Token t;
        t.kind = kind;
        t.text = std::move(text);
        t.line = line_;
        t.col = col_;
        return t;
    }

    Token next() {
        if (pos_ >= src_.size())
            return make(Tok::End, "");
        int line = line_, col = col_;
        char c = peek();

        if (identStart(c)) {
            std::string word;
            word += advance();
            while (identChar(peek()))
                word += advance();
            // Dotted identifier parts: name.first
            while (peek() == '.' && identStart(peek(1))) {
                word += advance();
                word += advance();
                while (identChar(peek()))
                    word += advance();
            }
            Token t = keywordOrIdent(word);
            t.line = line;
            t.col = col;
            return t;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                digits += advance();
            std::int64_t v = 0;
            auto [ptr, ec] =
                std::from_chars(digits.data(), digits.data() + digits.size(), v);
            if (ec != std::errc() || ptr != digits.data() + digits.size())
                throw ParseError(line, col, "integer literal out of range: " + digits);
            Token t = make(Tok::Int, digits);
            t.value = v;
            t.line = line;
            t.col = col;
            return t;
        }

        advance();
        Token t;
        t.line = line;
        t.col = col;
        switch (c) {
        case ';': t.kind = Tok::Semi; break;
        case ',': t.kind = Tok::Comma; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case ':':
            if (peek() != '=')
                throw ParseError(line, col, "expected '=' after ':'");
            advance();
            t.kind = Tok::Assign;
            break;
        case '<':
            if (peek() == '=') { advance(); t.kind = Tok::Le; }
            else t.kind = Tok::Lt;
            break;
        case '>':
            if (peek() == '=') { advance(); t.kind = Tok::Ge; }
            else t.kind = Tok::Gt;
            break;
        case '=':
            if (peek() != '=')
                throw ParseError(line, col, "expected '==' (assignment is ':=')");
            advance();
            t.kind = Tok::EqEq;
            break;
        case '!':
            if (peek() != '=')
                throw ParseError(line, col, "expected '!='");
            advance();
            t.kind = Tok::Ne;
            break;
        default:
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        t.text = src_.substr(pos_ - 1, 1);
        return t;
    }

    Token keywordOrIdent(const std::string& word) const {
        static const std::map<std::string, Tok> kw = {
            {"input", Tok::KwInput}, {"output", Tok::KwOutput},
            {"if", Tok::KwIf},       {"else", Tok::KwElse},
            {"while", Tok::KwWhile}, {"not", Tok::KwNot},
            {"and", Tok::KwAnd},     {"or", Tok::KwOr},
        };
        Token t;
        auto it = kw.find(word);
        t.kind = it == kw.end() ? Tok::Ident : it->second;
        t.text = word;
        return t;
    }
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program run() {
        Program p;
        expect(Tok::KwInput);
        p.inputs = identList();
        expect(Tok::Semi);
        expect(Tok::KwOutput);
        p.outputs = identList();
        expect(Tok::Semi);
        while (peek().kind != Tok::End)
            p.body.push_back(statement());
        assignStatementIds(p);
        return p;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }

    Token advance() { return toks_[pos_++]; }

    [[noreturn]] void failExpect(const std::string& what) const {
        const Token& t = peek();
        throw ParseError(t.line, t.col,
                         "expected " + what + ", found " + tokName(t.kind));
    }

    Token expect(Tok kind) {
        if (peek().kind != kind)
            failExpect(tokName(kind));
        return advance();
    }

    std::vector<std::string> identList() {
        std::vector<std::string> names;
        if (peek().kind != Tok::Ident)
            return names; // empty list allowed
        names.push_back(advance().text);
        while (peek().kind == Tok::Comma) {
            advance();
            names.push_back(expect(Tok::Ident).text);
        }
        return names;
    }

    Stmt statement() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Ident: {
            Token name = advance();
            expect(Tok::Assign);
            Expr rhs = expression();
            expect(Tok::Semi);
            Stmt s = Stmt::assign(name.text, std::move(rhs));
            s.line = name.line;
            return s;
        }
        case Tok::KwIf: {
            Token kw = advance();
            expect(Tok::LParen);
            Expr cond = expression();
            expect(Tok::RParen);
            std::vector<Stmt> thenBlock = block();
            std::vector<Stmt> elseBlock;
            if (peek().kind == Tok::KwElse) {
                advance();
                elseBlock = block();
            }
            Stmt s = Stmt::ifStmt(std::move(cond), std::move(thenBlock),
                                  std::move(elseBlock));
            s.line = kw.line;
            return s;
        }
        case Tok::KwWhile: {
            Token kw = advance();
            expect(Tok::LParen);
            Expr cond = expression();
            expect(Tok::RParen);
            Stmt s = Stmt::whileStmt(std::move(cond), block());
            s.line = kw.line;
            return s;
        }
        default:
            failExpect("a statement (identifier, 'if' or 'while')");
        }
    }

    std::vector<Stmt> block() {
        expect(Tok::LBrace);
        std::vector<Stmt> body;
        while (peek().kind != Tok::RBrace) {
            if (peek().kind == Tok::End)
                failExpect("'}'");
            body.push_back(statement());
        }
        advance();
        return body;
    }

    Expr expression() { return orExpr(); }

    Expr orExpr() {
        Expr e = andExpr();
        while (peek().kind == Tok::KwOr) {
            advance();
            e = Expr::binary(BinOp::Or, std::move(e), andExpr());
        }
        return e;
    }

    Expr andExpr() {
        Expr e = equality();
        while (peek().kind == Tok::KwAnd) {
            advance();
            e = Expr::binary(BinOp::And, std::move(e), equality());
        }
        return e;
    }

    Expr equality() {
        Expr e = relational();
        for (;;) {
            Tok k = peek().kind;
            if (k != Tok::EqEq && k != Tok::Ne)
                break;
            advance();
            e = Expr::binary(k == Tok::EqEq ? BinOp::Eq : BinOp::Ne,
                             std::move(e), relational());
        }
        return e;
    }

    Expr relational() {
        Expr e = additive();
        for (;;) {
            BinOp op;
            switch (peek().kind) {
            case Tok::Lt: op = BinOp::Lt; break;
            case Tok::Le: op = BinOp::Le; break;
            case Tok::Gt: op = BinOp::Gt; break;
            case Tok::Ge: op = BinOp::Ge; break;
            default: return e;
            }
            advance();
            e = Expr::binary(op, std::move(e), additive());
        }
    }

    Expr additive() {
        Expr e = multiplicative();
        for (;;) {
            Tok k = peek().kind;
            if (k != Tok::Plus && k != Tok::Minus)
                break;
            advance();
            e = Expr::binary(k == Tok::Plus ? BinOp::Add : BinOp::Sub,
                             std::move(e), multiplicative());
        }
        return e;
    }

    Expr multiplicative() {
        Expr e = unary();
        for (;;) {
            Tok k = peek().kind;
            if (k != Tok::Star && k != Tok::Slash)
                break;
            advance();
            e = Expr::binary(k == Tok::Star ? BinOp::Mul : BinOp::Div,
                             std::move(e), unary());
        }
        return e;
    }

    Expr unary() {
        if (peek().kind == Tok::KwNot) {
            advance();
            return Expr::notOf(unary());
        }
        return primary();
    }

    Expr primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Int:
            return Expr::intLit(advance().value);
        case Tok::Minus: {
            advance();
            if (peek().kind != Tok::Int)
                failExpect("integer literal after '-'");
            return Expr::intLit(-advance().value);
        }
        case Tok::Ident:
            return Expr::var(advance().text);
        case Tok::LParen: {
            advance();
            Expr e = expression();
            expect(Tok::RParen);
            return e;
        }
        default:
            failExpect("an expression");
        }
    }
};

// Definite assignment: a variable counts as assigned only when assigned on
// all paths before use. Conditions of if/while are reads; outputs are read
// at program end.
class StaticChecker {
public:
    explicit StaticChecker(const Program& p) : p_(p) {}

    void run() {
        checkDeclarations();
        std::set<std::string> assigned(p_.inputs.begin(), p_.inputs.end());
        checkBlock(p_.body, assigned);
        for (const std::string& out : p_.outputs) {
            if (!assigned.count(out))
                throw SemanticError(
                    lastLine_, 1,
                    "output variable '" + out + "' is not assigned on all paths");
        }
    }

private:
    const Program& p_;
    std::set<std::string> everAssigned_;
    int lastLine_ = 1;

    void checkDeclarations() {
        std::set<std::string> seen;
        for (const std::string& v : p_.inputs)
            if (!seen.insert(v).second)
                throw SemanticError(1, 1, "duplicate declaration of input '" + v + "'");
        std::set<std::string> outSeen;
        for (const std::string& v : p_.outputs)
            if (!outSeen.insert(v).second)
                throw SemanticError(1, 1, "duplicate declaration of output '" + v + "'");
        forEachStmt(p_, [this](const Stmt& s) {
            if (s.kind == Stmt::Kind::Assign)
                everAssigned_.insert(s.target);
        });
    }

    void checkReads(const Expr& e, const std::set<std::string>& assigned, int line) {
        for (const std::string& v : exprVars(e)) {
            if (assigned.count(v))
                continue;
            if (everAssigned_.count(v))
                throw SemanticError(line, 1,
                                    "variable '" + v +
                                        "' may be unassigned here (not assigned on all paths)");
            throw SemanticError(line, 1, "read of undeclared variable '" + v + "'");
        }
    }

    void checkBlock(const std::vector<Stmt>& body, std::set<std::string>& assigned) {
        for (const Stmt& s : body) {
            lastLine_ = s.line > 0 ? s.line : lastLine_;
            switch (s.kind) {
            case Stmt::Kind::Assign:
                checkReads(s.rhs, assigned, s.line);
                assigned.insert(s.target);
                break;
            case Stmt::Kind::If: {
                checkReads(s.cond, assigned, s.line);
                std::set<std::string> thenSet = assigned;
                std::set<std::string> elseSet = assigned;
                checkBlock(s.thenBlock, thenSet);
                checkBlock(s.elseBlock, elseSet);
                for (const std::string& v : thenSet)
                    if (elseSet.count(v))
                        assigned.insert(v);
                break;
            }
            case Stmt::Kind::While: {
                checkReads(s.cond, assigned, s.line);
                std::set<std::string> bodySet = assigned;
                checkBlock(s.thenBlock, bodySet);
                // loop may run zero times: nothing joins the outer set
                break;
            }
            }
        }
    }
};

} // namespace

Program parse(std::string_view text) {
    Lexer lexer(text);
    Parser parser(lexer.run());
    Program p = parser.run();
    checkProgram(p);
    return p;
}

void checkProgram(const Program& p) {
    StaticChecker(p).run();
}

bool isWellFormed(const Program& p) {
    try {
        checkProgram(p);
        return true;
    } catch (const Error&) {
        return false;
    }
}

} // namespace faultloc
