#ifndef FAULTLOC_ERROR_HPP
#define FAULTLOC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace faultloc {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Lexical or grammatical error while reading MiniLang source.
class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(col) +
                ": syntax error: " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

/// Static-analysis error: unassigned read, duplicate declaration, bad output.
class SemanticError : public Error {
public:
    SemanticError(int line, int col, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(col) +
                ": semantic error: " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

/// Runtime error of the concrete interpreter.
class EvalError : public Error {
public:
    enum class Kind { DivisionByZero, LoopLimitExceeded };

    EvalError(Kind kind, int statementId, const std::string& msg)
        : Error(msg), kind(kind), statementId(statementId) {}

    Kind kind;
    int statementId; // offending statement, 0 if not attributable
};

/// A discrepancy exists but no normal statement can be blamed for it.
class InexplicableMismatch : public Error {
public:
    explicit InexplicableMismatch(const std::string& msg)
        : Error("inexplicable mismatch: " + msg) {}
};

/// Brute-force diagnosis refuses component sets this large.
class TooManyComponents : public Error {
public:
    explicit TooManyComponents(std::size_t n)
        : Error("too many components for brute-force diagnosis: " +
                std::to_string(n) + " (cap 20)") {}
};

/// An oracle call failed during diagnosis; carries the assumption set.
class OracleError : public Error {
public:
    OracleError(const std::string& assumptions, const std::string& cause)
        : Error("oracle failed under assumptions {" + assumptions + "}: " + cause) {}
};

/// A benchmark corpus entry failed its own self-consistency check.
class CorpusInconsistent : public Error {
public:
    explicit CorpusInconsistent(const std::string& msg)
        : Error("corpus inconsistent: " + msg) {}
};

/// Malformed .deps / .test / .conflicts / manifest input.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

} // namespace faultloc

#endif
