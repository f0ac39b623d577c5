#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sll {

/// Mixing values or objects that live over different fields.
class FieldMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operands with incompatible row/column or ambient dimensions.
class DimensionMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A pair (or tuple) of subspaces that was required to be a direct-sum
/// decomposition of the ambient space is not one. `which()` names the
/// offending pair, e.g. "V" or "W".
class NotComplementaryError : public std::invalid_argument {
public:
    explicit NotComplementaryError(std::string which)
        : std::invalid_argument("subspaces are not complementary: " + which),
          which_(std::move(which)) {}
    const std::string& which() const noexcept { return which_; }

private:
    std::string which_;
};

/// One of the four pairwise direct sums E = V1+V2 = W1+W2 = V1+W2 = W1+V2 fails.
class FourSumViolatedError : public std::invalid_argument {
public:
    explicit FourSumViolatedError(std::string which)
        : std::invalid_argument("required direct sum fails: " + which),
          which_(std::move(which)) {}
    const std::string& which() const noexcept { return which_; }

private:
    std::string which_;
};

/// Quotient construction requested for w not contained in u.
class NotContainedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A verifier was called on input that does not satisfy its stated premises.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Lattice closure stopped at the element cap; the result is not closed.
class TruncatedLatticeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance file could not be parsed. Carries 1-based line/column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace sll
