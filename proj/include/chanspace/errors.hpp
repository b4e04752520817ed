#pragma once

#include <stdexcept>
#include <string>

namespace chanspace {

// Exit-code contract of the CLI: 0 success, 1 domain error,
// 2 verification failure, 3 parse error.
enum class ErrorKind {
    domain = 1,
    verification = 2,
    parse = 3,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

// Coordinates in messages are 1-based, matching file formats and reports.

struct NegativeEntry : Error {
    NegativeEntry(int row, int col)
        : Error(ErrorKind::domain,
                "negative entry at row " + std::to_string(row + 1) + ", column " +
                    std::to_string(col + 1)),
          row(row), col(col) {}
    int row, col;
};

struct RowSumViolation : Error {
    RowSumViolation(int row, const std::string& actual)
        : Error(ErrorKind::domain,
                "row " + std::to_string(row + 1) + " sums to " + actual + ", expected 1"),
          row(row), actual(actual) {}
    int row;
    std::string actual;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& detail)
        : Error(ErrorKind::domain, "dimension mismatch: " + detail) {}
};

struct UnstableColumn : Error {
    explicit UnstableColumn(int col)
        : Error(ErrorKind::domain,
                "column " + std::to_string(col + 1) + " has tied entries"),
          col(col) {}
    int col;
};

struct UnstableChannel : Error {
    UnstableChannel(const std::string& which, int col)
        : Error(ErrorKind::domain,
                "channel " + which + " is unstable: column " + std::to_string(col + 1) +
                    " has tied entries"),
          which(which), col(col) {}
    std::string which;
    int col;
};

struct TooLarge : Error {
    TooLarge(int n, int limit)
        : Error(ErrorKind::domain,
                "size " + std::to_string(n) + " exceeds the limit " + std::to_string(limit)),
          n(n), limit(limit) {}
    int n, limit;
};

struct EmptyCode : Error {
    EmptyCode() : Error(ErrorKind::domain, "a code must be a nonempty subset of the inputs") {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange(const std::string& what, long long index)
        : Error(ErrorKind::domain, what + " index " + std::to_string(index) + " out of range") {}
};

struct BadPrior : Error {
    explicit BadPrior(const std::string& detail)
        : Error(ErrorKind::domain, "bad prior: " + detail) {}
};

struct ZeroSamples : Error {
    ZeroSamples() : Error(ErrorKind::domain, "sample count must be positive") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& detail)
        : Error(ErrorKind::parse, "parse error: " + detail) {}
};

// Formula and exhaustive enumeration disagreed. Always a hard failure.
struct OracleMismatch : Error {
    explicit OracleMismatch(const std::string& detail)
        : Error(ErrorKind::verification, "oracle mismatch: " + detail) {}
};

}  // namespace chanspace
