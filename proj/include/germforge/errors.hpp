#pragma once

#include <stdexcept>
#include <string>

namespace germ {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two polynomials from different ambient rings met in one operation.
struct RingMismatch : Error {
    explicit RingMismatch(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

// A computation hit one of the configured caps (pair count, degree, coefficient size).
struct ResourceLimitExceeded : Error {
    enum class Kind { pairs, degree, coefficient_bits };
    Kind kind;
    long long observed;
    long long cap;
    ResourceLimitExceeded(Kind k, long long observed_, long long cap_)
        : Error(describe(k, observed_, cap_)), kind(k), observed(observed_), cap(cap_) {}

private:
    static std::string describe(Kind k, long long observed_, long long cap_) {
        const char* what = k == Kind::pairs ? "S-pair count"
                         : k == Kind::degree ? "intermediate degree"
                                             : "coefficient bit size";
        return std::string("resource limit exceeded: ") + what + " reached "
             + std::to_string(observed_) + " (cap " + std::to_string(cap_) + ")";
    }
};

// Two independent generic draws disagreed; the result would not be trustworthy.
struct GenericityFailure : Error {
    explicit GenericityFailure(const std::string& msg) : Error(msg) {}
};

// A stratum description does not pin down what the construction needs
// (e.g. inconsistent constraint rank along the stratum).
struct StratumTooCoarse : Error {
    explicit StratumTooCoarse(const std::string& msg) : Error(msg) {}
};

// Division by a zero divisor in an extension ring Q[t]/(m).
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

// Input outside an operation's domain (non-isolated singularity, wrong arity, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

} // namespace germ
