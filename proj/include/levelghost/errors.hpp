#pragma once

#include <stdexcept>
#include <string>

namespace levelghost {

// Invalid numeric input: a level below 2, a lift factor below 1, a composite
// number where a prime is required, and similar caller mistakes.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ill-formed graph or document: duplicate ids, dangling endpoints,
// disconnection, or a witness file that does not re-verify.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// gcd(M(e), l) does not divide a(e): the twist cannot act at that edge.
class CompatibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured cap.  Raised before any partial
// answer could be mistaken for a completed one; a cap hit is never reported
// as an empty result.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value this library itself produced failed its own re-verification.
// Always a bug, never a data error.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Fine-grained reason attached to graph-document parse failures.
enum class ParseIssue {
    MalformedRecord,
    BadInteger,
    DuplicateVertexId,
    DuplicateEdgeId,
    UnknownEndpoint,
    NegativeGenus,
    NoVertices,
    NotStable,
    NotConnected,
};

class GraphParseError : public StructuralError {
public:
    GraphParseError(ParseIssue issue, int line, const std::string& message)
        : StructuralError(message), issue_(issue), line_(line) {}

    ParseIssue issue() const { return issue_; }
    // 1-based line of the offending record; 0 when the failure is not tied
    // to a particular line (structured documents, whole-graph checks).
    int line() const { return line_; }

private:
    ParseIssue issue_;
    int line_;
};

} // namespace levelghost
