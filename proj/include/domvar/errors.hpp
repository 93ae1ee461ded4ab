#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace domvar {

/// Input that violates a structural precondition (self-loop, bad id, ...).
class MalformedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's documented precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Brute-force routines refuse instances above their hard caps.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// G - S is not a cluster graph; `witness` is an induced P3 (a-b-c, a and c non-adjacent).
class NotClusterGraph : public std::runtime_error {
public:
    NotClusterGraph(std::vector<int> witness, const std::string &what)
        : std::runtime_error(what), witness(std::move(witness)) {}
    std::vector<int> witness;
};

/// G - S is not a split graph; `witness` induces 2K2, C4 or C5.
class NotSplitGraph : public std::runtime_error {
public:
    NotSplitGraph(std::vector<int> witness, const std::string &what)
        : std::runtime_error(what), witness(std::move(witness)) {}
    std::vector<int> witness;
};

/// Text-format error with the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

/// The modulator in an instance does not leave the promised residual class.
class ModulatorMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace domvar
