#pragma once

#include <stdexcept>
#include <string>

namespace oddmorph {

/// Structural misuse: unknown ids, loops, malformed paths, violated
/// operation preconditions. Always a caller bug, never a negative verdict.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// A search or computation ran out of its node/size budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Strict text-format parse failure; carries file and line for diagnostics.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, const std::string& expected)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + expected),
          file_(std::move(file)), line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

/// An internal consistency check of the extraction pipeline failed. These
/// checks re-verify facts the algorithm is entitled to assume, so a throw
/// here signals an implementation bug (or falsified precondition), not bad
/// user input.
class PipelineError : public std::runtime_error {
public:
    explicit PipelineError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace oddmorph
