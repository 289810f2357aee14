#pragma once

#include <stdexcept>
#include <string>

namespace a2web {

// Violated precondition or out-of-domain input (CLI exit code 1).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unparseable input (CLI exit code 2).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant. These fire when a construction step that the
// theory guarantees (greedy matches, orientation constraints, planarity)
// fails; never silently skipped.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace a2web
