#pragma once

#include <stdexcept>
#include <string>

namespace mindeg {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list or certificate text. Carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Input does not satisfy n >= k+1 and e >= t_k(n)+1.
class HypothesisError : public Error {
public:
  using Error::Error;
};

// A proof-level invariant failed at runtime. Always an implementation bug.
class ClaimViolation : public Error {
public:
  ClaimViolation(const std::string &claim, const std::string &detail)
      : Error(claim + " violated: " + detail), claim_(claim) {}
  const std::string &claim() const noexcept { return claim_; }

private:
  std::string claim_;
};

// Exhaustive oracle refused an instance above its vertex cap.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// Raises ClaimViolation when `ok` is false.
inline void check_claim(bool ok, const char *claim, const std::string &detail = {}) {
  if (!ok) throw ClaimViolation(claim, detail);
}

} // namespace mindeg
