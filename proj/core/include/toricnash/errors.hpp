#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricnash {

enum class ErrorKind {
  ZeroVector,
  EmptyInput,
  RankMismatch,
  NotStronglyConvex,
  NotInCone,
  NotSimplicial,
  NotRank2,
  NonSquare,
  NonSimplicialFan,
  InvalidInput,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void invariant(bool condition, const std::string& what) {
  if (!condition) raise(ErrorKind::InvariantViolation, what);
}

}  // namespace toricnash
