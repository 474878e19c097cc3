#ifndef DIHO_ERROR_HPP
#define DIHO_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diho {

enum class ErrorCode {
  AssignmentIncomplete,
  UnknownTarget,
  UnknownLabel,
  InvalidMap,
  InvalidEdge,
  NotSubdigraph,
  DomainMismatch,
  SignatureMismatch,
  BudgetExceeded,
  RestrictionMismatch,
  PreconditionFailed,
  NotSubcategory,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode c);

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(c)) + ": " + msg), code(c) {}
};

struct BudgetExceeded : Error {
  std::uint64_t states_used;
  explicit BudgetExceeded(std::uint64_t used)
      : Error(ErrorCode::BudgetExceeded,
              "search budget exhausted after " + std::to_string(used) + " states"),
        states_used(used) {}
};

/* Hard cap on generated search states; every complete candidate map charges one unit. */
struct Budget {
  std::uint64_t limit = 5'000'000;
  std::uint64_t used = 0;
  void charge(std::uint64_t n = 1) {
    used += n;
    if (used > limit) throw BudgetExceeded(used);
  }
};

}  // namespace diho

#endif
