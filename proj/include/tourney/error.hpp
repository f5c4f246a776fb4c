#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tourney {

enum class Errc {
  LoopArc,
  MissingOrDoubleArc,
  SizeMismatch,
  OutOfRange,
  ArityMismatch,
  OrderTooLarge,
  BadSymbol,
  EvenOrder,
  NotPrime,
  BadResidueClass,
  UnknownName,
  NotAnArc,
  InternalParity,
  BadM,
  Overflow,
  TooLarge,
  NotSorted,
  BadOrder,
  BadResidue,
  NotRegular,
  CorpusMissing,
  TimeBudgetExceeded,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure in the library surfaces as this type; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tourney
