#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

// Every failure mode the library reports deliberately.  CLI maps input-shaped
// codes to exit 2 and resource caps to exit 3.
enum class Err {
  NotPrime,
  ReducibleModulus,
  DivZero,
  DimMismatch,
  SingularGenerator,
  OrderExceeded,
  NotSemisimple,
  NotCentral,
  NotIdempotent,
  ZeroModule,
  NotDivisible,
  ComponentTooLarge,
  MultNotOne,
  InexactDivision,
  KTooLarge,
  InconsistentInput,
  TooLarge,
  NoTranslate,
  NotMonomial,
  BadT,
  BudgetExceeded,
  Input,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "E_NOT_PRIME";
    case Err::ReducibleModulus: return "E_REDUCIBLE_MODULUS";
    case Err::DivZero: return "E_DIV_ZERO";
    case Err::DimMismatch: return "E_DIM_MISMATCH";
    case Err::SingularGenerator: return "E_SINGULAR_GENERATOR";
    case Err::OrderExceeded: return "E_ORDER_EXCEEDED";
    case Err::NotSemisimple: return "E_NOT_SEMISIMPLE";
    case Err::NotCentral: return "E_NOT_CENTRAL";
    case Err::NotIdempotent: return "E_NOT_IDEMPOTENT";
    case Err::ZeroModule: return "E_ZERO_MODULE";
    case Err::NotDivisible: return "E_NOT_DIVISIBLE";
    case Err::ComponentTooLarge: return "E_COMPONENT_TOO_LARGE";
    case Err::MultNotOne: return "E_MULT_NOT_ONE";
    case Err::InexactDivision: return "E_INEXACT_DIVISION";
    case Err::KTooLarge: return "E_K_TOO_LARGE";
    case Err::InconsistentInput: return "E_INCONSISTENT_INPUT";
    case Err::TooLarge: return "E_TOO_LARGE";
    case Err::NoTranslate: return "E_NO_TRANSLATE";
    case Err::NotMonomial: return "E_NOT_MONOMIAL";
    case Err::BadT: return "E_BAD_T";
    case Err::BudgetExceeded: return "E_BUDGET_EXCEEDED";
    case Err::Input: return "E_INPUT";
    case Err::Internal: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace ginv
