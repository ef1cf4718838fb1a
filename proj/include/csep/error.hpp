#pragma once

#include <stdexcept>
#include <string>

namespace csep {

enum class ErrorKind {
  DimensionMismatch,
  NotASublattice,
  RankDeficient,
  BudgetExceeded,
  NotAssociative,
  NoIdentity,
  MissingInverse,
  CapExceeded,
  NonUnimodular,
  NotAHomomorphism,
  NotClassConstant,
  SplittingPrimeFailure,
  SearchBoundExceeded,
  PrimeDividesOrder,
  LiftOutOfRange,
  CocycleNotClosed,
  NotACocycle,
  NoIntegerSolution,
  NonMember,
  NotInCentralizer,
  NotInvariant,
  InputsConjugate,
  InvalidInput,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace csep
