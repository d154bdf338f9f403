#pragma once

#include <stdexcept>
#include <string>

namespace regset {

enum class Errc {
  NonAbelianInput,
  NotAnAutomorphism,
  NotAHomomorphism,
  InvalidPermutation,
  InvalidGroupTable,
  ClosureBudgetExceeded,
  BudgetExceeded,
  NotASubgroup,
  SubgroupIsWholeGroup,
  TrivialOrFullSubgroup,
  OutOfRange,
  InvalidConnectionSet,
  NotRegular,
  SelfPairedComponent,
  MultiplicityOutOfRange,
  NoInvolutionInCoset,
  WrongCosetCount,
  InfeasibleSplit,
  NoInvolution,
  EvenIndex,
  AssertionFailed,
  MethodDisagreement,
  NoBundleExists,
  SearchBudgetExceeded,
  NotAPerfectCode,
  NoInverseClosedSubset,
  NotRegularSet,
  CountMismatch,
  WitnessCheckFailed,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// A consistency failure means a structural fact the library relies on was
// observed to be false at runtime. On valid inputs these never fire; any
// occurrence is either a bug or a genuine counterexample and must abort
// the run loudly instead of being downgraded to a negative decision.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

bool is_budget_error(Errc c);

// Negative decisions: well-formed queries whose answer is "no".
bool is_negative_decision(Errc c);

}  // namespace regset
