#include "regset/errors.hpp"

namespace regset {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonAbelianInput: return "NonAbelianInput";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::InvalidGroupTable: return "InvalidGroupTable";
    case Errc::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::SubgroupIsWholeGroup: return "SubgroupIsWholeGroup";
    case Errc::TrivialOrFullSubgroup: return "TrivialOrFullSubgroup";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidConnectionSet: return "InvalidConnectionSet";
    case Errc::NotRegular: return "NotRegular";
    case Errc::SelfPairedComponent: return "SelfPairedComponent";
    case Errc::MultiplicityOutOfRange: return "MultiplicityOutOfRange";
    case Errc::NoInvolutionInCoset: return "NoInvolutionInCoset";
    case Errc::WrongCosetCount: return "WrongCosetCount";
    case Errc::InfeasibleSplit: return "InfeasibleSplit";
    case Errc::NoInvolution: return "NoInvolution";
    case Errc::EvenIndex: return "EvenIndex";
    case Errc::AssertionFailed: return "AssertionFailed";
    case Errc::MethodDisagreement: return "MethodDisagreement";
    case Errc::NoBundleExists: return "NoBundleExists";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::NotAPerfectCode: return "NotAPerfectCode";
    case Errc::NoInverseClosedSubset: return "NoInverseClosedSubset";
    case Errc::NotRegularSet: return "NotRegularSet";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::WitnessCheckFailed: return "WitnessCheckFailed";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

bool is_budget_error(Errc c) {
  return c == Errc::ClosureBudgetExceeded || c == Errc::BudgetExceeded ||
         c == Errc::SearchBudgetExceeded;
}

bool is_negative_decision(Errc c) {
  return c == Errc::NotAPerfectCode || c == Errc::NoBundleExists ||
         c == Errc::NoInverseClosedSubset || c == Errc::NotRegularSet;
}

}  // namespace regset
