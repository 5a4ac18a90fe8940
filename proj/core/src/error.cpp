#include "rrb/error.hpp"

#include <sstream>

namespace rrb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::PhiNotAction: return "PhiNotAction";
    case ErrorKind::PhiNotAutomorphism: return "PhiNotAutomorphism";
    case ErrorKind::RRBAxiomFails: return "RRBAxiomFails";
    case ErrorKind::EtaRNeqSPsi: return "EtaRNeqSPsi";
    case ErrorKind::EquivarianceFails: return "EquivarianceFails";
    case ErrorKind::NotIdeal: return "NotIdeal";
    case ErrorKind::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::ImageKernelMismatch: return "ImageKernelMismatch";
    case ErrorKind::NotAbelianExtension: return "NotAbelianExtension";
    case ErrorKind::SectionNotNormalized: return "SectionNotNormalized";
    case ErrorKind::NotASection: return "NotASection";
    case ErrorKind::CochainNotNormalized: return "CochainNotNormalized";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::ModuleInvalid: return "ModuleInvalid";
    case ErrorKind::ActionMismatch: return "ActionMismatch";
    case ErrorKind::PairNotCompatible: return "PairNotCompatible";
    case ErrorKind::ModuleMismatch: return "ModuleMismatch";
    case ErrorKind::PsiNotAutomorphism: return "PsiNotAutomorphism";
    case ErrorKind::NotInZ1: return "NotInZ1";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

namespace {

std::string format_label(ErrorKind kind, const std::vector<int>& witness) {
  std::ostringstream out;
  out << to_string(kind);
  if (!witness.empty()) {
    out << '(';
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out << ',';
      out << witness[i];
    }
    out << ')';
  }
  return out.str();
}

}  // namespace

Error::Error(ErrorKind kind, std::vector<int> witness, std::string detail)
    : std::runtime_error(detail.empty() ? format_label(kind, witness)
                                        : format_label(kind, witness) + ": " + detail),
      kind_(kind),
      witness_(std::move(witness)),
      detail_(std::move(detail)) {}

std::string Error::label() const { return format_label(kind_, witness_); }

void fail(ErrorKind kind, std::vector<int> witness, std::string detail) {
  throw Error(kind, std::move(witness), std::move(detail));
}

void ensure(bool condition, const char* what) {
  if (!condition) fail(ErrorKind::InternalError, {}, what);
}

}  // namespace rrb
