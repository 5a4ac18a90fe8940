#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rrb {

enum class ErrorKind {
  // finite groups
  NotClosed,
  NoIdentityAtZero,
  NotAssociative,
  NoInverse,
  LengthMismatch,
  OrderTooLarge,
  NotNormal,
  NotAbelian,
  NotSubgroup,
  NotHomomorphism,
  // relative Rota-Baxter groups
  PhiNotAction,
  PhiNotAutomorphism,
  RRBAxiomFails,
  EtaRNeqSPsi,
  EquivarianceFails,
  NotIdeal,
  WellDefinednessFailure,
  BudgetExceeded,
  // extensions and modules
  NotInjective,
  NotSurjective,
  ImageKernelMismatch,
  NotAbelianExtension,
  SectionNotNormalized,
  NotASection,
  CochainNotNormalized,
  NotACocycle,
  ModuleInvalid,
  ActionMismatch,
  // Wells machinery
  PairNotCompatible,
  ModuleMismatch,
  PsiNotAutomorphism,
  NotInZ1,
  // plumbing
  ParseError,
  InternalError,
};

std::string_view to_string(ErrorKind kind);

/// Structured failure carrying the violated condition and a witness tuple.
///
/// The witness is the smallest tuple of element indices (or condition index
/// followed by indices) that exhibits the failure, so callers can print
/// e.g. `RRBAxiomFails(1,2)`.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::vector<int> witness = {}, std::string detail = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }
  const std::string& detail() const noexcept { return detail_; }

  /// `Kind(w0,w1,...)`, the form used in CLI diagnostics.
  std::string label() const;

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, std::vector<int> witness = {},
                       std::string detail = {});

/// Internal invariant check that stays on in every build type.
void ensure(bool condition, const char* what);

}  // namespace rrb
