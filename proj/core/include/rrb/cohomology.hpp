#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrb/abelian.hpp"
#include "rrb/module.hpp"

namespace rrb {

/// A 2-cochain (tau1, tau2, rho, chi) stored as full tables of element indices.
///
/// tau1 is |A| x |A| into K, tau2 is |B| x |B| into L, rho is |A| x |B| into K
/// and chi is |A| into L, all row-major.
struct FactorSystem {
  int nA = 1, nB = 1, nK = 1, nL = 1;
  IndexMap tau1{0}, tau2{0}, rho{0}, chi{0};

  static FactorSystem zero(int nA, int nB, int nK, int nL);

  int t1(int a1, int a2) const { return tau1[a1 * nA + a2]; }
  int t2(int b1, int b2) const { return tau2[b1 * nB + b2]; }
  int r(int a, int b) const { return rho[a * nB + b]; }
  int x(int a) const { return chi[a]; }

  /// Every entry with an identity argument is the identity.
  bool is_normalized() const;

  friend bool operator==(const FactorSystem&, const FactorSystem&) = default;
};

/// A 1-cochain (kappa1: A -> K, kappa2: B -> L).
struct Cochain1 {
  IndexMap kappa1;
  IndexMap kappa2;

  friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

/// A failed cocycle or derivation condition: its number and the tuple.
struct Violation {
  int condition = 0;
  std::vector<int> tuple;
};

/// A cohomology class: a representative cocycle and its coordinates in H².
struct CohomologyClass {
  FactorSystem representative;
  Vec coordinates;

  friend bool operator==(const CohomologyClass& x, const CohomologyClass& y) {
    return x.coordinates == y.coordinates;
  }
};

/// delta(chi)(a1, a2) = chi(a2) - chi(a1 ∘ a2) + sigma_{T a2}(chi(a1)) with
/// a1 ∘ a2 = a1 beta_{T a1}(a2), as an |A| x |A| table into L.
IndexMap delta1_sigma(const IndexMap& chi, const RRBModule& m);

/// First failed cocycle condition (1-5) with its argument tuple, evaluated
/// directly on the tables.
std::optional<Violation> first_cocycle_violation(const RRBModule& m, const FactorSystem& fs);
/// First failed derivation condition (1-4).
std::optional<Violation> first_derivation_violation(const RRBModule& m, const Cochain1& kappa);

/// The first and second RRB cochain groups of a module with Z¹, Z², B², H².
///
/// C¹ coordinates run over kappa1(a) for a != 0, then kappa2(b) for b != 0.
/// C² coordinates run over tau1(a1, a2), tau2(b1, b2), rho(a, b), chi(a) with
/// nondegenerate arguments in lexicographic order; each slot expands into the
/// invariant-factor coordinates of K or L.
class CochainComplex {
 public:
  explicit CochainComplex(RRBModule m);

  const RRBModule& module() const noexcept { return m_; }
  const Moduli& c1_moduli() const noexcept { return c1_; }
  const Moduli& c2_moduli() const noexcept { return c2_; }

  FactorSystem zero() const;
  /// Throws LengthMismatch for a wrong shape, CochainNotNormalized otherwise.
  Vec to_vec(const FactorSystem& fs) const;
  FactorSystem factor_system(const Vec& v) const;
  Vec to_vec(const Cochain1& kappa) const;
  Cochain1 cochain1(const Vec& v) const;

  /// The coboundary of kappa, evaluated directly from its formulas.
  FactorSystem coboundary(const Cochain1& kappa) const;
  FactorSystem add(const FactorSystem& x, const FactorSystem& y) const;
  FactorSystem sub(const FactorSystem& x, const FactorSystem& y) const;

  /// First failed cocycle condition (1-5) with its argument tuple.
  std::optional<Violation> first_violation(const FactorSystem& fs) const;
  /// First failed derivation condition (1-4) with its argument tuple.
  std::optional<Violation> first_derivation_violation(const Cochain1& kappa) const;

  /// Linear maps: C¹ -> C² (coboundary), C² -> cocycle defects, C¹ -> derivation defects.
  const FinAbHom& coboundary_map() const noexcept { return delta_; }
  const FinAbHom& cocycle_map() const noexcept { return cocycle_; }
  const FinAbHom& derivation_map() const noexcept { return derivation_; }
  /// Condition number attached to each kept row of cocycle_map.
  const std::vector<int>& cocycle_row_conditions() const noexcept { return cocycle_rows_; }

  const ModSubgroup& z1() const noexcept { return z1_; }
  const ModSubgroup& z2() const noexcept { return z2_; }
  const ModSubgroup& b2() const noexcept { return b2_; }
  const Subquotient& h2() const noexcept { return h2_; }

  bool in_z1(const Cochain1& kappa) const { return z1_.contains(to_vec(kappa)); }
  bool in_z2(const FactorSystem& fs) const { return z2_.contains(to_vec(fs)); }
  bool in_b2(const FactorSystem& fs) const { return b2_.contains(to_vec(fs)); }

  /// Throws NotACocycle(condition, tuple...) for a non-member.
  CohomologyClass class_of(const FactorSystem& fs) const;
  CohomologyClass class_from_coordinates(const Vec& coords) const;
  CohomologyClass zero_class() const;
  CohomologyClass add(const CohomologyClass& x, const CohomologyClass& y) const;
  CohomologyClass sub(const CohomologyClass& x, const CohomologyClass& y) const;

  /// Some kappa with coboundary(kappa) = fs, when fs lies in B².
  std::optional<Cochain1> solve_coboundary(const FactorSystem& fs) const;

  /// Unpruned defect vectors: one coordinate block per condition instance.
  Vec cocycle_defects(const FactorSystem& fs) const;
  Vec derivation_defects(const Cochain1& kappa) const;
  const Moduli& cocycle_defect_moduli() const noexcept { return y_cocycle_; }
  const Moduli& derivation_defect_moduli() const noexcept { return y_derivation_; }

 private:

  RRBModule m_;
  Moduli c1_, c2_, y_cocycle_, y_derivation_;
  std::size_t rK_ = 0, rL_ = 0;
  std::size_t off_tau2_ = 0, off_rho_ = 0, off_chi_ = 0, off_kappa2_ = 0;
  FinAbHom delta_, cocycle_, derivation_;
  std::vector<int> cocycle_rows_;
  ModSubgroup z1_, z2_, b2_;
  Subquotient h2_;
  std::optional<HomDecomposition> delta_decomp_;
};

/// Invariant factors of a subgroup of some ⊕ Z/d_i.
Moduli invariant_factors(const ModSubgroup& s);

/// Classical H²(A, K) for a right action mu (mu_{a1 a2} = mu_{a2} ∘ mu_{a1}),
/// from the tau1 block alone. Throws ModuleInvalid for a bad action.
Subquotient classical_h2_check(const FiniteGroup& A, const FiniteGroup& K,
                               const std::vector<IndexMap>& mu);

}  // namespace rrb
