#pragma once

#include <vector>

#include "rrb/cohomology.hpp"
#include "rrb/module.hpp"
#include "rrb/rrb_group.hpp"

namespace rrb {

/// 1 -> kernel --incl--> total --proj--> quotient -> 1.
struct Extension {
  RRBGroup kernel;
  RRBGroup total;
  RRBGroup quotient;
  RRBMorphism incl;
  RRBMorphism proj;
  /// Kernel is a trivial RRB group on abelian K and L.
  bool is_abelian = false;
};

/// Validates both morphisms and exactness. Throws the morphism errors,
/// NotInjective(component), NotSurjective(component) or
/// ImageKernelMismatch(component, element), where component 0 is H and 1 is G.
Extension validate_extension(const RRBGroup& kernel, const RRBGroup& total,
                             const RRBGroup& quotient, IndexMap incl_psi, IndexMap incl_eta,
                             IndexMap proj_psi, IndexMap proj_eta);
Extension validate_extension(const RRBMorphism& incl, const RRBMorphism& proj);

/// Set-theoretic sections A -> H and B -> G of the projection.
struct Section {
  IndexMap s_H;
  IndexMap s_G;

  friend bool operator==(const Section&, const Section&) = default;
};

/// Minimum-index representative of every fibre.
Section canonical_section(const Extension& ext);

/// Throws NotASection(component, x) when proj∘s differs from the identity.
void check_section(const Extension& ext, const Section& s);

/// nu_b(k) = phi_{s_G b}(k), mu_a(k) = s_H(a)^-1 k s_H(a),
/// sigma_b(l) = s_G(b)^-1 l s_G(b), f(l, a) = s_H(a)^-1 phi_l(s_H(a)).
/// Throws NotAbelianExtension.
ActionQuadruple extract_actions(const Extension& ext, const Section& s);

/// tau1(a1, a2) = s_H(a1 a2)^-1 s_H(a1) s_H(a2), tau2 likewise,
/// rho(a, b) = s_H(beta_b a)^-1 phi_{s_G b}(s_H a), chi(a) = s_G(T a)^-1 R(s_H a).
/// Throws NotAbelianExtension or SectionNotNormalized.
FactorSystem extract_factor_system(const Extension& ext, const Section& s);

/// The module structure induced on the kernel.
RRBModule extension_module(const Extension& ext);

/// Raw tables of the total RRB group on A x K and B x L, pair index
/// a * |K| + k and b * |L| + l, without any validation.
struct TotalTables {
  Table H;
  Table G;
  std::vector<IndexMap> phi;
  IndexMap R;
};

/// (a1,k1)(a2,k2) = (a1 a2, tau1(a1,a2) + mu_{a2} k1 + k2), likewise on B x L;
/// phi_(b,l)(a,k) = (beta_b a, rho(a,b) + nu_b(f(l,a) + k));
/// R(a,k) = (T a, chi(a) + S nu^-1_{T a} k).
TotalTables assemble_total(const RRBModule& m, const FactorSystem& fs);

/// The extension E(fs). Throws NotACocycle(condition, tuple...) first.
Extension build_extension(const RRBModule& m, const FactorSystem& fs);

/// K x A with the canonical inclusion and projection, pair index a * |K| + k.
Extension direct_product_extension(const RRBGroup& A, const RRBGroup& K);

/// Equivalent iff the factor systems differ by a coboundary. Throws
/// ModuleMismatch for different kernels or quotients and ActionMismatch when
/// the induced modules differ.
bool are_equivalent(const Extension& x, const Extension& y);

}  // namespace rrb
