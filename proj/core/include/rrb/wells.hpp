#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrb/cohomology.hpp"
#include "rrb/extension.hpp"
#include "rrb/module.hpp"
#include "rrb/rrb_group.hpp"

namespace rrb {

/// A pair of RRB automorphisms: psi of the quotient A and theta of the kernel K.
struct CompatiblePair {
  RRBMorphism psi;
  RRBMorphism theta;
};

/// (psi1 ∘ psi2, theta1 ∘ theta2); the pairs act on cochains from the right.
CompatiblePair compose(const CompatiblePair& first, const CompatiblePair& second);
CompatiblePair identity_pair(const RRBModule& m);
bool same_pair(const CompatiblePair& x, const CompatiblePair& y);

/// Compatibility of (psi, theta) with the action, one numbered condition each:
/// 1: nu_b = theta1^-1 nu_{psi2 b} theta1, 2: mu_a = theta1^-1 mu_{psi1 a} theta1,
/// 3: sigma_b = theta2^-1 sigma_{psi2 b} theta2, 4: theta1 f(l, a) = f(theta2 l, psi1 a).
CheckResult check_compatible(const RRBModule& m, const RRBMorphism& psi,
                             const RRBMorphism& theta);

/// Aut(A) x Aut(K), A outermost, each factor in sorted order.
std::vector<CompatiblePair> automorphism_pairs(const RRBModule& m,
                                               int max_order = kDefaultMaxOrder);
/// The pairs passing check_compatible, in the order of automorphism_pairs.
std::vector<CompatiblePair> compatible_pairs(const RRBModule& m,
                                             int max_order = kDefaultMaxOrder);

/// fs^(psi, theta) for arbitrary maps: theta^-1 applied to fs evaluated at psi.
FactorSystem twist_factor_system(const FactorSystem& fs, const IndexMap& psi1,
                                 const IndexMap& psi2, const IndexMap& theta1_inv,
                                 const IndexMap& theta2_inv);
/// Throws PairNotCompatible.
FactorSystem act_on_factor_system(const RRBModule& m, const CompatiblePair& c,
                                  const FactorSystem& fs);
/// [fs]^c = [fs^c]. Throws PairNotCompatible.
CohomologyClass act_on_class(const CochainComplex& cx, const CompatiblePair& c,
                             const CohomologyClass& cls);
/// ([E]^c)^h: the pair action followed by translation by h.
CohomologyClass gamma_act(const CochainComplex& cx, const CompatiblePair& c,
                          const CohomologyClass& h, const CohomologyClass& ext_class);

/// An abelian extension with its canonical section, module, cochain complex
/// and extracted factor system.
class WellsContext {
 public:
  /// Throws NotAbelianExtension.
  explicit WellsContext(Extension ext);

  const Extension& extension() const noexcept { return ext_; }
  const Section& section() const noexcept { return section_; }
  const RRBModule& module() const noexcept { return complex_.module(); }
  const CochainComplex& complex() const noexcept { return complex_; }
  const FactorSystem& factor_system() const noexcept { return fs_; }
  const CohomologyClass& extension_class() const noexcept { return class_; }

  /// Splits h = s_H(a) incl(k) into (a, k); likewise for G.
  std::pair<int, int> split_H(int h) const;
  std::pair<int, int> split_G(int g) const;
  int join_H(int a, int k) const;
  int join_G(int b, int l) const;

 private:
  Extension ext_;
  Section section_;
  CochainComplex complex_;
  FactorSystem fs_;
  CohomologyClass class_;
  IndexMap back_K_, back_L_;
};

/// omega(c) = [fs^c] - [fs]. Throws PairNotCompatible.
CohomologyClass wells_map(const WellsContext& ctx, const CompatiblePair& c);

/// RRB automorphisms of the total group mapping K into K and L into L.
std::vector<RRBMorphism> aut_K_H(const WellsContext& ctx, int max_order = kDefaultMaxOrder);
/// gamma_A(a) = pi1(gamma1(s_H a)), gamma_B(b) = pi2(gamma2(s_G b)) and gamma
/// restricted to the kernel. Throws WellDefinednessFailure when gamma does not
/// normalize the kernel.
CompatiblePair restrict_and_induce(const WellsContext& ctx, const RRBMorphism& gamma);
/// Automorphisms inducing the identity on both A and K.
std::vector<RRBMorphism> aut_AK_H(const WellsContext& ctx, int max_order = kDefaultMaxOrder);

/// eta(kappa): h -> h incl(kappa1(pi1 h)), g -> g incl(kappa2(pi2 g)).
/// Throws NotInZ1(condition, tuple...).
RRBMorphism z1_to_aut(const WellsContext& ctx, const Cochain1& kappa);
/// zeta(gamma): kappa1(a) = s_H(a)^-1 gamma1(s_H a), likewise kappa2.
/// Throws WellDefinednessFailure when gamma is not in Aut^{A,K}(H).
Cochain1 aut_to_z1(const WellsContext& ctx, const RRBMorphism& gamma);

struct Inducibility {
  bool compatible = false;
  bool inducible = false;
  /// An automorphism of the total group inducing the pair.
  std::optional<RRBMorphism> witness;
};

/// Inducible iff compatible and fs - fs^c is a coboundary d(kappa); then
/// gamma1(s_H(a) k) = s_H(psi1 a) theta1(kappa1(a) + k) and likewise on G.
/// Throws PsiNotAutomorphism when psi or theta is not an RRB automorphism.
Inducibility is_inducible(const WellsContext& ctx, const RRBMorphism& psi,
                          const RRBMorphism& theta);

/// K with the action precomposed by psi. Throws PsiNotAutomorphism.
RRBModule twisted_module(const RRBModule& m, const RRBMorphism& psi);

/// theta is a module map from `from` to `to` when
/// theta1 nu_b = nu'_b theta1, theta1 mu_a = mu'_a theta1,
/// theta2 sigma_b = sigma'_b theta2 and theta1 f(l, a) = f'(theta2 l, a).
CheckResult check_module_map(const RRBModule& from, const RRBModule& to,
                             const RRBMorphism& theta);

/// theta: K -> K_psi is a module isomorphism and fs∘psi - theta∘fs lies in
/// B²(A, K_psi). `twisted` may supply the complex of K_psi.
bool inducible_by_module_criterion(const WellsContext& ctx, const RRBMorphism& psi,
                                   const RRBMorphism& theta,
                                   const CochainComplex* twisted = nullptr);

struct PairRecord {
  CompatiblePair pair;
  bool in_C = false;
  /// Class coordinates of omega(pair), for pairs in C.
  std::optional<Vec> omega;
  bool inducible = false;
  bool criterion = false;
  std::optional<RRBMorphism> witness;
};

/// Everything the exactness checks consume; exposed so that individual
/// entries can be inspected or altered.
struct WellsData {
  Moduli h2_factors;
  std::vector<PairRecord> pairs;
  /// Indices into `pairs` of the compatible pairs.
  std::vector<std::size_t> compatible;
  /// product[i][j]: position in `compatible` of c_i c_j.
  std::vector<std::vector<std::size_t>> product;
  /// twisted_omega[i][j]: coordinates of omega(c_i)^{c_j}.
  std::vector<std::vector<Vec>> twisted_omega;
  std::vector<Cochain1> z1;
  std::vector<RRBMorphism> eta_images;
  std::vector<Cochain1> zeta_of_eta;
  std::vector<RRBMorphism> aut_K_H;
  std::vector<CompatiblePair> induced;
  std::vector<RRBMorphism> aut_AK_H;
  std::vector<RRBMorphism> eta_of_zeta;
};

WellsData compute_wells_data(const WellsContext& ctx, int max_order = kDefaultMaxOrder);

struct ExactnessCheck {
  std::string name;
  bool ok = true;
  std::vector<int> witness;
};

struct WellsReport {
  WellsData data;
  std::vector<ExactnessCheck> checks;
  /// Informational: omega(c1 c2) = omega(c1) + omega(c2) on all of C.
  bool omega_is_homomorphism = true;

  bool passed(const std::string& name) const;
  bool all_passed() const;
};

/// Checks, by name: eta_injective, ker_rho_eq_im_eta, ker_omega_eq_im_rho,
/// omega_derivation, aut_AK_order_eq_z1, eta_zeta_inverse,
/// inducibility_agrees, witnesses_valid.
WellsReport evaluate_exactness(const WellsContext& ctx, WellsData data);
WellsReport verify_wells_exactness(const WellsContext& ctx, int max_order = kDefaultMaxOrder);

}  // namespace rrb
