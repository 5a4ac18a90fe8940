#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rrb/finite_group.hpp"

namespace rrb {

/// A relative Rota-Baxter group (H, G, phi, R).
///
/// phi[g] is the automorphism of H attached to g and R maps H to G with
/// R(h1) R(h2) = R(h1 phi_{R(h1)}(h2)).
class RRBGroup {
 public:
  /// The one-point RRB group.
  RRBGroup();

  const FiniteGroup& H() const noexcept { return data_->H; }
  const FiniteGroup& G() const noexcept { return data_->G; }
  const std::vector<IndexMap>& phi() const noexcept { return data_->phi; }
  const IndexMap& R() const noexcept { return data_->R; }
  int act(int g, int h) const { return data_->phi[g][h]; }
  int op(int h) const { return data_->R[h]; }

  friend bool operator==(const RRBGroup& x, const RRBGroup& y);

 private:
  friend RRBGroup validate_rrb(const FiniteGroup&, const FiniteGroup&, std::vector<IndexMap>,
                               IndexMap);
  struct Data {
    FiniteGroup H, G;
    std::vector<IndexMap> phi;
    IndexMap R;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws PhiNotAutomorphism(g), PhiNotAction(g1,g2), RRBAxiomFails(h1,h2)
/// or LengthMismatch.
RRBGroup validate_rrb(const FiniteGroup& H, const FiniteGroup& G, std::vector<IndexMap> phi,
                      IndexMap R);

/// phi trivial, R given (must be a homomorphism).
RRBGroup trivial_rrb(const FiniteGroup& H, const FiniteGroup& G, IndexMap R);
RRBGroup trivial_rrb(const FiniteGroup& H, const FiniteGroup& G);

bool is_trivial(const RRBGroup& r);
bool is_bijective(const RRBGroup& r);

/// H with h1 ∘ h2 = h1 phi_{R(h1)}(h2).
FiniteGroup descended_operation(const RRBGroup& r);

struct RRBMorphism {
  RRBGroup domain;
  RRBGroup codomain;
  GroupHom psi;  ///< H1 -> H2
  GroupHom eta;  ///< G1 -> G2
};

/// Throws NotHomomorphism, EtaRNeqSPsi(h) or EquivarianceFails(g,h).
RRBMorphism validate_morphism(const RRBGroup& from, const RRBGroup& to, IndexMap psi,
                              IndexMap eta);
RRBMorphism identity_morphism(const RRBGroup& r);
/// outer ∘ inner
RRBMorphism compose(const RRBMorphism& outer, const RRBMorphism& inner);
RRBMorphism inverse(const RRBMorphism& iso);
bool same_maps(const RRBMorphism& x, const RRBMorphism& y);

/// A pair of subsets (K of H, L of G), kept sorted.
struct RRBSubsets {
  std::vector<int> K;
  std::vector<int> L;
};
using RRBIdeal = RRBSubsets;

/// Outcome of a structural check: the first failed condition and a witness.
struct CheckResult {
  bool ok = true;
  int condition = 0;
  std::vector<int> witness;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult failure(int condition, std::vector<int> witness, std::string message) {
    return CheckResult{false, condition, std::move(witness), std::move(message)};
  }
};

/// Sub-RRB: condition 1 is phi_l(K) ⊆ K for l in L, condition 2 is R(K) ⊆ L.
/// Throws NotSubgroup when K or L is not a subgroup.
CheckResult is_subrrb(const RRBGroup& r, const std::vector<int>& K, const std::vector<int>& L);
/// Ideal check. Failed condition 0 means not a sub-RRB; 1 is normality of K
/// in H or L in G; 2 is phi_g(K) ⊆ K; 3 is phi_l(h) h^-1 in K.
CheckResult is_ideal(const RRBGroup& r, const std::vector<int>& K, const std::vector<int>& L);

RRBIdeal morphism_kernel(const RRBMorphism& m);
RRBSubsets morphism_image(const RRBMorphism& m);

/// A sub-RRB as an RRB group in its own right (elements renumbered in
/// increasing order) with its inclusion.
struct SubRRB {
  RRBGroup group;
  RRBMorphism inclusion;
};
SubRRB sub_rrb(const RRBGroup& r, const std::vector<int>& K, const std::vector<int>& L);

struct RRBQuotient {
  RRBGroup group;
  RRBMorphism projection;
  IndexMap section_H;
  IndexMap section_G;
};

/// Throws NotIdeal; WellDefinednessFailure signals an inconsistent ideal check.
RRBQuotient quotient_rrb(const RRBGroup& r, const RRBIdeal& ideal);

RRBIdeal center(const RRBGroup& r);

struct RRBProduct {
  RRBGroup group;
  RRBMorphism inj1, inj2, proj1, proj2;
};

/// Componentwise product with pair encoding x * |second| + y in both slots.
RRBProduct direct_product_rrb(const RRBGroup& first, const RRBGroup& second);

/// All RRB automorphisms, sorted by (psi, eta) image arrays. Throws OrderTooLarge.
std::vector<RRBMorphism> rrb_automorphism_group(const RRBGroup& r,
                                                int max_order = kDefaultMaxOrder);

/// Default cap on axiom evaluations during operator search.
inline constexpr std::int64_t kDefaultBudget = 50'000'000;

/// Every R making (H, G, phi, R) an RRB group, sorted. Throws BudgetExceeded
/// or PhiNotAutomorphism / PhiNotAction for a bad phi.
std::vector<IndexMap> enumerate_rrb_operators(const FiniteGroup& H, const FiniteGroup& G,
                                              const std::vector<IndexMap>& phi,
                                              std::int64_t budget = kDefaultBudget);

/// All homomorphisms G -> Aut(H), each listed as one automorphism of H per
/// element of G. Throws OrderTooLarge.
std::vector<std::vector<IndexMap>> enumerate_actions(const FiniteGroup& H, const FiniteGroup& G,
                                                     int max_order = kDefaultMaxOrder);

/// Brute-force isomorphism search; both groups of order at most 8.
std::optional<RRBMorphism> find_rrb_isomorphism(const RRBGroup& x, const RRBGroup& y);

}  // namespace rrb
