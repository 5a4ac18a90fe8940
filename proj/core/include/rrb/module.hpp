#pragma once

#include <vector>

#include "rrb/abelian.hpp"
#include "rrb/rrb_group.hpp"

namespace rrb {

/// The action (nu, mu, sigma, f) of A = (A, B, beta, T) on K = (K, L, alpha, S).
///
/// nu[b] and sigma[b] are automorphisms of K and L, mu[a] an automorphism of
/// K, and f[l][a] the element f(l, a) of K. mu and sigma act on the right, so
/// mu_{a1 a2} = mu_{a2} ∘ mu_{a1}.
struct ActionQuadruple {
  std::vector<IndexMap> nu;
  std::vector<IndexMap> mu;
  std::vector<IndexMap> sigma;
  std::vector<IndexMap> f;

  friend bool operator==(const ActionQuadruple&, const ActionQuadruple&) = default;
};

/// nu, mu, sigma identities and f identically zero.
ActionQuadruple trivial_action(const RRBGroup& A, const RRBGroup& K);

/// Checks the module conditions and reports the first failure.
///
/// 0: shapes, K not a trivial RRB group, or K or L not abelian.
/// 1: nu a homomorphism into Aut(K), mu an anti-homomorphism.
/// 2: sigma an anti-homomorphism into Aut(L).
/// 3: f(-, a) a homomorphism, f(l, -) a mu-derivation.
/// 4: S(nu^-1_{T a}(mu_a k) + nu^-1_{T a} f(S k, a)) = sigma_{T a}(S k).
/// 5: nu_b mu_a = mu_{beta_b a} nu_b.
/// 6: nu_b f(sigma_b l, a) = f(l, beta_b a), needed for the total action.
CheckResult validate_module(const RRBGroup& A, const RRBGroup& K, const ActionQuadruple& action);

/// A validated module over an RRB group, with additive helpers on K and L.
class RRBModule {
 public:
  RRBModule() = default;
  /// Throws ModuleInvalid with the failed condition followed by its witness.
  RRBModule(RRBGroup A, RRBGroup K, ActionQuadruple action);

  const RRBGroup& quotient() const noexcept { return A_; }
  const RRBGroup& kernel() const noexcept { return K_; }
  const ActionQuadruple& action() const noexcept { return action_; }

  int nA() const noexcept { return A_.H().order(); }
  int nB() const noexcept { return A_.G().order(); }
  int nK() const noexcept { return K_.H().order(); }
  int nL() const noexcept { return K_.G().order(); }

  int addK(int x, int y) const { return K_.H().mul(x, y); }
  int subK(int x, int y) const { return K_.H().mul(x, K_.H().inv(y)); }
  int negK(int x) const { return K_.H().inv(x); }
  int addL(int x, int y) const { return K_.G().mul(x, y); }
  int subL(int x, int y) const { return K_.G().mul(x, K_.G().inv(y)); }
  int negL(int x) const { return K_.G().inv(x); }

  int nu(int b, int k) const { return action_.nu[b][k]; }
  int nu_inv(int b, int k) const { return nu_inv_[b][k]; }
  int mu(int a, int k) const { return action_.mu[a][k]; }
  int sigma(int b, int l) const { return action_.sigma[b][l]; }
  int f(int l, int a) const { return action_.f[l][a]; }
  int S(int k) const { return K_.op(k); }

  const AbelianPresentation& K_coords() const noexcept { return pK_; }
  const AbelianPresentation& L_coords() const noexcept { return pL_; }

  friend bool operator==(const RRBModule& x, const RRBModule& y) {
    return x.A_ == y.A_ && x.K_ == y.K_ && x.action_ == y.action_;
  }

 private:
  RRBGroup A_;
  RRBGroup K_;
  ActionQuadruple action_;
  std::vector<IndexMap> nu_inv_;
  AbelianPresentation pK_;
  AbelianPresentation pL_;
};

/// The module over A where every action is trivial and f vanishes.
RRBModule trivial_module(const RRBGroup& A, const RRBGroup& K);

}  // namespace rrb
