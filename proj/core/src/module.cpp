#include "rrb/module.hpp"

#include <string>
#include <utility>

#include "rrb/error.hpp"

namespace rrb {

namespace {

bool in_range(const IndexMap& m, int n) {
  for (int v : m)
    if (v < 0 || v >= n) return false;
  return true;
}

bool shaped(const std::vector<IndexMap>& table, int rows, int cols, int values) {
  if (static_cast<int>(table.size()) != rows) return false;
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != cols || !in_range(row, values)) return false;
  return true;
}

bool is_automorphism(const IndexMap& m, const FiniteGroup& g) {
  return GroupHom{g, g, m}.is_injective() && is_homomorphism(m, g, g);
}

CheckResult check_shapes(const RRBGroup& A, const RRBGroup& K, const ActionQuadruple& act) {
  const int nA = A.H().order(), nB = A.G().order(), nK = K.H().order(), nL = K.G().order();
  if (!is_trivial(K)) return CheckResult::failure(0, {}, "kernel is not a trivial RRB group");
  if (!K.H().is_abelian()) return CheckResult::failure(0, {}, "K is not abelian");
  if (!K.G().is_abelian()) return CheckResult::failure(0, {}, "L is not abelian");
  if (!shaped(act.nu, nB, nK, nK)) return CheckResult::failure(0, {}, "nu has the wrong shape");
  if (!shaped(act.mu, nA, nK, nK)) return CheckResult::failure(0, {}, "mu has the wrong shape");
  if (!shaped(act.sigma, nB, nL, nL))
    return CheckResult::failure(0, {}, "sigma has the wrong shape");
  if (!shaped(act.f, nL, nA, nK)) return CheckResult::failure(0, {}, "f has the wrong shape");
  return CheckResult::pass();
}

// Automorphisms, then the (anti-)homomorphism law on every pair.
CheckResult check_action_map(const FiniteGroup& acting, const FiniteGroup& target,
                             const std::vector<IndexMap>& maps, bool anti, int condition,
                             const std::string& name) {
  for (int x = 0; x < acting.order(); ++x)
    if (!is_automorphism(maps[x], target))
      return CheckResult::failure(condition, {x}, name + " is not an automorphism");
  for (int x = 0; x < acting.order(); ++x)
    for (int y = 0; y < acting.order(); ++y) {
      const IndexMap expected =
          anti ? compose_maps(maps[y], maps[x]) : compose_maps(maps[x], maps[y]);
      if (maps[acting.mul(x, y)] != expected)
        return CheckResult::failure(condition, {x, y},
                                    name + (anti ? " is not an anti-homomorphism"
                                                 : " is not a homomorphism"));
    }
  return CheckResult::pass();
}

}  // namespace

ActionQuadruple trivial_action(const RRBGroup& A, const RRBGroup& K) {
  const int nA = A.H().order(), nB = A.G().order(), nK = K.H().order(), nL = K.G().order();
  return ActionQuadruple{std::vector<IndexMap>(nB, identity_map(nK)),
                         std::vector<IndexMap>(nA, identity_map(nK)),
                         std::vector<IndexMap>(nB, identity_map(nL)),
                         std::vector<IndexMap>(nL, IndexMap(nA, 0))};
}

CheckResult validate_module(const RRBGroup& A, const RRBGroup& K, const ActionQuadruple& act) {
  if (auto r = check_shapes(A, K, act); !r) return r;
  const FiniteGroup &GA = A.H(), &GB = A.G(), &GK = K.H(), &GL = K.G();
  const int nA = GA.order(), nB = GB.order(), nK = GK.order(), nL = GL.order();

  if (auto r = check_action_map(GB, GK, act.nu, false, 1, "nu"); !r) return r;
  if (auto r = check_action_map(GA, GK, act.mu, true, 1, "mu"); !r) return r;
  if (auto r = check_action_map(GB, GL, act.sigma, true, 2, "sigma"); !r) return r;

  for (int a = 0; a < nA; ++a)
    for (int l1 = 0; l1 < nL; ++l1)
      for (int l2 = 0; l2 < nL; ++l2)
        if (act.f[GL.mul(l1, l2)][a] != GK.mul(act.f[l1][a], act.f[l2][a]))
          return CheckResult::failure(3, {l1, l2, a}, "f(-, a) is not a homomorphism");
  for (int l = 0; l < nL; ++l)
    for (int a1 = 0; a1 < nA; ++a1)
      for (int a2 = 0; a2 < nA; ++a2)
        if (act.f[l][GA.mul(a1, a2)] != GK.mul(act.mu[a2][act.f[l][a1]], act.f[l][a2]))
          return CheckResult::failure(3, {l, a1, a2}, "f(l, -) is not a mu-derivation");

  std::vector<IndexMap> nu_inv(nB);
  for (int b = 0; b < nB; ++b) nu_inv[b] = invert_map(act.nu[b]);
  for (int a = 0; a < nA; ++a) {
    const int t = A.op(a);
    for (int k = 0; k < nK; ++k) {
      const int sk = K.op(k);
      const int inner = GK.mul(nu_inv[t][act.mu[a][k]], nu_inv[t][act.f[sk][a]]);
      if (K.op(inner) != act.sigma[t][sk])
        return CheckResult::failure(4, {a, k}, "S-compatibility fails");
    }
  }

  for (int b = 0; b < nB; ++b)
    for (int a = 0; a < nA; ++a)
      for (int k = 0; k < nK; ++k)
        if (act.nu[b][act.mu[a][k]] != act.mu[A.act(b, a)][act.nu[b][k]])
          return CheckResult::failure(5, {b, a, k}, "nu and mu do not commute");

  for (int b = 0; b < nB; ++b)
    for (int l = 0; l < nL; ++l)
      for (int a = 0; a < nA; ++a)
        if (act.nu[b][act.f[act.sigma[b][l]][a]] != act.f[l][A.act(b, a)])
          return CheckResult::failure(6, {b, l, a}, "f is not equivariant");
  return CheckResult::pass();
}

RRBModule::RRBModule(RRBGroup A, RRBGroup K, ActionQuadruple action)
    : A_(std::move(A)), K_(std::move(K)), action_(std::move(action)) {
  const CheckResult r = validate_module(A_, K_, action_);
  if (!r) {
    std::vector<int> witness{r.condition};
    witness.insert(witness.end(), r.witness.begin(), r.witness.end());
    fail(ErrorKind::ModuleInvalid, std::move(witness), r.message);
  }
  nu_inv_.reserve(action_.nu.size());
  for (const auto& m : action_.nu) nu_inv_.push_back(invert_map(m));
  pK_ = AbelianPresentation(K_.H());
  pL_ = AbelianPresentation(K_.G());
}

RRBModule trivial_module(const RRBGroup& A, const RRBGroup& K) {
  return RRBModule(A, K, trivial_action(A, K));
}

}  // namespace rrb
