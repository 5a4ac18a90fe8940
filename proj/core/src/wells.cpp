#include "rrb/wells.hpp"

#include <map>
#include <memory>
#include <set>
#include <utility>

#include "rrb/error.hpp"

namespace rrb {

namespace {

using Key = std::vector<int>;

Key key_of(const RRBMorphism& m) {
  Key k = m.psi.image;
  k.insert(k.end(), m.eta.image.begin(), m.eta.image.end());
  return k;
}

Key key_of(const CompatiblePair& c) {
  Key k = key_of(c.psi);
  const Key t = key_of(c.theta);
  k.insert(k.end(), t.begin(), t.end());
  return k;
}

bool is_identity(const RRBMorphism& m) {
  return m.psi.image == identity_map(m.psi.domain.order()) &&
         m.eta.image == identity_map(m.eta.domain.order());
}

// Revalidates a morphism as an RRB automorphism of `r`.
void require_automorphism(const RRBGroup& r, const RRBMorphism& m, const char* what) {
  if (!(m.domain == r) || !(m.codomain == r))
    fail(ErrorKind::PsiNotAutomorphism, {}, std::string(what) + " acts on the wrong group");
  try {
    const RRBMorphism v = validate_morphism(r, r, m.psi.image, m.eta.image);
    if (!v.psi.is_injective() || !v.eta.is_injective())
      fail(ErrorKind::PsiNotAutomorphism, {}, std::string(what) + " is not bijective");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PsiNotAutomorphism) throw;
    fail(ErrorKind::PsiNotAutomorphism, e.witness(), std::string(what) + ": " + e.label());
  }
}

RRBMorphism checked_morphism(const RRBGroup& from, const RRBGroup& to, IndexMap psi,
                             IndexMap eta, const char* what) {
  try {
    return validate_morphism(from, to, std::move(psi), std::move(eta));
  } catch (const Error& e) {
    fail(ErrorKind::InternalError, e.witness(), std::string(what) + ": " + e.label());
  }
}

}  // namespace

CompatiblePair compose(const CompatiblePair& first, const CompatiblePair& second) {
  return CompatiblePair{compose(first.psi, second.psi), compose(first.theta, second.theta)};
}

CompatiblePair identity_pair(const RRBModule& m) {
  return CompatiblePair{identity_morphism(m.quotient()), identity_morphism(m.kernel())};
}

bool same_pair(const CompatiblePair& x, const CompatiblePair& y) {
  return same_maps(x.psi, y.psi) && same_maps(x.theta, y.theta);
}

CheckResult check_compatible(const RRBModule& m, const RRBMorphism& psi,
                             const RRBMorphism& theta) {
  if (!(psi.domain == m.quotient()) || !(psi.codomain == m.quotient()) ||
      !(theta.domain == m.kernel()) || !(theta.codomain == m.kernel()))
    return CheckResult::failure(0, {}, "pair acts on the wrong groups");
  const IndexMap &p1 = psi.psi.image, &p2 = psi.eta.image;
  const IndexMap &t1 = theta.psi.image, &t2 = theta.eta.image;
  for (int b = 0; b < m.nB(); ++b)
    for (int k = 0; k < m.nK(); ++k)
      if (t1[m.nu(b, k)] != m.nu(p2[b], t1[k]))
        return CheckResult::failure(1, {b, k}, "nu is not compatible");
  for (int a = 0; a < m.nA(); ++a)
    for (int k = 0; k < m.nK(); ++k)
      if (t1[m.mu(a, k)] != m.mu(p1[a], t1[k]))
        return CheckResult::failure(2, {a, k}, "mu is not compatible");
  for (int b = 0; b < m.nB(); ++b)
    for (int l = 0; l < m.nL(); ++l)
      if (t2[m.sigma(b, l)] != m.sigma(p2[b], t2[l]))
        return CheckResult::failure(3, {b, l}, "sigma is not compatible");
  for (int l = 0; l < m.nL(); ++l)
    for (int a = 0; a < m.nA(); ++a)
      if (t1[m.f(l, a)] != m.f(t2[l], p1[a]))
        return CheckResult::failure(4, {l, a}, "f is not compatible");
  return CheckResult::pass();
}

std::vector<CompatiblePair> automorphism_pairs(const RRBModule& m, int max_order) {
  const auto autA = rrb_automorphism_group(m.quotient(), max_order);
  const auto autK = rrb_automorphism_group(m.kernel(), max_order);
  std::vector<CompatiblePair> out;
  out.reserve(autA.size() * autK.size());
  for (const auto& p : autA)
    for (const auto& t : autK) out.push_back(CompatiblePair{p, t});
  return out;
}

std::vector<CompatiblePair> compatible_pairs(const RRBModule& m, int max_order) {
  std::vector<CompatiblePair> out;
  for (auto& c : automorphism_pairs(m, max_order))
    if (check_compatible(m, c.psi, c.theta)) out.push_back(std::move(c));
  return out;
}

FactorSystem twist_factor_system(const FactorSystem& fs, const IndexMap& psi1,
                                 const IndexMap& psi2, const IndexMap& theta1_inv,
                                 const IndexMap& theta2_inv) {
  FactorSystem out = fs;
  const int nA = fs.nA, nB = fs.nB;
  for (int a1 = 0; a1 < nA; ++a1)
    for (int a2 = 0; a2 < nA; ++a2)
      out.tau1[a1 * nA + a2] = theta1_inv[fs.t1(psi1[a1], psi1[a2])];
  for (int b1 = 0; b1 < nB; ++b1)
    for (int b2 = 0; b2 < nB; ++b2)
      out.tau2[b1 * nB + b2] = theta2_inv[fs.t2(psi2[b1], psi2[b2])];
  for (int a = 0; a < nA; ++a)
    for (int b = 0; b < nB; ++b) out.rho[a * nB + b] = theta1_inv[fs.r(psi1[a], psi2[b])];
  for (int a = 0; a < nA; ++a) out.chi[a] = theta2_inv[fs.x(psi1[a])];
  return out;
}

FactorSystem act_on_factor_system(const RRBModule& m, const CompatiblePair& c,
                                  const FactorSystem& fs) {
  if (const CheckResult r = check_compatible(m, c.psi, c.theta); !r) {
    std::vector<int> witness{r.condition};
    witness.insert(witness.end(), r.witness.begin(), r.witness.end());
    fail(ErrorKind::PairNotCompatible, std::move(witness), r.message);
  }
  return twist_factor_system(fs, c.psi.psi.image, c.psi.eta.image,
                             invert_map(c.theta.psi.image), invert_map(c.theta.eta.image));
}

CohomologyClass act_on_class(const CochainComplex& cx, const CompatiblePair& c,
                             const CohomologyClass& cls) {
  return cx.class_of(act_on_factor_system(cx.module(), c, cls.representative));
}

CohomologyClass gamma_act(const CochainComplex& cx, const CompatiblePair& c,
                          const CohomologyClass& h, const CohomologyClass& ext_class) {
  if (h.coordinates.size() != cx.h2().factors().size() ||
      ext_class.coordinates.size() != cx.h2().factors().size())
    fail(ErrorKind::ModuleMismatch, {}, "classes of another module");
  return cx.add(act_on_class(cx, c, ext_class), h);
}

WellsContext::WellsContext(Extension ext)
    : ext_(std::move(ext)),
      section_(canonical_section(ext_)),
      complex_(extension_module(ext_)),
      fs_(extract_factor_system(ext_, section_)),
      class_(complex_.class_of(fs_)) {
  back_K_.assign(ext_.total.H().order(), -1);
  back_L_.assign(ext_.total.G().order(), -1);
  for (int k = 0; k < ext_.kernel.H().order(); ++k) back_K_[ext_.incl.psi(k)] = k;
  for (int l = 0; l < ext_.kernel.G().order(); ++l) back_L_[ext_.incl.eta(l)] = l;
}

std::pair<int, int> WellsContext::split_H(int h) const {
  const FiniteGroup& H = ext_.total.H();
  const int a = ext_.proj.psi(h);
  return {a, back_K_[H.mul(H.inv(section_.s_H[a]), h)]};
}

std::pair<int, int> WellsContext::split_G(int g) const {
  const FiniteGroup& G = ext_.total.G();
  const int b = ext_.proj.eta(g);
  return {b, back_L_[G.mul(G.inv(section_.s_G[b]), g)]};
}

int WellsContext::join_H(int a, int k) const {
  return ext_.total.H().mul(section_.s_H[a], ext_.incl.psi(k));
}

int WellsContext::join_G(int b, int l) const {
  return ext_.total.G().mul(section_.s_G[b], ext_.incl.eta(l));
}

CohomologyClass wells_map(const WellsContext& ctx, const CompatiblePair& c) {
  const CochainComplex& cx = ctx.complex();
  return cx.sub(act_on_class(cx, c, ctx.extension_class()), ctx.extension_class());
}

std::vector<RRBMorphism> aut_K_H(const WellsContext& ctx, int max_order) {
  const Extension& e = ctx.extension();
  std::vector<RRBMorphism> out;
  for (auto& g : rrb_automorphism_group(e.total, max_order)) {
    bool keeps = true;
    for (int k = 0; keeps && k < e.kernel.H().order(); ++k)
      keeps = e.proj.psi(g.psi(e.incl.psi(k))) == 0;
    for (int l = 0; keeps && l < e.kernel.G().order(); ++l)
      keeps = e.proj.eta(g.eta(e.incl.eta(l))) == 0;
    if (keeps) out.push_back(std::move(g));
  }
  return out;
}

CompatiblePair restrict_and_induce(const WellsContext& ctx, const RRBMorphism& gamma) {
  const Extension& e = ctx.extension();
  const RRBModule& m = ctx.module();
  IndexMap theta1(m.nK()), theta2(m.nL());
  for (int k = 0; k < m.nK(); ++k) {
    const auto [a, kk] = ctx.split_H(gamma.psi(e.incl.psi(k)));
    if (a != 0)
      fail(ErrorKind::WellDefinednessFailure, {0, k}, "automorphism does not normalize K");
    theta1[k] = kk;
  }
  for (int l = 0; l < m.nL(); ++l) {
    const auto [b, ll] = ctx.split_G(gamma.eta(e.incl.eta(l)));
    if (b != 0)
      fail(ErrorKind::WellDefinednessFailure, {1, l}, "automorphism does not normalize L");
    theta2[l] = ll;
  }
  IndexMap psi1(m.nA()), psi2(m.nB());
  for (int a = 0; a < m.nA(); ++a) psi1[a] = e.proj.psi(gamma.psi(ctx.section().s_H[a]));
  for (int b = 0; b < m.nB(); ++b) psi2[b] = e.proj.eta(gamma.eta(ctx.section().s_G[b]));
  CompatiblePair c{
      checked_morphism(m.quotient(), m.quotient(), std::move(psi1), std::move(psi2),
                       "induced quotient map"),
      checked_morphism(m.kernel(), m.kernel(), std::move(theta1), std::move(theta2),
                       "restricted kernel map")};
  ensure(static_cast<bool>(check_compatible(m, c.psi, c.theta)),
         "induced pair is not compatible");
  return c;
}

std::vector<RRBMorphism> aut_AK_H(const WellsContext& ctx, int max_order) {
  std::vector<RRBMorphism> out;
  for (auto& g : aut_K_H(ctx, max_order)) {
    const CompatiblePair c = restrict_and_induce(ctx, g);
    if (is_identity(c.psi) && is_identity(c.theta)) out.push_back(std::move(g));
  }
  return out;
}

RRBMorphism z1_to_aut(const WellsContext& ctx, const Cochain1& kappa) {
  const RRBModule& m = ctx.module();
  if (static_cast<int>(kappa.kappa1.size()) != m.nA() ||
      static_cast<int>(kappa.kappa2.size()) != m.nB())
    fail(ErrorKind::LengthMismatch, {}, "1-cochain shape");
  if (const auto bad = first_derivation_violation(m, kappa)) {
    std::vector<int> witness{bad->condition};
    witness.insert(witness.end(), bad->tuple.begin(), bad->tuple.end());
    fail(ErrorKind::NotInZ1, std::move(witness));
  }
  const Extension& e = ctx.extension();
  const FiniteGroup &H = e.total.H(), &G = e.total.G();
  IndexMap g1(H.order()), g2(G.order());
  for (int h = 0; h < H.order(); ++h)
    g1[h] = H.mul(h, e.incl.psi(kappa.kappa1[e.proj.psi(h)]));
  for (int g = 0; g < G.order(); ++g)
    g2[g] = G.mul(g, e.incl.eta(kappa.kappa2[e.proj.eta(g)]));
  return checked_morphism(e.total, e.total, std::move(g1), std::move(g2), "eta(kappa)");
}

Cochain1 aut_to_z1(const WellsContext& ctx, const RRBMorphism& gamma) {
  const CompatiblePair c = restrict_and_induce(ctx, gamma);
  if (!is_identity(c.psi) || !is_identity(c.theta))
    fail(ErrorKind::WellDefinednessFailure, {}, "automorphism moves A or K");
  const RRBModule& m = ctx.module();
  const Section& s = ctx.section();
  Cochain1 k{IndexMap(m.nA()), IndexMap(m.nB())};
  for (int a = 0; a < m.nA(); ++a) {
    const auto [aa, kk] = ctx.split_H(gamma.psi(s.s_H[a]));
    ensure(aa == a, "gamma moves A");
    k.kappa1[a] = kk;
  }
  for (int b = 0; b < m.nB(); ++b) {
    const auto [bb, ll] = ctx.split_G(gamma.eta(s.s_G[b]));
    ensure(bb == b, "gamma moves B");
    k.kappa2[b] = ll;
  }
  return k;
}

Inducibility is_inducible(const WellsContext& ctx, const RRBMorphism& psi,
                          const RRBMorphism& theta) {
  const RRBModule& m = ctx.module();
  require_automorphism(m.quotient(), psi, "psi");
  require_automorphism(m.kernel(), theta, "theta");
  Inducibility out;
  out.compatible = static_cast<bool>(check_compatible(m, psi, theta));
  if (!out.compatible) return out;

  const CochainComplex& cx = ctx.complex();
  const FactorSystem& fs = ctx.factor_system();
  const FactorSystem twisted = act_on_factor_system(m, CompatiblePair{psi, theta}, fs);
  const auto kappa = cx.solve_coboundary(cx.sub(fs, twisted));
  if (!kappa) return out;

  const Extension& e = ctx.extension();
  IndexMap g1(e.total.H().order()), g2(e.total.G().order());
  for (int h = 0; h < e.total.H().order(); ++h) {
    const auto [a, k] = ctx.split_H(h);
    g1[h] = ctx.join_H(psi.psi(a), theta.psi(m.addK(kappa->kappa1[a], k)));
  }
  for (int g = 0; g < e.total.G().order(); ++g) {
    const auto [b, l] = ctx.split_G(g);
    g2[g] = ctx.join_G(psi.eta(b), theta.eta(m.addL(kappa->kappa2[b], l)));
  }
  out.inducible = true;
  out.witness =
      checked_morphism(e.total, e.total, std::move(g1), std::move(g2), "inducibility witness");
  return out;
}

RRBModule twisted_module(const RRBModule& m, const RRBMorphism& psi) {
  require_automorphism(m.quotient(), psi, "psi");
  const ActionQuadruple& q = m.action();
  ActionQuadruple t = q;
  for (int b = 0; b < m.nB(); ++b) {
    t.nu[b] = q.nu[psi.eta(b)];
    t.sigma[b] = q.sigma[psi.eta(b)];
  }
  for (int a = 0; a < m.nA(); ++a) t.mu[a] = q.mu[psi.psi(a)];
  for (int l = 0; l < m.nL(); ++l)
    for (int a = 0; a < m.nA(); ++a) t.f[l][a] = q.f[l][psi.psi(a)];
  return RRBModule(m.quotient(), m.kernel(), std::move(t));
}

CheckResult check_module_map(const RRBModule& from, const RRBModule& to,
                             const RRBMorphism& theta) {
  if (!(from.quotient() == to.quotient()) || !(theta.domain == from.kernel()) ||
      !(theta.codomain == to.kernel()))
    return CheckResult::failure(0, {}, "modules over different groups");
  const IndexMap &t1 = theta.psi.image, &t2 = theta.eta.image;
  for (int b = 0; b < from.nB(); ++b)
    for (int k = 0; k < from.nK(); ++k)
      if (t1[from.nu(b, k)] != to.nu(b, t1[k]))
        return CheckResult::failure(1, {b, k}, "theta does not intertwine nu");
  for (int a = 0; a < from.nA(); ++a)
    for (int k = 0; k < from.nK(); ++k)
      if (t1[from.mu(a, k)] != to.mu(a, t1[k]))
        return CheckResult::failure(2, {a, k}, "theta does not intertwine mu");
  for (int b = 0; b < from.nB(); ++b)
    for (int l = 0; l < from.nL(); ++l)
      if (t2[from.sigma(b, l)] != to.sigma(b, t2[l]))
        return CheckResult::failure(3, {b, l}, "theta does not intertwine sigma");
  for (int l = 0; l < from.nL(); ++l)
    for (int a = 0; a < from.nA(); ++a)
      if (t1[from.f(l, a)] != to.f(t2[l], a))
        return CheckResult::failure(4, {l, a}, "theta does not intertwine f");
  return CheckResult::pass();
}

bool inducible_by_module_criterion(const WellsContext& ctx, const RRBMorphism& psi,
                                   const RRBMorphism& theta, const CochainComplex* twisted) {
  const RRBModule& m = ctx.module();
  require_automorphism(m.kernel(), theta, "theta");
  std::optional<CochainComplex> own;
  if (!twisted) {
    own.emplace(twisted_module(m, psi));
    twisted = &*own;
  } else {
    require_automorphism(m.quotient(), psi, "psi");
  }
  if (!check_module_map(m, twisted->module(), theta)) return false;

  const FactorSystem& fs = ctx.factor_system();
  const IndexMap idA = identity_map(m.nA()), idB = identity_map(m.nB());
  const IndexMap idK = identity_map(m.nK()), idL = identity_map(m.nL());
  const FactorSystem pulled = twist_factor_system(fs, psi.psi.image, psi.eta.image, idK, idL);
  const FactorSystem pushed = twist_factor_system(fs, idA, idB, theta.psi.image, theta.eta.image);
  ensure(twisted->in_z2(pulled) && twisted->in_z2(pushed),
         "transported cocycles are not cocycles of the twisted module");
  return twisted->in_b2(twisted->sub(pulled, pushed));
}

WellsData compute_wells_data(const WellsContext& ctx, int max_order) {
  const RRBModule& m = ctx.module();
  const CochainComplex& cx = ctx.complex();
  WellsData d;
  d.h2_factors = cx.h2().factors();

  std::map<Key, std::unique_ptr<CochainComplex>> twisted;
  std::map<Key, std::size_t> position;
  for (auto& c : automorphism_pairs(m, max_order)) {
    PairRecord rec{std::move(c), false, std::nullopt, false, false, std::nullopt};
    rec.in_C = static_cast<bool>(check_compatible(m, rec.pair.psi, rec.pair.theta));
    if (rec.in_C) rec.omega = wells_map(ctx, rec.pair).coordinates;
    Inducibility ind = is_inducible(ctx, rec.pair.psi, rec.pair.theta);
    rec.inducible = ind.inducible;
    rec.witness = std::move(ind.witness);
    auto& tw = twisted[key_of(rec.pair.psi)];
    if (!tw) tw = std::make_unique<CochainComplex>(twisted_module(m, rec.pair.psi));
    rec.criterion = inducible_by_module_criterion(ctx, rec.pair.psi, rec.pair.theta, tw.get());
    if (rec.in_C) {
      position[key_of(rec.pair)] = d.compatible.size();
      d.compatible.push_back(d.pairs.size());
    }
    d.pairs.push_back(std::move(rec));
  }

  const std::size_t nc = d.compatible.size();
  d.product.assign(nc, std::vector<std::size_t>(nc));
  d.twisted_omega.assign(nc, std::vector<Vec>(nc));
  for (std::size_t i = 0; i < nc; ++i) {
    const PairRecord& ci = d.pairs[d.compatible[i]];
    const CohomologyClass wi = cx.class_from_coordinates(*ci.omega);
    for (std::size_t j = 0; j < nc; ++j) {
      const CompatiblePair& cj = d.pairs[d.compatible[j]].pair;
      const auto it = position.find(key_of(compose(ci.pair, cj)));
      ensure(it != position.end(), "compatible pairs are not closed under composition");
      d.product[i][j] = it->second;
      d.twisted_omega[i][j] = act_on_class(cx, cj, wi).coordinates;
    }
  }

  for (const Vec& v : cx.z1().elements()) d.z1.push_back(cx.cochain1(v));
  for (const Cochain1& k : d.z1) {
    d.eta_images.push_back(z1_to_aut(ctx, k));
    d.zeta_of_eta.push_back(aut_to_z1(ctx, d.eta_images.back()));
  }
  d.aut_K_H = aut_K_H(ctx, max_order);
  for (const RRBMorphism& g : d.aut_K_H) {
    d.induced.push_back(restrict_and_induce(ctx, g));
    const CompatiblePair& c = d.induced.back();
    if (is_identity(c.psi) && is_identity(c.theta)) {
      d.aut_AK_H.push_back(g);
      d.eta_of_zeta.push_back(z1_to_aut(ctx, aut_to_z1(ctx, g)));
    }
  }
  return d;
}

bool WellsReport::passed(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.ok;
  return false;
}

bool WellsReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

WellsReport evaluate_exactness(const WellsContext& ctx, WellsData data) {
  WellsReport rep;
  const WellsData& d = data;
  const Moduli& h2 = d.h2_factors;
  auto check = [&](std::string name) -> ExactnessCheck& {
    rep.checks.push_back(ExactnessCheck{std::move(name), true, {}});
    return rep.checks.back();
  };
  auto flag = [](ExactnessCheck& c, std::vector<int> witness) {
    if (!c.ok) return;
    c.ok = false;
    c.witness = std::move(witness);
  };

  {
    ExactnessCheck& c = check("eta_injective");
    std::map<Key, int> seen;
    for (std::size_t i = 0; i < d.eta_images.size(); ++i) {
      const auto [it, fresh] = seen.emplace(key_of(d.eta_images[i]), static_cast<int>(i));
      if (!fresh) flag(c, {it->second, static_cast<int>(i)});
    }
  }
  {
    ExactnessCheck& c = check("ker_rho_eq_im_eta");
    std::set<Key> image, kernel;
    for (const auto& g : d.eta_images) image.insert(key_of(g));
    for (std::size_t i = 0; i < d.aut_K_H.size(); ++i) {
      const CompatiblePair& p = d.induced[i];
      if (!is_identity(p.psi) || !is_identity(p.theta)) continue;
      kernel.insert(key_of(d.aut_K_H[i]));
      if (!image.count(key_of(d.aut_K_H[i]))) flag(c, {0, static_cast<int>(i)});
    }
    for (std::size_t i = 0; i < d.eta_images.size(); ++i)
      if (!kernel.count(key_of(d.eta_images[i]))) flag(c, {1, static_cast<int>(i)});
  }
  {
    ExactnessCheck& c = check("ker_omega_eq_im_rho");
    std::set<Key> image;
    for (const auto& p : d.induced) image.insert(key_of(p));
    std::set<Key> kernel;
    for (std::size_t i : d.compatible) {
      const PairRecord& r = d.pairs[i];
      const Key k = key_of(r.pair);
      if (is_zero(*r.omega)) {
        kernel.insert(k);
        if (!image.count(k)) flag(c, {0, static_cast<int>(i)});
      }
    }
    for (std::size_t i = 0; i < d.induced.size(); ++i)
      if (!kernel.count(key_of(d.induced[i]))) flag(c, {1, static_cast<int>(i)});
  }
  {
    ExactnessCheck& c = check("omega_derivation");
    const std::size_t nc = d.compatible.size();
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j) {
        const Vec& wij = *d.pairs[d.compatible[d.product[i][j]]].omega;
        const Vec& wi = *d.pairs[d.compatible[i]].omega;
        const Vec& wj = *d.pairs[d.compatible[j]].omega;
        if (wij != add_mod(d.twisted_omega[i][j], wj, h2))
          flag(c, {static_cast<int>(i), static_cast<int>(j)});
        if (wij != add_mod(wi, wj, h2)) rep.omega_is_homomorphism = false;
      }
  }
  {
    ExactnessCheck& c = check("aut_AK_order_eq_z1");
    if (d.aut_AK_H.size() != d.z1.size())
      flag(c, {static_cast<int>(d.aut_AK_H.size()), static_cast<int>(d.z1.size())});
  }
  {
    ExactnessCheck& c = check("eta_zeta_inverse");
    for (std::size_t i = 0; i < d.z1.size(); ++i)
      if (!(d.zeta_of_eta[i] == d.z1[i])) flag(c, {0, static_cast<int>(i)});
    for (std::size_t i = 0; i < d.aut_AK_H.size(); ++i)
      if (!same_maps(d.eta_of_zeta[i], d.aut_AK_H[i])) flag(c, {1, static_cast<int>(i)});
  }
  {
    ExactnessCheck& c = check("inducibility_agrees");
    for (std::size_t i = 0; i < d.pairs.size(); ++i)
      if (d.pairs[i].inducible != d.pairs[i].criterion) flag(c, {static_cast<int>(i)});
  }
  {
    ExactnessCheck& c = check("witnesses_valid");
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
      const PairRecord& r = d.pairs[i];
      if (!r.inducible) continue;
      const int idx = static_cast<int>(i);
      if (!r.witness) {
        flag(c, {idx});
        continue;
      }
      try {
        const RRBMorphism& g = *r.witness;
        const RRBMorphism v =
            validate_morphism(ctx.extension().total, ctx.extension().total, g.psi.image,
                              g.eta.image);
        if (!v.psi.is_injective() || !v.eta.is_injective() ||
            !same_pair(restrict_and_induce(ctx, v), r.pair))
          flag(c, {idx});
      } catch (const Error&) {
        flag(c, {idx});
      }
    }
  }
  rep.data = std::move(data);
  return rep;
}

WellsReport verify_wells_exactness(const WellsContext& ctx, int max_order) {
  return evaluate_exactness(ctx, compute_wells_data(ctx, max_order));
}

}  // namespace rrb
