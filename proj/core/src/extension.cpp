#include "rrb/extension.hpp"

#include <utility>

#include "rrb/error.hpp"

namespace rrb {

namespace {

// Preimage table of an injective map, -1 off the image.
IndexMap preimage_table(const IndexMap& map, int codomain_order) {
  IndexMap out(codomain_order, -1);
  for (int x = 0; x < static_cast<int>(map.size()); ++x) out[map[x]] = x;
  return out;
}

int pull(const IndexMap& preimage, int element) {
  const int k = preimage[element];
  ensure(k >= 0, "element is not in the kernel");
  return k;
}

void check_exact(const GroupHom& in, const GroupHom& out, int component) {
  if (!in.is_injective()) fail(ErrorKind::NotInjective, {component});
  if (!out.is_surjective()) fail(ErrorKind::NotSurjective, {component});
  std::vector<bool> image(out.domain.order(), false);
  for (int x : in.image) image[x] = true;
  for (int h = 0; h < out.domain.order(); ++h)
    if (image[h] != (out(h) == 0)) fail(ErrorKind::ImageKernelMismatch, {component, h});
}

void require_abelian(const Extension& ext) {
  if (!ext.is_abelian) fail(ErrorKind::NotAbelianExtension);
}

}  // namespace

Extension validate_extension(const RRBMorphism& incl, const RRBMorphism& proj) {
  if (!(incl.codomain == proj.domain))
    fail(ErrorKind::LengthMismatch, {}, "inclusion and projection do not meet");
  check_exact(incl.psi, proj.psi, 0);
  check_exact(incl.eta, proj.eta, 1);
  const RRBGroup& K = incl.domain;
  const bool abelian = is_trivial(K) && K.H().is_abelian() && K.G().is_abelian();
  return Extension{K, incl.codomain, proj.codomain, incl, proj, abelian};
}

Extension validate_extension(const RRBGroup& kernel, const RRBGroup& total,
                             const RRBGroup& quotient, IndexMap incl_psi, IndexMap incl_eta,
                             IndexMap proj_psi, IndexMap proj_eta) {
  return validate_extension(
      validate_morphism(kernel, total, std::move(incl_psi), std::move(incl_eta)),
      validate_morphism(total, quotient, std::move(proj_psi), std::move(proj_eta)));
}

Section canonical_section(const Extension& ext) {
  auto fibres = [](const GroupHom& p) {
    IndexMap s(p.codomain.order(), -1);
    for (int h = 0; h < p.domain.order(); ++h)
      if (s[p(h)] < 0) s[p(h)] = h;
    return s;
  };
  return Section{fibres(ext.proj.psi), fibres(ext.proj.eta)};
}

void check_section(const Extension& ext, const Section& s) {
  auto check = [](const GroupHom& p, const IndexMap& sec, int component) {
    if (static_cast<int>(sec.size()) != p.codomain.order())
      fail(ErrorKind::LengthMismatch, {component}, "section");
    for (int x = 0; x < p.codomain.order(); ++x)
      if (sec[x] < 0 || sec[x] >= p.domain.order() || p(sec[x]) != x)
        fail(ErrorKind::NotASection, {component, x});
  };
  check(ext.proj.psi, s.s_H, 0);
  check(ext.proj.eta, s.s_G, 1);
}

ActionQuadruple extract_actions(const Extension& ext, const Section& s) {
  require_abelian(ext);
  check_section(ext, s);
  const RRBGroup& E = ext.total;
  const FiniteGroup &H = E.H(), &G = E.G();
  const IndexMap &iK = ext.incl.psi.image, &iL = ext.incl.eta.image;
  const IndexMap backK = preimage_table(iK, H.order());
  const IndexMap backL = preimage_table(iL, G.order());
  const int nA = ext.quotient.H().order(), nB = ext.quotient.G().order();
  const int nK = ext.kernel.H().order(), nL = ext.kernel.G().order();

  ActionQuadruple q;
  q.nu.assign(nB, IndexMap(nK));
  q.sigma.assign(nB, IndexMap(nL));
  for (int b = 0; b < nB; ++b) {
    const int g = s.s_G[b], gi = G.inv(g);
    for (int k = 0; k < nK; ++k) q.nu[b][k] = pull(backK, E.act(g, iK[k]));
    for (int l = 0; l < nL; ++l) q.sigma[b][l] = pull(backL, G.mul(G.mul(gi, iL[l]), g));
  }
  q.mu.assign(nA, IndexMap(nK));
  for (int a = 0; a < nA; ++a) {
    const int h = s.s_H[a], hi = H.inv(h);
    for (int k = 0; k < nK; ++k) q.mu[a][k] = pull(backK, H.mul(H.mul(hi, iK[k]), h));
  }
  q.f.assign(nL, IndexMap(nA));
  for (int l = 0; l < nL; ++l)
    for (int a = 0; a < nA; ++a) {
      const int h = s.s_H[a];
      q.f[l][a] = pull(backK, H.mul(H.inv(h), E.act(iL[l], h)));
    }
  return q;
}

FactorSystem extract_factor_system(const Extension& ext, const Section& s) {
  require_abelian(ext);
  check_section(ext, s);
  if (s.s_H[0] != 0 || s.s_G[0] != 0) fail(ErrorKind::SectionNotNormalized);
  const RRBGroup &E = ext.total, &Q = ext.quotient;
  const FiniteGroup &H = E.H(), &G = E.G();
  const IndexMap backK = preimage_table(ext.incl.psi.image, H.order());
  const IndexMap backL = preimage_table(ext.incl.eta.image, G.order());
  const int nA = Q.H().order(), nB = Q.G().order();
  FactorSystem fs =
      FactorSystem::zero(nA, nB, ext.kernel.H().order(), ext.kernel.G().order());
  const IndexMap &sH = s.s_H, &sG = s.s_G;
  for (int a1 = 0; a1 < nA; ++a1)
    for (int a2 = 0; a2 < nA; ++a2)
      fs.tau1[a1 * nA + a2] =
          pull(backK, H.mul(H.inv(sH[Q.H().mul(a1, a2)]), H.mul(sH[a1], sH[a2])));
  for (int b1 = 0; b1 < nB; ++b1)
    for (int b2 = 0; b2 < nB; ++b2)
      fs.tau2[b1 * nB + b2] =
          pull(backL, G.mul(G.inv(sG[Q.G().mul(b1, b2)]), G.mul(sG[b1], sG[b2])));
  for (int a = 0; a < nA; ++a)
    for (int b = 0; b < nB; ++b)
      fs.rho[a * nB + b] = pull(backK, H.mul(H.inv(sH[Q.act(b, a)]), E.act(sG[b], sH[a])));
  for (int a = 0; a < nA; ++a)
    fs.chi[a] = pull(backL, G.mul(G.inv(sG[Q.op(a)]), E.op(sH[a])));
  return fs;
}

RRBModule extension_module(const Extension& ext) {
  return RRBModule(ext.quotient, ext.kernel, extract_actions(ext, canonical_section(ext)));
}

TotalTables assemble_total(const RRBModule& m, const FactorSystem& fs) {
  const RRBGroup& A = m.quotient();
  const int nA = m.nA(), nB = m.nB(), nK = m.nK(), nL = m.nL();
  const int nH = nA * nK, nG = nB * nL;
  TotalTables t{Table(nH, std::vector<int>(nH)), Table(nG, std::vector<int>(nG)),
                std::vector<IndexMap>(nG, IndexMap(nH)), IndexMap(nH)};
  for (int a1 = 0; a1 < nA; ++a1)
    for (int k1 = 0; k1 < nK; ++k1)
      for (int a2 = 0; a2 < nA; ++a2)
        for (int k2 = 0; k2 < nK; ++k2) {
          const int k = m.addK(m.addK(fs.t1(a1, a2), m.mu(a2, k1)), k2);
          t.H[a1 * nK + k1][a2 * nK + k2] = A.H().mul(a1, a2) * nK + k;
        }
  for (int b1 = 0; b1 < nB; ++b1)
    for (int l1 = 0; l1 < nL; ++l1)
      for (int b2 = 0; b2 < nB; ++b2)
        for (int l2 = 0; l2 < nL; ++l2) {
          const int l = m.addL(m.addL(fs.t2(b1, b2), m.sigma(b2, l1)), l2);
          t.G[b1 * nL + l1][b2 * nL + l2] = A.G().mul(b1, b2) * nL + l;
        }
  for (int b = 0; b < nB; ++b)
    for (int l = 0; l < nL; ++l)
      for (int a = 0; a < nA; ++a)
        for (int k = 0; k < nK; ++k) {
          const int kk = m.addK(fs.r(a, b), m.nu(b, m.addK(m.f(l, a), k)));
          t.phi[b * nL + l][a * nK + k] = A.act(b, a) * nK + kk;
        }
  for (int a = 0; a < nA; ++a)
    for (int k = 0; k < nK; ++k) {
      const int ta = A.op(a);
      t.R[a * nK + k] = ta * nL + m.addL(fs.x(a), m.S(m.nu_inv(ta, k)));
    }
  return t;
}

Extension build_extension(const RRBModule& m, const FactorSystem& fs) {
  if (fs.nA != m.nA() || fs.nB != m.nB() || fs.nK != m.nK() || fs.nL != m.nL())
    fail(ErrorKind::LengthMismatch, {fs.nA, fs.nB, fs.nK, fs.nL}, "factor system shape");
  if (!fs.is_normalized()) fail(ErrorKind::CochainNotNormalized, {}, "factor system");
  if (const auto bad = first_cocycle_violation(m, fs)) {
    std::vector<int> witness{bad->condition};
    witness.insert(witness.end(), bad->tuple.begin(), bad->tuple.end());
    fail(ErrorKind::NotACocycle, std::move(witness));
  }
  TotalTables t = assemble_total(m, fs);
  const FiniteGroup H = validate_group(t.H), G = validate_group(t.G);
  const RRBGroup total = validate_rrb(H, G, std::move(t.phi), std::move(t.R));
  const int nA = m.nA(), nB = m.nB(), nK = m.nK(), nL = m.nL();
  IndexMap proj_psi(nA * nK), proj_eta(nB * nL);
  for (int h = 0; h < nA * nK; ++h) proj_psi[h] = h / nK;
  for (int g = 0; g < nB * nL; ++g) proj_eta[g] = g / nL;
  return validate_extension(m.kernel(), total, m.quotient(), identity_map(nK),
                            identity_map(nL), std::move(proj_psi), std::move(proj_eta));
}

Extension direct_product_extension(const RRBGroup& A, const RRBGroup& K) {
  const RRBProduct p = direct_product_rrb(A, K);
  return validate_extension(p.inj2, p.proj1);
}

bool are_equivalent(const Extension& x, const Extension& y) {
  require_abelian(x);
  require_abelian(y);
  if (!(x.kernel == y.kernel) || !(x.quotient == y.quotient)) fail(ErrorKind::ModuleMismatch);
  const Section sx = canonical_section(x), sy = canonical_section(y);
  const ActionQuadruple qx = extract_actions(x, sx);
  if (!(qx == extract_actions(y, sy))) fail(ErrorKind::ActionMismatch);
  const CochainComplex c(RRBModule(x.quotient, x.kernel, qx));
  return c.in_b2(c.sub(extract_factor_system(x, sx), extract_factor_system(y, sy)));
}

}  // namespace rrb
