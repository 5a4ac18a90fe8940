#include "rrb/cohomology.hpp"

#include <initializer_list>
#include <map>
#include <random>
#include <utility>

#include "rrb/error.hpp"

namespace rrb {

namespace {

using Tuple = std::initializer_list<int>;

template <class Eval>
FinAbHom linearize(const Moduli& dom, const Moduli& cod, Eval&& eval) {
  FinAbHom h{dom, cod, {}};
  h.columns.reserve(dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    Vec e(dom.size(), 0);
    e[j] = 1;
    h.columns.push_back(eval(e));
  }
  return h;
}

// The maps are assembled from basis images, so evaluate a few random points
// directly and compare.
template <class Eval>
void audit_linearity(const FinAbHom& h, Eval&& eval, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 8; ++trial) {
    Vec x(h.domain.size());
    for (std::size_t j = 0; j < x.size(); ++j)
      x[j] = std::uniform_int_distribution<std::int64_t>(0, h.domain[j] - 1)(rng);
    ensure(h.apply(x) == eval(x), "cochain map is not linear");
  }
}

struct PrunedMap {
  FinAbHom map;
  std::vector<std::size_t> kept;
};

// Drops zero rows and repeated rows; the kernel is unchanged.
PrunedMap prune_rows(const FinAbHom& h) {
  PrunedMap out{FinAbHom{h.domain, {}, std::vector<Vec>(h.domain.size())}, {}};
  std::map<std::pair<std::int64_t, Vec>, std::size_t> seen;
  for (std::size_t i = 0; i < h.codomain.size(); ++i) {
    Vec row(h.domain.size());
    for (std::size_t j = 0; j < h.domain.size(); ++j) row[j] = h.columns[j][i];
    if (is_zero(row)) continue;
    if (!seen.emplace(std::make_pair(h.codomain[i], row), i).second) continue;
    out.kept.push_back(i);
    out.map.codomain.push_back(h.codomain[i]);
    for (std::size_t j = 0; j < h.domain.size(); ++j) out.map.columns[j].push_back(row[j]);
  }
  return out;
}

void append(Vec& out, const Vec& part) { out.insert(out.end(), part.begin(), part.end()); }

Moduli repeat(const Moduli& factors, std::size_t times) {
  Moduli out;
  out.reserve(factors.size() * times);
  for (std::size_t i = 0; i < times; ++i) append(out, factors);
  return out;
}

int write_slot(const AbelianPresentation& p, const Vec& v, std::size_t offset) {
  return p.element(Vec(v.begin() + offset, v.begin() + offset + p.rank()));
}

void read_slot(const AbelianPresentation& p, int element, Vec& v, std::size_t offset) {
  const Vec& c = p.coords(element);
  std::copy(c.begin(), c.end(), v.begin() + offset);
}

}  // namespace

FactorSystem FactorSystem::zero(int nA, int nB, int nK, int nL) {
  return FactorSystem{nA,          nB,          nK,      nL,
                      IndexMap(nA * nA, 0), IndexMap(nB * nB, 0), IndexMap(nA * nB, 0),
                      IndexMap(nA, 0)};
}

bool FactorSystem::is_normalized() const {
  for (int a = 0; a < nA; ++a)
    if (t1(0, a) != 0 || t1(a, 0) != 0 || r(a, 0) != 0) return false;
  for (int b = 0; b < nB; ++b)
    if (t2(0, b) != 0 || t2(b, 0) != 0 || r(0, b) != 0) return false;
  return x(0) == 0;
}

IndexMap delta1_sigma(const IndexMap& chi, const RRBModule& m) {
  const RRBGroup& A = m.quotient();
  const int nA = m.nA();
  IndexMap out(nA * nA);
  for (int a1 = 0; a1 < nA; ++a1)
    for (int a2 = 0; a2 < nA; ++a2) {
      const int circ = A.H().mul(a1, A.act(A.op(a1), a2));
      out[a1 * nA + a2] =
          m.addL(m.subL(chi[a2], chi[circ]), m.sigma(A.op(a2), chi[a1]));
    }
  return out;
}

namespace {

template <class Visit>
void visit_cocycle(const RRBModule& m, const FactorSystem& fs, Visit&& visit) {
  const RRBGroup& A = m.quotient();
  const FiniteGroup &GA = A.H(), &GB = A.G();
  const int nA = m.nA(), nB = m.nB();

  // 1: tau1(a2,a3) + tau1(a1,a2a3) - tau1(a1a2,a3) - mu_{a3} tau1(a1,a2)
  for (int a1 = 0; a1 < nA; ++a1)
    for (int a2 = 0; a2 < nA; ++a2)
      for (int a3 = 0; a3 < nA; ++a3) {
        const int lhs = m.addK(fs.t1(a2, a3), fs.t1(a1, GA.mul(a2, a3)));
        const int rhs = m.addK(fs.t1(GA.mul(a1, a2), a3), m.mu(a3, fs.t1(a1, a2)));
        if (!visit(1, Tuple{a1, a2, a3}, m.subK(lhs, rhs), false)) return;
      }
  // 2: the same for tau2 and sigma
  for (int b1 = 0; b1 < nB; ++b1)
    for (int b2 = 0; b2 < nB; ++b2)
      for (int b3 = 0; b3 < nB; ++b3) {
        const int lhs = m.addL(fs.t2(b2, b3), fs.t2(b1, GB.mul(b2, b3)));
        const int rhs = m.addL(fs.t2(GB.mul(b1, b2), b3), m.sigma(b3, fs.t2(b1, b2)));
        if (!visit(2, Tuple{b1, b2, b3}, m.subL(lhs, rhs), true)) return;
      }
  // 3: rho(beta_{b2} a, b1) + nu_{b1} rho(a, b2)
  //    - rho(a, b1 b2) - nu_{b1 b2} f(tau2(b1, b2), a)
  for (int a = 0; a < nA; ++a)
    for (int b1 = 0; b1 < nB; ++b1)
      for (int b2 = 0; b2 < nB; ++b2) {
        const int b12 = GB.mul(b1, b2);
        const int lhs = m.addK(fs.r(A.act(b2, a), b1), m.nu(b1, fs.r(a, b2)));
        const int rhs = m.addK(fs.r(a, b12), m.nu(b12, m.f(fs.t2(b1, b2), a)));
        if (!visit(3, Tuple{a, b1, b2}, m.subK(lhs, rhs), false)) return;
      }
  // 4: rho(a1 a2, b) + nu_b tau1(a1, a2)
  //    - mu_{beta_b a2} rho(a1, b) - rho(a2, b) - tau1(beta_b a1, beta_b a2)
  for (int a1 = 0; a1 < nA; ++a1)
    for (int a2 = 0; a2 < nA; ++a2)
      for (int b = 0; b < nB; ++b) {
        const int lhs = m.addK(fs.r(GA.mul(a1, a2), b), m.nu(b, fs.t1(a1, a2)));
        const int rhs = m.addK(m.addK(m.mu(A.act(b, a2), fs.r(a1, b)), fs.r(a2, b)),
                               fs.t1(A.act(b, a1), A.act(b, a2)));
        if (!visit(4, Tuple{a1, a2, b}, m.subK(lhs, rhs), false)) return;
      }
  // 5: tau2(T a1, T a2) + delta(chi)(a1, a2)
  //    - S nu^-1_{T(a1 ∘ a2)}(rho(a2, T a1) + tau1(a1, beta_{T a1} a2) + nu_{T a1} f(chi(a1), a2))
  const IndexMap dchi = delta1_sigma(fs.chi, m);
  for (int a1 = 0; a1 < nA; ++a1)
    for (int a2 = 0; a2 < nA; ++a2) {
      const int t1 = A.op(a1), t2 = A.op(a2);
      const int moved = A.act(t1, a2);
      const int tc = A.op(GA.mul(a1, moved));
      const int inner = m.addK(m.addK(fs.r(a2, t1), fs.t1(a1, moved)),
                               m.nu(t1, m.f(fs.x(a1), a2)));
      const int lhs = m.addL(fs.t2(t1, t2), dchi[a1 * nA + a2]);
      const int rhs = m.S(m.nu_inv(tc, inner));
      if (!visit(5, Tuple{a1, a2}, m.subL(lhs, rhs), true)) return;
    }
}

template <class Visit>
void visit_derivation(const RRBModule& m, const Cochain1& k, Visit&& visit) {
  const RRBGroup& A = m.quotient();
  const int nA = m.nA(), nB = m.nB();
  const IndexMap &k1 = k.kappa1, &k2 = k.kappa2;
  // 1: kappa1(a1 a2) - kappa1(a2) - mu_{a2} kappa1(a1)
  for (int a1 = 0; a1 < nA; ++a1)
    for (int a2 = 0; a2 < nA; ++a2) {
      const int v = m.subK(m.subK(k1[A.H().mul(a1, a2)], k1[a2]), m.mu(a2, k1[a1]));
      if (!visit(1, Tuple{a1, a2}, v, false)) return;
    }
  // 2: kappa2(b1 b2) - kappa2(b2) - sigma_{b2} kappa2(b1)
  for (int b1 = 0; b1 < nB; ++b1)
    for (int b2 = 0; b2 < nB; ++b2) {
      const int v = m.subL(m.subL(k2[A.G().mul(b1, b2)], k2[b2]), m.sigma(b2, k2[b1]));
      if (!visit(2, Tuple{b1, b2}, v, true)) return;
    }
  // 3: kappa1(beta_b a) - nu_b(f(kappa2(b), a) + kappa1(a))
  for (int a = 0; a < nA; ++a)
    for (int b = 0; b < nB; ++b) {
      const int v = m.subK(k1[A.act(b, a)], m.nu(b, m.addK(m.f(k2[b], a), k1[a])));
      if (!visit(3, Tuple{a, b}, v, false)) return;
    }
  // 4: kappa2(T a) - S nu^-1_{T a} kappa1(a)
  for (int a = 0; a < nA; ++a) {
    const int t = A.op(a);
    const int v = m.subL(k2[t], m.S(m.nu_inv(t, k1[a])));
    if (!visit(4, Tuple{a}, v, true)) return;
  }
}

}  // namespace

std::optional<Violation> first_cocycle_violation(const RRBModule& m, const FactorSystem& fs) {
  std::optional<Violation> out;
  visit_cocycle(m, fs, [&](int condition, Tuple tuple, int value, bool) {
    if (value == 0) return true;
    out = Violation{condition, std::vector<int>(tuple)};
    return false;
  });
  return out;
}

std::optional<Violation> first_derivation_violation(const RRBModule& m, const Cochain1& kappa) {
  std::optional<Violation> out;
  visit_derivation(m, kappa, [&](int condition, Tuple tuple, int value, bool) {
    if (value == 0) return true;
    out = Violation{condition, std::vector<int>(tuple)};
    return false;
  });
  return out;
}

Vec CochainComplex::cocycle_defects(const FactorSystem& fs) const {
  Vec out;
  visit_cocycle(m_, fs, [&](int, Tuple, int value, bool in_L) {
    append(out, in_L ? m_.L_coords().coords(value) : m_.K_coords().coords(value));
    return true;
  });
  return out;
}

Vec CochainComplex::derivation_defects(const Cochain1& kappa) const {
  Vec out;
  visit_derivation(m_, kappa, [&](int, Tuple, int value, bool in_L) {
    append(out, in_L ? m_.L_coords().coords(value) : m_.K_coords().coords(value));
    return true;
  });
  return out;
}

CochainComplex::CochainComplex(RRBModule m) : m_(std::move(m)) {
  const RRBGroup& A = m_.quotient();
  for (int a1 = 0; a1 < m_.nA(); ++a1)
    for (int a2 = 0; a2 < m_.nA(); ++a2)
      ensure(A.op(A.H().mul(a1, A.act(A.op(a1), a2))) == A.G().mul(A.op(a1), A.op(a2)),
             "T is not a homomorphism for the descended operation");

  const Moduli& fK = m_.K_coords().factors();
  const Moduli& fL = m_.L_coords().factors();
  rK_ = fK.size();
  rL_ = fL.size();
  const std::size_t pa = m_.nA() - 1, pb = m_.nB() - 1;

  c1_ = repeat(fK, pa);
  off_kappa2_ = c1_.size();
  append(c1_, repeat(fL, pb));

  c2_ = repeat(fK, pa * pa);
  off_tau2_ = c2_.size();
  append(c2_, repeat(fL, pb * pb));
  off_rho_ = c2_.size();
  append(c2_, repeat(fK, pa * pb));
  off_chi_ = c2_.size();
  append(c2_, repeat(fL, pa));

  Moduli y_cocycle;
  std::vector<int> y_conditions;
  visit_cocycle(m_, zero(), [&](int condition, Tuple, int, bool in_L) {
    const Moduli& f = in_L ? fL : fK;
    append(y_cocycle, f);
    y_conditions.insert(y_conditions.end(), f.size(), condition);
    return true;
  });
  Moduli y_derivation;
  visit_derivation(m_, cochain1(Vec(c1_.size(), 0)), [&](int, Tuple, int, bool in_L) {
    append(y_derivation, in_L ? fL : fK);
    return true;
  });

  auto eval_delta = [&](const Vec& v) { return to_vec(coboundary(cochain1(v))); };
  auto eval_cocycle = [&](const Vec& v) { return cocycle_defects(factor_system(v)); };
  auto eval_derivation = [&](const Vec& v) { return derivation_defects(cochain1(v)); };

  delta_ = linearize(c1_, c2_, eval_delta);
  audit_linearity(delta_, eval_delta, 1);
  const FinAbHom full_cocycle = linearize(c2_, y_cocycle, eval_cocycle);
  audit_linearity(full_cocycle, eval_cocycle, 2);
  const FinAbHom full_derivation = linearize(c1_, y_derivation, eval_derivation);
  audit_linearity(full_derivation, eval_derivation, 3);

  y_cocycle_ = y_cocycle;
  y_derivation_ = y_derivation;
  PrunedMap pc = prune_rows(full_cocycle);
  cocycle_ = std::move(pc.map);
  for (std::size_t i : pc.kept) cocycle_rows_.push_back(y_conditions[i]);
  derivation_ = prune_rows(full_derivation).map;

  z2_ = HomDecomposition(cocycle_).kernel();
  z1_ = HomDecomposition(derivation_).kernel();
  delta_decomp_.emplace(delta_);
  b2_ = delta_decomp_->image();
  ensure(z2_.contains(b2_), "B2 is not contained in Z2");
  h2_ = Subquotient(z2_, b2_);
}

FactorSystem CochainComplex::zero() const {
  return FactorSystem::zero(m_.nA(), m_.nB(), m_.nK(), m_.nL());
}

Vec CochainComplex::to_vec(const FactorSystem& fs) const {
  if (fs.nA != m_.nA() || fs.nB != m_.nB() || fs.nK != m_.nK() || fs.nL != m_.nL())
    fail(ErrorKind::LengthMismatch, {fs.nA, fs.nB, fs.nK, fs.nL}, "factor system shape");
  if (static_cast<int>(fs.tau1.size()) != fs.nA * fs.nA ||
      static_cast<int>(fs.tau2.size()) != fs.nB * fs.nB ||
      static_cast<int>(fs.rho.size()) != fs.nA * fs.nB ||
      static_cast<int>(fs.chi.size()) != fs.nA)
    fail(ErrorKind::LengthMismatch, {}, "factor system tables");
  if (!fs.is_normalized()) fail(ErrorKind::CochainNotNormalized, {}, "factor system");
  const AbelianPresentation &pK = m_.K_coords(), &pL = m_.L_coords();
  const int nA = m_.nA(), nB = m_.nB();
  Vec v(c2_.size(), 0);
  std::size_t pos = 0;
  for (int a1 = 1; a1 < nA; ++a1)
    for (int a2 = 1; a2 < nA; ++a2, pos += rK_) read_slot(pK, fs.t1(a1, a2), v, pos);
  for (int b1 = 1; b1 < nB; ++b1)
    for (int b2 = 1; b2 < nB; ++b2, pos += rL_) read_slot(pL, fs.t2(b1, b2), v, pos);
  for (int a = 1; a < nA; ++a)
    for (int b = 1; b < nB; ++b, pos += rK_) read_slot(pK, fs.r(a, b), v, pos);
  for (int a = 1; a < nA; ++a, pos += rL_) read_slot(pL, fs.x(a), v, pos);
  return v;
}

FactorSystem CochainComplex::factor_system(const Vec& v) const {
  ensure(v.size() == c2_.size(), "cochain length");
  const AbelianPresentation &pK = m_.K_coords(), &pL = m_.L_coords();
  const int nA = m_.nA(), nB = m_.nB();
  FactorSystem fs = zero();
  std::size_t pos = 0;
  for (int a1 = 1; a1 < nA; ++a1)
    for (int a2 = 1; a2 < nA; ++a2, pos += rK_) fs.tau1[a1 * nA + a2] = write_slot(pK, v, pos);
  for (int b1 = 1; b1 < nB; ++b1)
    for (int b2 = 1; b2 < nB; ++b2, pos += rL_) fs.tau2[b1 * nB + b2] = write_slot(pL, v, pos);
  for (int a = 1; a < nA; ++a)
    for (int b = 1; b < nB; ++b, pos += rK_) fs.rho[a * nB + b] = write_slot(pK, v, pos);
  for (int a = 1; a < nA; ++a, pos += rL_) fs.chi[a] = write_slot(pL, v, pos);
  return fs;
}

Vec CochainComplex::to_vec(const Cochain1& kappa) const {
  if (static_cast<int>(kappa.kappa1.size()) != m_.nA() ||
      static_cast<int>(kappa.kappa2.size()) != m_.nB())
    fail(ErrorKind::LengthMismatch, {}, "1-cochain shape");
  if (kappa.kappa1[0] != 0 || kappa.kappa2[0] != 0)
    fail(ErrorKind::CochainNotNormalized, {}, "1-cochain");
  Vec v(c1_.size(), 0);
  std::size_t pos = 0;
  for (int a = 1; a < m_.nA(); ++a, pos += rK_) read_slot(m_.K_coords(), kappa.kappa1[a], v, pos);
  for (int b = 1; b < m_.nB(); ++b, pos += rL_) read_slot(m_.L_coords(), kappa.kappa2[b], v, pos);
  return v;
}

Cochain1 CochainComplex::cochain1(const Vec& v) const {
  ensure(v.size() == c1_.size(), "1-cochain length");
  Cochain1 k{IndexMap(m_.nA(), 0), IndexMap(m_.nB(), 0)};
  std::size_t pos = 0;
  for (int a = 1; a < m_.nA(); ++a, pos += rK_) k.kappa1[a] = write_slot(m_.K_coords(), v, pos);
  for (int b = 1; b < m_.nB(); ++b, pos += rL_) k.kappa2[b] = write_slot(m_.L_coords(), v, pos);
  return k;
}

FactorSystem CochainComplex::coboundary(const Cochain1& k) const {
  const RRBModule& m = m_;
  const RRBGroup& A = m.quotient();
  const int nA = m.nA(), nB = m.nB();
  const IndexMap &k1 = k.kappa1, &k2 = k.kappa2;
  FactorSystem fs = zero();
  for (int a1 = 0; a1 < nA; ++a1)
    for (int a2 = 0; a2 < nA; ++a2)
      fs.tau1[a1 * nA + a2] =
          m.addK(m.subK(k1[a2], k1[A.H().mul(a1, a2)]), m.mu(a2, k1[a1]));
  for (int b1 = 0; b1 < nB; ++b1)
    for (int b2 = 0; b2 < nB; ++b2)
      fs.tau2[b1 * nB + b2] =
          m.addL(m.subL(k2[b2], k2[A.G().mul(b1, b2)]), m.sigma(b2, k2[b1]));
  for (int a = 0; a < nA; ++a)
    for (int b = 0; b < nB; ++b)
      fs.rho[a * nB + b] = m.subK(m.nu(b, m.addK(m.f(k2[b], a), k1[a])), k1[A.act(b, a)]);
  for (int a = 0; a < nA; ++a) {
    const int t = A.op(a);
    fs.chi[a] = m.subL(m.S(m.nu_inv(t, k1[a])), k2[t]);
  }
  return fs;
}

FactorSystem CochainComplex::add(const FactorSystem& x, const FactorSystem& y) const {
  return factor_system(add_mod(to_vec(x), to_vec(y), c2_));
}

FactorSystem CochainComplex::sub(const FactorSystem& x, const FactorSystem& y) const {
  return factor_system(sub_mod(to_vec(x), to_vec(y), c2_));
}

std::optional<Violation> CochainComplex::first_violation(const FactorSystem& fs) const {
  return first_cocycle_violation(m_, fs);
}

std::optional<Violation> CochainComplex::first_derivation_violation(const Cochain1& kappa) const {
  return rrb::first_derivation_violation(m_, kappa);
}

CohomologyClass CochainComplex::class_of(const FactorSystem& fs) const {
  const Vec v = to_vec(fs);
  if (!z2_.contains(v)) {
    const auto bad = first_violation(fs);
    ensure(bad.has_value(), "cocycle map disagrees with direct evaluation");
    std::vector<int> witness{bad->condition};
    witness.insert(witness.end(), bad->tuple.begin(), bad->tuple.end());
    fail(ErrorKind::NotACocycle, std::move(witness));
  }
  return CohomologyClass{fs, h2_.coordinates(v)};
}

CohomologyClass CochainComplex::class_from_coordinates(const Vec& coords) const {
  const Vec c = reduce_mod(coords, h2_.factors());
  return CohomologyClass{factor_system(h2_.lift(c)), c};
}

CohomologyClass CochainComplex::zero_class() const {
  return CohomologyClass{zero(), Vec(h2_.factors().size(), 0)};
}

CohomologyClass CochainComplex::add(const CohomologyClass& x, const CohomologyClass& y) const {
  return CohomologyClass{add(x.representative, y.representative),
                         add_mod(x.coordinates, y.coordinates, h2_.factors())};
}

CohomologyClass CochainComplex::sub(const CohomologyClass& x, const CohomologyClass& y) const {
  return CohomologyClass{sub(x.representative, y.representative),
                         sub_mod(x.coordinates, y.coordinates, h2_.factors())};
}

std::optional<Cochain1> CochainComplex::solve_coboundary(const FactorSystem& fs) const {
  const auto x = delta_decomp_->solve(to_vec(fs));
  if (!x) return std::nullopt;
  return cochain1(*x);
}

Moduli invariant_factors(const ModSubgroup& s) {
  return Subquotient(s, ModSubgroup(s.moduli())).factors();
}

Subquotient classical_h2_check(const FiniteGroup& A, const FiniteGroup& K,
                               const std::vector<IndexMap>& mu) {
  const AbelianPresentation pK(K);
  const int nA = A.order();
  if (static_cast<int>(mu.size()) != nA)
    fail(ErrorKind::ModuleInvalid, {0}, "mu has the wrong shape");
  for (int a = 0; a < nA; ++a)
    if (static_cast<int>(mu[a].size()) != K.order() || !is_homomorphism(mu[a], K, K) ||
        !GroupHom{K, K, mu[a]}.is_injective())
      fail(ErrorKind::ModuleInvalid, {1, a}, "mu is not an automorphism");
  for (int a1 = 0; a1 < nA; ++a1)
    for (int a2 = 0; a2 < nA; ++a2)
      if (mu[A.mul(a1, a2)] != compose_maps(mu[a2], mu[a1]))
        fail(ErrorKind::ModuleInvalid, {1, a1, a2}, "mu is not an anti-homomorphism");

  const std::size_t r = pK.rank(), p = nA - 1;
  const Moduli c1 = repeat(pK.factors(), p), c2 = repeat(pK.factors(), p * p);
  auto unary_table = [&](const Vec& v) {
    IndexMap t(nA, 0);
    std::size_t pos = 0;
    for (int a = 1; a < nA; ++a, pos += r) t[a] = write_slot(pK, v, pos);
    return t;
  };
  auto binary_table = [&](const Vec& v) {
    IndexMap t(nA * nA, 0);
    std::size_t pos = 0;
    for (int a1 = 1; a1 < nA; ++a1)
      for (int a2 = 1; a2 < nA; ++a2, pos += r) t[a1 * nA + a2] = write_slot(pK, v, pos);
    return t;
  };
  auto add = [&](int x, int y) { return K.mul(x, y); };
  auto sub = [&](int x, int y) { return K.mul(x, K.inv(y)); };

  auto eval_delta = [&](const Vec& v) {
    const IndexMap k = unary_table(v);
    Vec out(c2.size(), 0);
    std::size_t pos = 0;
    for (int a1 = 1; a1 < nA; ++a1)
      for (int a2 = 1; a2 < nA; ++a2, pos += r)
        read_slot(pK, add(sub(k[a2], k[A.mul(a1, a2)]), mu[a2][k[a1]]), out, pos);
    return out;
  };
  Moduli y;
  for (int i = 0; i < nA * nA * nA; ++i) append(y, pK.factors());
  auto eval_cocycle = [&](const Vec& v) {
    const IndexMap t = binary_table(v);
    auto at = [&](int x1, int x2) { return t[x1 * nA + x2]; };
    Vec out(y.size(), 0);
    std::size_t pos = 0;
    for (int a1 = 0; a1 < nA; ++a1)
      for (int a2 = 0; a2 < nA; ++a2)
        for (int a3 = 0; a3 < nA; ++a3, pos += r) {
          const int lhs = add(at(a2, a3), at(a1, A.mul(a2, a3)));
          const int rhs = add(at(A.mul(a1, a2), a3), mu[a3][at(a1, a2)]);
          read_slot(pK, sub(lhs, rhs), out, pos);
        }
    return out;
  };

  const FinAbHom delta = linearize(c1, c2, eval_delta);
  audit_linearity(delta, eval_delta, 4);
  const FinAbHom cocycle = linearize(c2, y, eval_cocycle);
  audit_linearity(cocycle, eval_cocycle, 5);
  const ModSubgroup z2 = HomDecomposition(prune_rows(cocycle).map).kernel();
  const ModSubgroup b2 = HomDecomposition(delta).image();
  ensure(z2.contains(b2), "classical B2 is not contained in Z2");
  return Subquotient(z2, b2);
}

}  // namespace rrb
