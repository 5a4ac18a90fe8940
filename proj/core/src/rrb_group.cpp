#include "rrb/rrb_group.hpp"

#include <algorithm>
#include <map>

#include "rrb/error.hpp"

namespace rrb {

namespace {

void check_shapes(const FiniteGroup& H, const FiniteGroup& G, const std::vector<IndexMap>& phi,
                  const IndexMap* R) {
  if (static_cast<int>(phi.size()) != G.order())
    fail(ErrorKind::LengthMismatch, {static_cast<int>(phi.size()), G.order()}, "phi");
  for (const auto& p : phi)
    if (static_cast<int>(p.size()) != H.order())
      fail(ErrorKind::LengthMismatch, {static_cast<int>(p.size()), H.order()}, "phi entry");
  if (R) {
    if (static_cast<int>(R->size()) != H.order())
      fail(ErrorKind::LengthMismatch, {static_cast<int>(R->size()), H.order()}, "R");
    for (int h = 0; h < H.order(); ++h)
      if ((*R)[h] < 0 || (*R)[h] >= G.order()) fail(ErrorKind::NotClosed, {h}, "R value");
  }
}

void check_action(const FiniteGroup& H, const FiniteGroup& G, const std::vector<IndexMap>& phi) {
  for (int g = 0; g < G.order(); ++g) {
    const IndexMap& p = phi[g];
    for (int v : p)
      if (v < 0 || v >= H.order()) fail(ErrorKind::PhiNotAutomorphism, {g});
    if (!GroupHom{H, H, p}.is_injective() || !is_homomorphism(p, H, H))
      fail(ErrorKind::PhiNotAutomorphism, {g});
  }
  for (int g1 = 0; g1 < G.order(); ++g1)
    for (int g2 = 0; g2 < G.order(); ++g2)
      if (phi[G.mul(g1, g2)] != compose_maps(phi[g1], phi[g2]))
        fail(ErrorKind::PhiNotAction, {g1, g2});
}

}  // namespace

RRBGroup::RRBGroup()
    : data_(std::make_shared<const Data>(
          Data{FiniteGroup(), FiniteGroup(), {IndexMap{0}}, IndexMap{0}})) {}

bool operator==(const RRBGroup& x, const RRBGroup& y) {
  if (x.data_ == y.data_) return true;
  return x.H() == y.H() && x.G() == y.G() && x.phi() == y.phi() && x.R() == y.R();
}

RRBGroup validate_rrb(const FiniteGroup& H, const FiniteGroup& G, std::vector<IndexMap> phi,
                      IndexMap R) {
  check_shapes(H, G, phi, &R);
  check_action(H, G, phi);
  for (int h1 = 0; h1 < H.order(); ++h1)
    for (int h2 = 0; h2 < H.order(); ++h2)
      if (G.mul(R[h1], R[h2]) != R[H.mul(h1, phi[R[h1]][h2])])
        fail(ErrorKind::RRBAxiomFails, {h1, h2});
  RRBGroup r;
  r.data_ = std::make_shared<const RRBGroup::Data>(
      RRBGroup::Data{H, G, std::move(phi), std::move(R)});
  return r;
}

RRBGroup trivial_rrb(const FiniteGroup& H, const FiniteGroup& G, IndexMap R) {
  return validate_rrb(H, G, std::vector<IndexMap>(G.order(), identity_map(H.order())),
                      std::move(R));
}

RRBGroup trivial_rrb(const FiniteGroup& H, const FiniteGroup& G) {
  return trivial_rrb(H, G, IndexMap(H.order(), 0));
}

bool is_trivial(const RRBGroup& r) {
  const IndexMap id = identity_map(r.H().order());
  return std::all_of(r.phi().begin(), r.phi().end(), [&](const IndexMap& p) { return p == id; });
}

bool is_bijective(const RRBGroup& r) {
  return r.H().order() == r.G().order() && GroupHom{r.H(), r.G(), r.R()}.is_injective();
}

FiniteGroup descended_operation(const RRBGroup& r) {
  const FiniteGroup& H = r.H();
  Table t(H.order(), std::vector<int>(H.order()));
  for (int a = 0; a < H.order(); ++a)
    for (int b = 0; b < H.order(); ++b) t[a][b] = H.mul(a, r.act(r.op(a), b));
  try {
    return validate_group(t);
  } catch (const Error& e) {
    fail(ErrorKind::InternalError, e.witness(), "descended operation is not a group");
  }
}

RRBMorphism validate_morphism(const RRBGroup& from, const RRBGroup& to, IndexMap psi,
                              IndexMap eta) {
  GroupHom p = make_hom(from.H(), to.H(), std::move(psi));
  GroupHom e = make_hom(from.G(), to.G(), std::move(eta));
  for (int h = 0; h < from.H().order(); ++h)
    if (e(from.op(h)) != to.op(p(h))) fail(ErrorKind::EtaRNeqSPsi, {h});
  for (int g = 0; g < from.G().order(); ++g)
    for (int h = 0; h < from.H().order(); ++h)
      if (p(from.act(g, h)) != to.act(e(g), p(h))) fail(ErrorKind::EquivarianceFails, {g, h});
  return RRBMorphism{from, to, std::move(p), std::move(e)};
}

RRBMorphism identity_morphism(const RRBGroup& r) {
  return RRBMorphism{r, r, identity_hom(r.H()), identity_hom(r.G())};
}

RRBMorphism compose(const RRBMorphism& outer, const RRBMorphism& inner) {
  return RRBMorphism{inner.domain, outer.codomain, compose(outer.psi, inner.psi),
                     compose(outer.eta, inner.eta)};
}

RRBMorphism inverse(const RRBMorphism& iso) {
  return RRBMorphism{iso.codomain, iso.domain, inverse(iso.psi), inverse(iso.eta)};
}

bool same_maps(const RRBMorphism& x, const RRBMorphism& y) {
  return x.psi.image == y.psi.image && x.eta.image == y.eta.image;
}

CheckResult is_subrrb(const RRBGroup& r, const std::vector<int>& K, const std::vector<int>& L) {
  if (!is_subgroup(r.H(), K)) fail(ErrorKind::NotSubgroup, {}, "K");
  if (!is_subgroup(r.G(), L)) fail(ErrorKind::NotSubgroup, {}, "L");
  std::vector<char> inK(r.H().order(), 0), inL(r.G().order(), 0);
  for (int k : K) inK[k] = 1;
  for (int l : L) inL[l] = 1;
  for (int l : L)
    for (int k : K)
      if (!inK[r.act(l, k)])
        return CheckResult::failure(1, {l, k}, "phi_l(K) not contained in K");
  for (int k : K)
    if (!inL[r.op(k)]) return CheckResult::failure(2, {k}, "R(K) not contained in L");
  return CheckResult::pass();
}

CheckResult is_ideal(const RRBGroup& r, const std::vector<int>& K, const std::vector<int>& L) {
  if (CheckResult sub = is_subrrb(r, K, L); !sub) {
    sub.witness.insert(sub.witness.begin(), sub.condition);
    sub.condition = 0;
    return sub;
  }
  const FiniteGroup& H = r.H();
  const FiniteGroup& G = r.G();
  std::vector<char> inK(H.order(), 0), inL(G.order(), 0);
  for (int k : K) inK[k] = 1;
  for (int l : L) inL[l] = 1;
  for (int h = 0; h < H.order(); ++h)
    for (int k : K)
      if (!inK[H.mul(H.mul(h, k), H.inv(h))])
        return CheckResult::failure(1, {h, k}, "K is not normal in H");
  for (int g = 0; g < G.order(); ++g)
    for (int l : L)
      if (!inL[G.mul(G.mul(g, l), G.inv(g))])
        return CheckResult::failure(1, {g, l}, "L is not normal in G");
  for (int g = 0; g < G.order(); ++g)
    for (int k : K)
      if (!inK[r.act(g, k)]) return CheckResult::failure(2, {g, k}, "phi_g(K) not contained in K");
  for (int l : L)
    for (int h = 0; h < H.order(); ++h)
      if (!inK[H.mul(r.act(l, h), H.inv(h))])
        return CheckResult::failure(3, {l, h}, "phi_l(h) h^-1 not in K");
  return CheckResult::pass();
}

RRBIdeal morphism_kernel(const RRBMorphism& m) {
  RRBIdeal out;
  for (int h = 0; h < m.domain.H().order(); ++h)
    if (m.psi(h) == 0) out.K.push_back(h);
  for (int g = 0; g < m.domain.G().order(); ++g)
    if (m.eta(g) == 0) out.L.push_back(g);
  return out;
}

RRBSubsets morphism_image(const RRBMorphism& m) {
  RRBSubsets out{m.psi.image, m.eta.image};
  for (auto* v : {&out.K, &out.L}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return out;
}

SubRRB sub_rrb(const RRBGroup& r, const std::vector<int>& K, const std::vector<int>& L) {
  if (CheckResult c = is_subrrb(r, K, L); !c) fail(ErrorKind::NotSubgroup, c.witness, c.message);
  SubgroupEmbedding hk = subgroup_as_group(r.H(), K);
  SubgroupEmbedding gl = subgroup_as_group(r.G(), L);
  std::vector<int> localK(r.H().order(), -1), localL(r.G().order(), -1);
  for (int i = 0; i < hk.group.order(); ++i) localK[hk.embedding(i)] = i;
  for (int i = 0; i < gl.group.order(); ++i) localL[gl.embedding(i)] = i;
  std::vector<IndexMap> phi(gl.group.order(), IndexMap(hk.group.order()));
  for (int l = 0; l < gl.group.order(); ++l)
    for (int k = 0; k < hk.group.order(); ++k)
      phi[l][k] = localK[r.act(gl.embedding(l), hk.embedding(k))];
  IndexMap R(hk.group.order());
  for (int k = 0; k < hk.group.order(); ++k) R[k] = localL[r.op(hk.embedding(k))];
  RRBGroup sub = validate_rrb(hk.group, gl.group, std::move(phi), std::move(R));
  return SubRRB{sub, RRBMorphism{sub, r, hk.embedding, gl.embedding}};
}

RRBQuotient quotient_rrb(const RRBGroup& r, const RRBIdeal& ideal) {
  if (CheckResult c = is_ideal(r, ideal.K, ideal.L); !c)
    fail(ErrorKind::NotIdeal, c.witness, c.message);
  QuotientGroup qh = quotient_group(r.H(), ideal.K);
  QuotientGroup qg = quotient_group(r.G(), ideal.L);
  const int nh = qh.group.order();
  const int ng = qg.group.order();
  std::vector<IndexMap> phi(ng, IndexMap(nh));
  for (int gb = 0; gb < ng; ++gb)
    for (int hb = 0; hb < nh; ++hb) phi[gb][hb] = qh.projection(r.act(qg.section[gb], qh.section[hb]));
  IndexMap R(nh);
  for (int hb = 0; hb < nh; ++hb) R[hb] = qg.projection(r.op(qh.section[hb]));
  for (int g = 0; g < r.G().order(); ++g)
    for (int h = 0; h < r.H().order(); ++h)
      if (qh.projection(r.act(g, h)) != phi[qg.projection(g)][qh.projection(h)])
        fail(ErrorKind::WellDefinednessFailure, {g, h}, "induced action");
  for (int h = 0; h < r.H().order(); ++h)
    if (qg.projection(r.op(h)) != R[qh.projection(h)])
      fail(ErrorKind::WellDefinednessFailure, {h}, "induced operator");
  RRBGroup q = validate_rrb(qh.group, qg.group, std::move(phi), std::move(R));
  RRBMorphism proj{r, q, qh.projection, qg.projection};
  return RRBQuotient{q, proj, qh.section, qg.section};
}

RRBIdeal center(const RRBGroup& r) {
  const FiniteGroup& H = r.H();
  const FiniteGroup& G = r.G();
  const IndexMap id = identity_map(H.order());
  RRBIdeal out;
  std::vector<int> zh = group_center(H);
  for (int h : zh) {
    if (r.phi()[r.op(h)] != id) continue;
    bool fixed = true;
    for (int g = 0; g < G.order() && fixed; ++g) fixed = r.act(g, h) == h;
    if (fixed) out.K.push_back(h);
  }
  for (int g = 0; g < G.order(); ++g)
    if (r.phi()[g] == id) out.L.push_back(g);
  return out;
}

RRBProduct direct_product_rrb(const RRBGroup& first, const RRBGroup& second) {
  ProductGroup ph = direct_product(first.H(), second.H());
  ProductGroup pg = direct_product(first.G(), second.G());
  const int n2h = second.H().order();
  const int n2g = second.G().order();
  std::vector<IndexMap> phi(pg.group.order(), IndexMap(ph.group.order()));
  for (int g = 0; g < pg.group.order(); ++g)
    for (int h = 0; h < ph.group.order(); ++h)
      phi[g][h] = first.act(g / n2g, h / n2h) * n2h + second.act(g % n2g, h % n2h);
  IndexMap R(ph.group.order());
  for (int h = 0; h < ph.group.order(); ++h)
    R[h] = first.op(h / n2h) * n2g + second.op(h % n2h);
  RRBGroup p = validate_rrb(ph.group, pg.group, std::move(phi), std::move(R));
  return RRBProduct{p,
                    RRBMorphism{first, p, ph.inj1, pg.inj1},
                    RRBMorphism{second, p, ph.inj2, pg.inj2},
                    RRBMorphism{p, first, ph.proj1, pg.proj1},
                    RRBMorphism{p, second, ph.proj2, pg.proj2}};
}

namespace {

// Pairs (psi, eta) from the candidate lists with eta R1 = R2 psi and
// psi phi1_g = phi2_{eta g} psi, sorted by (psi, eta).
std::vector<RRBMorphism> matching_pairs(const RRBGroup& from, const RRBGroup& to,
                                        const std::vector<GroupHom>& psis,
                                        const std::vector<GroupHom>& etas) {
  std::map<IndexMap, std::vector<std::size_t>> by_key;
  for (std::size_t j = 0; j < etas.size(); ++j)
    by_key[compose_maps(etas[j].image, from.R())].push_back(j);
  std::vector<RRBMorphism> out;
  for (const GroupHom& psi : psis) {
    auto it = by_key.find(compose_maps(to.R(), psi.image));
    if (it == by_key.end()) continue;
    for (std::size_t j : it->second) {
      const GroupHom& eta = etas[j];
      bool ok = true;
      for (int g = 0; g < from.G().order() && ok; ++g)
        for (int h = 0; h < from.H().order() && ok; ++h)
          ok = psi(from.act(g, h)) == to.act(eta(g), psi(h));
      if (ok) out.push_back(RRBMorphism{from, to, psi, eta});
    }
  }
  std::sort(out.begin(), out.end(), [](const RRBMorphism& a, const RRBMorphism& b) {
    if (a.psi.image != b.psi.image) return a.psi.image < b.psi.image;
    return a.eta.image < b.eta.image;
  });
  return out;
}

}  // namespace

std::vector<RRBMorphism> rrb_automorphism_group(const RRBGroup& r, int max_order) {
  return matching_pairs(r, r, automorphism_group(r.H(), max_order),
                        automorphism_group(r.G(), max_order));
}

std::vector<IndexMap> enumerate_rrb_operators(const FiniteGroup& H, const FiniteGroup& G,
                                              const std::vector<IndexMap>& phi,
                                              std::int64_t budget) {
  check_shapes(H, G, phi, nullptr);
  check_action(H, G, phi);
  const int n = H.order();
  std::vector<IndexMap> out;
  IndexMap R(n, 0);
  std::int64_t spent = 0;
  // The axiom for (h1, h2) is checked once, when the largest of h1, h2 and
  // h1 phi_{R(h1)}(h2) receives its value.
  auto consistent = [&](int h) {
    for (int h1 = 0; h1 <= h; ++h1)
      for (int h2 = 0; h2 <= h; ++h2) {
        const int t = H.mul(h1, phi[R[h1]][h2]);
        if (std::max({h1, h2, t}) != h) continue;
        if (++spent > budget) fail(ErrorKind::BudgetExceeded, {}, "operator enumeration");
        if (G.mul(R[h1], R[h2]) != R[t]) return false;
      }
    return true;
  };
  auto search = [&](auto&& self, int h) -> void {
    if (h == n) {
      out.push_back(R);
      return;
    }
    for (int g = 0; g < G.order(); ++g) {
      R[h] = g;
      if (consistent(h)) self(self, h + 1);
    }
    R[h] = 0;
  };
  if (consistent(0)) search(search, 1);
  return out;
}

std::vector<std::vector<IndexMap>> enumerate_actions(const FiniteGroup& H, const FiniteGroup& G,
                                                     int max_order) {
  const std::vector<GroupHom> auts = automorphism_group(H, max_order);
  std::vector<int> gen_elems;
  for (std::vector<int> span{0}; static_cast<int>(span.size()) < G.order();) {
    int pick = 1;
    while (std::binary_search(span.begin(), span.end(), pick)) ++pick;
    gen_elems.push_back(pick);
    span = subgroup_closure(G, gen_elems);
  }

  std::vector<std::vector<IndexMap>> out;
  std::vector<IndexMap> images;
  auto extend = [&](std::vector<IndexMap>& map) {
    std::vector<int> queue;
    for (int x = 0; x < G.order(); ++x)
      if (!map[x].empty()) queue.push_back(x);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (std::size_t j = 0; j < images.size(); ++j) {
        const int y = G.mul(x, gen_elems[j]);
        IndexMap fy = compose_maps(map[x], images[j]);
        if (!map[y].empty()) {
          if (map[y] != fy) return false;
        } else {
          map[y] = std::move(fy);
          queue.push_back(y);
        }
      }
    }
    return true;
  };
  auto search = [&](auto&& self, const std::vector<IndexMap>& map) -> void {
    if (images.size() == gen_elems.size()) {
      out.push_back(map);
      return;
    }
    for (const GroupHom& a : auts) {
      std::vector<IndexMap> next = map;
      images.push_back(a.image);
      if (extend(next)) self(self, next);
      images.pop_back();
    }
  };
  std::vector<IndexMap> start(G.order());
  start[0] = identity_map(H.order());
  search(search, start);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<RRBMorphism> find_rrb_isomorphism(const RRBGroup& x, const RRBGroup& y) {
  auto h_iso = find_isomorphism(x.H(), y.H());
  auto g_iso = find_isomorphism(x.G(), y.G());
  if (!h_iso || !g_iso) return std::nullopt;
  std::vector<GroupHom> psis, etas;
  for (const GroupHom& a : automorphism_group(x.H())) psis.push_back(compose(*h_iso, a));
  for (const GroupHom& a : automorphism_group(x.G())) etas.push_back(compose(*g_iso, a));
  std::vector<RRBMorphism> found = matching_pairs(x, y, psis, etas);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace rrb
