#include "rrb/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rrb/error.hpp"

namespace rrb {

FiniteGroup::FiniteGroup()
    : table_(std::make_shared<const std::vector<int>>(1, 0)),
      inverse_(std::make_shared<const std::vector<int>>(1, 0)),
      name_(std::make_shared<const std::string>("1")) {}

int FiniteGroup::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int result = 0;
  int base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

Table FiniteGroup::table() const {
  Table t(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t[i][j] = mul(i, j);
  return t;
}

bool operator==(const FiniteGroup& x, const FiniteGroup& y) {
  return x.n_ == y.n_ && (x.table_ == y.table_ || *x.table_ == *y.table_);
}

FiniteGroup validate_group(const Table& table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorKind::NotClosed, {}, "empty table");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(ErrorKind::LengthMismatch, {i}, "table is not square");
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n) fail(ErrorKind::NotClosed, {i, j});
      flat[i * n + j] = v;
    }
  }
  auto at = [&](int i, int j) { return flat[i * n + j]; };
  for (int j = 0; j < n; ++j)
    if (at(0, j) != j || at(j, 0) != j) fail(ErrorKind::NoIdentityAtZero, {j});
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (at(i, j) == 0 && at(j, i) == 0) {
        inverse[i] = j;
        break;
      }
    }
    if (inverse[i] < 0) fail(ErrorKind::NoInverse, {i});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(at(i, j), k) != at(i, at(j, k))) fail(ErrorKind::NotAssociative, {i, j, k});

  FiniteGroup g;
  g.n_ = n;
  g.abelian_ = true;
  for (int i = 0; i < n && g.abelian_; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) {
        g.abelian_ = false;
        break;
      }
  g.table_ = std::make_shared<const std::vector<int>>(std::move(flat));
  g.inverse_ = std::make_shared<const std::vector<int>>(std::move(inverse));
  g.name_ = std::make_shared<const std::string>(std::move(name));
  return g;
}

FiniteGroup cyclic_group(int n) {
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return validate_group(t, "Z" + std::to_string(n));
}

FiniteGroup trivial_group() { return FiniteGroup(); }

FiniteGroup permutation_group(int degree, const std::vector<IndexMap>& generators,
                              std::string name) {
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree) fail(ErrorKind::LengthMismatch);
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_map(degree)) fail(ErrorKind::ParseError, {}, "generator is not a permutation");
  }
  std::set<IndexMap> elements{identity_map(degree)};
  std::vector<IndexMap> frontier{identity_map(degree)};
  while (!frontier.empty()) {
    std::vector<IndexMap> next;
    for (const auto& p : frontier)
      for (const auto& s : generators) {
        IndexMap q = compose_maps(p, s);
        if (elements.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  std::vector<IndexMap> list(elements.begin(), elements.end());
  std::map<IndexMap, int> index;
  for (int i = 0; i < static_cast<int>(list.size()); ++i) index[list[i]] = i;
  const int n = static_cast<int>(list.size());
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = index.at(compose_maps(list[i], list[j]));
  return validate_group(t, std::move(name));
}

FiniteGroup symmetric_group(int degree) {
  std::vector<IndexMap> gens;
  if (degree >= 2) {
    IndexMap swap = identity_map(degree);
    std::swap(swap[0], swap[1]);
    IndexMap cycle(degree);
    for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    gens = {swap, cycle};
  }
  return permutation_group(degree, gens, "S" + std::to_string(degree));
}

bool is_homomorphism(const IndexMap& map, const FiniteGroup& domain,
                     const FiniteGroup& codomain) {
  if (static_cast<int>(map.size()) != domain.order())
    fail(ErrorKind::LengthMismatch, {static_cast<int>(map.size()), domain.order()});
  for (int v : map)
    if (v < 0 || v >= codomain.order()) return false;
  for (int x = 0; x < domain.order(); ++x)
    for (int y = 0; y < domain.order(); ++y)
      if (map[domain.mul(x, y)] != codomain.mul(map[x], map[y])) return false;
  return true;
}

bool GroupHom::is_injective() const {
  std::vector<char> seen(codomain.order(), 0);
  for (int v : image) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<char> seen(codomain.order(), 0);
  for (int v : image) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

GroupHom make_hom(const FiniteGroup& domain, const FiniteGroup& codomain, IndexMap image) {
  if (static_cast<int>(image.size()) != domain.order())
    fail(ErrorKind::LengthMismatch, {static_cast<int>(image.size()), domain.order()});
  for (int x = 0; x < domain.order(); ++x)
    if (image[x] < 0 || image[x] >= codomain.order()) fail(ErrorKind::NotHomomorphism, {x});
  for (int x = 0; x < domain.order(); ++x)
    for (int y = 0; y < domain.order(); ++y)
      if (image[domain.mul(x, y)] != codomain.mul(image[x], image[y]))
        fail(ErrorKind::NotHomomorphism, {x, y});
  return GroupHom{domain, codomain, std::move(image)};
}

GroupHom identity_hom(const FiniteGroup& g) { return GroupHom{g, g, identity_map(g.order())}; }

GroupHom zero_hom(const FiniteGroup& domain, const FiniteGroup& codomain) {
  return GroupHom{domain, codomain, IndexMap(domain.order(), 0)};
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  return GroupHom{inner.domain, outer.codomain, compose_maps(outer.image, inner.image)};
}

GroupHom inverse(const GroupHom& iso) {
  if (!iso.is_injective() || !iso.is_surjective())
    fail(ErrorKind::NotInjective, {}, "inverse of a non-bijective map");
  return GroupHom{iso.codomain, iso.domain, invert_map(iso.image)};
}

IndexMap compose_maps(const IndexMap& outer, const IndexMap& inner) {
  IndexMap out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

IndexMap invert_map(const IndexMap& bijection) {
  IndexMap out(bijection.size());
  for (std::size_t i = 0; i < bijection.size(); ++i) out[bijection[i]] = static_cast<int>(i);
  return out;
}

IndexMap identity_map(int n) {
  IndexMap out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

namespace {

std::vector<GroupHom> automorphisms_by_bijection(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<GroupHom> out;
  IndexMap perm = identity_map(n);
  do {
    if (is_homomorphism(perm, g, g)) out.push_back(GroupHom{g, g, perm});
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

// Extends the partial map along Cayley-graph edges of the current generators;
// a map consistent on every edge x -> x*s is a homomorphism on the subgroup.
bool extend_along_generators(const FiniteGroup& from, const FiniteGroup& to,
                             const std::vector<int>& gens, const std::vector<int>& images,
                             IndexMap& map, std::vector<char>& used) {
  std::vector<int> queue;
  for (int x = 0; x < from.order(); ++x)
    if (map[x] >= 0) queue.push_back(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (std::size_t j = 0; j < images.size(); ++j) {
      const int y = from.mul(x, gens[j]);
      const int fy = to.mul(map[x], images[j]);
      if (map[y] >= 0) {
        if (map[y] != fy) return false;
      } else {
        if (used[fy]) return false;
        map[y] = fy;
        used[fy] = 1;
        queue.push_back(y);
      }
    }
  }
  return true;
}

// Injective homomorphisms from -> to, found by assigning generator images
// of matching element order. Stops after the first hit when `first_only`.
void backtrack_embeddings(const FiniteGroup& from, const FiniteGroup& to,
                          const std::vector<int>& gens, std::vector<int>& images,
                          const IndexMap& map, const std::vector<char>& used,
                          bool first_only, std::vector<IndexMap>& out) {
  if (first_only && !out.empty()) return;
  const std::size_t depth = images.size();
  if (depth == gens.size()) {
    out.push_back(map);
    return;
  }
  const int target_order = from.element_order(gens[depth]);
  for (int y = 1; y < to.order(); ++y) {
    if (used[y] || to.element_order(y) != target_order) continue;
    IndexMap next_map = map;
    std::vector<char> next_used = used;
    images.push_back(y);
    if (extend_along_generators(from, to, gens, images, next_map, next_used))
      backtrack_embeddings(from, to, gens, images, next_map, next_used, first_only, out);
    images.pop_back();
    if (first_only && !out.empty()) return;
  }
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> span{0};
  while (static_cast<int>(span.size()) < g.order()) {
    int pick = 0;
    for (int x = 1; x < g.order(); ++x)
      if (!std::binary_search(span.begin(), span.end(), x)) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    span = subgroup_closure(g, gens);
  }
  return gens;
}

std::vector<IndexMap> embeddings(const FiniteGroup& from, const FiniteGroup& to,
                                 bool first_only) {
  const std::vector<int> gens = greedy_generators(from);
  IndexMap map(from.order(), -1);
  std::vector<char> used(to.order(), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<int> images;
  std::vector<IndexMap> out;
  backtrack_embeddings(from, to, gens, images, map, used, first_only, out);
  return out;
}

}  // namespace

std::vector<GroupHom> automorphism_group(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order) fail(ErrorKind::OrderTooLarge, {g.order(), max_order});
  std::vector<GroupHom> out;
  if (g.order() <= 8) {
    out = automorphisms_by_bijection(g);
  } else {
    for (auto& image : embeddings(g, g, false)) out.push_back(GroupHom{g, g, std::move(image)});
  }
  std::sort(out.begin(), out.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.image < b.image; });
  return out;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> queue{0};
  in[0] = 1;
  for (int x : generators) {
    if (x < 0 || x >= g.order()) fail(ErrorKind::NotClosed, {x});
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int s : generators) {
      const int y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<char> in(g.order(), 0);
  for (int x : elements) {
    if (x < 0 || x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (int x : elements) {
    if (!in[g.inv(x)]) return false;
    for (int y : elements)
      if (!in[g.mul(x, y)]) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& subgroup) {
  std::vector<char> in(g.order(), 0);
  for (int x : subgroup) in[x] = 1;
  for (int h = 0; h < g.order(); ++h)
    for (int k : subgroup)
      if (!in[g.mul(g.mul(h, k), g.inv(h))]) return false;
  return true;
}

std::vector<int> group_center(const FiniteGroup& g) {
  std::vector<int> out;
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

SubgroupEmbedding subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elements) {
  if (!is_subgroup(g, elements)) fail(ErrorKind::NotSubgroup);
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) local[sorted[i]] = i;
  const int n = static_cast<int>(sorted.size());
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = local[g.mul(sorted[i], sorted[j])];
  FiniteGroup sub = validate_group(t);
  return SubgroupEmbedding{sub, GroupHom{sub, g, sorted}};
}

QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
  if (!is_subgroup(g, normal_subgroup)) fail(ErrorKind::NotSubgroup);
  if (!is_normal(g, normal_subgroup)) fail(ErrorKind::NotNormal);
  std::vector<int> coset(g.order(), -1);
  IndexMap section;
  for (int x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(section.size());
    section.push_back(x);
    for (int k : normal_subgroup) coset[g.mul(x, k)] = id;
  }
  const int m = static_cast<int>(section.size());
  Table t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = coset[g.mul(section[i], section[j])];
  FiniteGroup q = validate_group(t);
  return QuotientGroup{q, GroupHom{g, q, coset}, section};
}

ProductGroup direct_product(const FiniteGroup& first, const FiniteGroup& second) {
  const int n1 = first.order();
  const int n2 = second.order();
  const int n = n1 * n2;
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[i][j] = first.mul(i / n2, j / n2) * n2 + second.mul(i % n2, j % n2);
  std::string name;
  if (!first.name().empty() && !second.name().empty()) name = first.name() + "x" + second.name();
  FiniteGroup p = validate_group(t, name);
  IndexMap inj1(n1), inj2(n2), proj1(n), proj2(n);
  for (int x = 0; x < n1; ++x) inj1[x] = x * n2;
  for (int y = 0; y < n2; ++y) inj2[y] = y;
  for (int z = 0; z < n; ++z) {
    proj1[z] = z / n2;
    proj2[z] = z % n2;
  }
  return ProductGroup{p, GroupHom{first, p, inj1}, GroupHom{second, p, inj2},
                      GroupHom{p, first, proj1}, GroupHom{p, second, proj2}};
}

std::optional<GroupHom> find_isomorphism(const FiniteGroup& x, const FiniteGroup& y) {
  if (x.order() != y.order()) return std::nullopt;
  auto found = embeddings(x, y, true);
  if (found.empty()) return std::nullopt;
  return GroupHom{x, y, std::move(found.front())};
}

}  // namespace rrb
