#include "rrb/abelian.hpp"

#include <deque>
#include <numeric>

#include "rrb/error.hpp"

namespace rrb {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t d) {
  x %= d;
  return x < 0 ? x + d : x;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t d) {
  return mod(a, d) * mod(b, d) % d;
}

struct Egcd {
  std::int64_t g, s, t;
};

Egcd egcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// a*x + b*y mod d; y must vanish before column `from`.
Vec combine(std::int64_t a, const Vec& x, std::int64_t b, const Vec& y, const Moduli& d,
            std::size_t from) {
  Vec out(x.size(), 0);
  for (std::size_t j = 0; j < from; ++j) out[j] = mulmod(a, x[j], d[j]);
  for (std::size_t j = from; j < x.size(); ++j)
    out[j] = mod(mulmod(mod(a, d[j]), x[j], d[j]) + mulmod(mod(b, d[j]), y[j], d[j]), d[j]);
  return out;
}

}  // namespace

Vec reduce_mod(Vec v, const Moduli& d) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod(v[i], d[i]);
  return v;
}

Vec add_mod(const Vec& x, const Vec& y, const Moduli& d) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod(x[i] + y[i], d[i]);
  return out;
}

Vec sub_mod(const Vec& x, const Vec& y, const Moduli& d) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod(x[i] - y[i], d[i]);
  return out;
}

Vec neg_mod(const Vec& x, const Moduli& d) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod(-x[i], d[i]);
  return out;
}

Vec scale_mod(const Vec& x, std::int64_t k, const Moduli& d) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mulmod(mod(k, d[i]), x[i], d[i]);
  return out;
}

bool is_zero(const Vec& x) {
  for (auto v : x)
    if (v != 0) return false;
  return true;
}

BigInt product_of(const Moduli& d) {
  BigInt p = 1;
  for (auto x : d) p *= x;
  return p;
}

// ---------------------------------------------------------------------------
// ModSubgroup

ModSubgroup::ModSubgroup(Moduli moduli) : d_(std::move(moduli)), rows_(d_.size()) {
  for (auto x : d_) ensure(x >= 1 && x < (std::int64_t{1} << 31), "modulus out of range");
}

ModSubgroup ModSubgroup::whole(const Moduli& moduli) {
  ModSubgroup s(moduli);
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] == 1) continue;
    Vec e(moduli.size(), 0);
    e[i] = 1;
    s.rows_[i] = std::move(e);
  }
  return s;
}

void ModSubgroup::insert(Vec v) {
  std::deque<Vec> work;
  work.push_back(reduce_mod(std::move(v), d_));
  while (!work.empty()) {
    Vec x = std::move(work.front());
    work.pop_front();
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (x[i] == 0) continue;
      if (!rows_[i]) {
        const Egcd e = egcd(x[i], d_[i]);
        Vec r = combine(e.s, x, 0, x, d_, i);
        r[i] = e.g;
        const std::int64_t q = x[i] / e.g;
        Vec rest = combine(1, x, -q, r, d_, i);
        work.push_back(scale_mod(r, d_[i] / e.g, d_));
        rows_[i] = std::move(r);
        x = std::move(rest);
        continue;
      }
      const Vec& row = *rows_[i];
      const std::int64_t h = row[i];
      if (x[i] % h == 0) {
        x = combine(1, x, -(x[i] / h), row, d_, i);
        continue;
      }
      const Egcd e = egcd(h, x[i]);
      Vec top = combine(e.s, row, e.t, x, d_, i);
      top[i] = e.g;
      Vec low = combine(x[i] / e.g, row, -(h / e.g), x, d_, i);
      work.push_back(scale_mod(top, d_[i] / e.g, d_));
      rows_[i] = std::move(top);
      x = std::move(low);
    }
  }
}

Vec ModSubgroup::reduce(Vec v) const {
  v = reduce_mod(std::move(v), d_);
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (v[i] == 0 || !rows_[i]) continue;
    const Vec& row = *rows_[i];
    const std::int64_t q = v[i] / row[i];
    if (q != 0) v = combine(1, v, -q, row, d_, i);
  }
  return v;
}

bool ModSubgroup::contains(const ModSubgroup& other) const {
  for (const auto& r : other.rows_)
    if (r && !contains(*r)) return false;
  return true;
}

BigInt ModSubgroup::order() const {
  BigInt p = 1;
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (rows_[i]) p *= d_[i] / (*rows_[i])[i];
  return p;
}

std::vector<Vec> ModSubgroup::elements(std::int64_t limit) const {
  if (order() > limit) fail(ErrorKind::OrderTooLarge, {}, "subgroup enumeration");
  std::vector<Vec> out{Vec(d_.size(), 0)};
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (!rows_[i]) continue;
    const std::int64_t steps = d_[i] / (*rows_[i])[i];
    const std::size_t base = out.size();
    for (std::int64_t c = 1; c < steps; ++c)
      for (std::size_t j = 0; j < base; ++j)
        out.push_back(add_mod(out[j], scale_mod(*rows_[i], c, d_), d_));
  }
  return out;
}

std::vector<Vec> ModSubgroup::generators() const {
  std::vector<Vec> out;
  for (const auto& r : rows_)
    if (r) out.push_back(*r);
  return out;
}

bool operator==(const ModSubgroup& x, const ModSubgroup& y) {
  return x.d_ == y.d_ && x.contains(y) && y.contains(x);
}

// ---------------------------------------------------------------------------
// Subquotient
//
// Both subgroups are pulled back to full-rank lattices in Z^n whose upper
// triangular bases come from the echelon rows (absent slot i contributes
// d_i e_i). With bottom = C * top, top/bottom = Z^n / rowspace(C), and the
// Smith form of C gives coordinates c -> c V mod s.

namespace {

BigMatrix lattice_basis(const ModSubgroup& s) {
  const std::size_t n = s.dim();
  BigMatrix b(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (s.rows()[i]) {
      for (std::size_t j = i; j < n; ++j) b[i][j] = (*s.rows()[i])[j];
    } else {
      b[i][i] = s.moduli()[i];
    }
  }
  return b;
}

// Solves c * basis = target exactly for an upper triangular basis.
std::vector<BigInt> triangular_solve(const BigMatrix& basis, std::vector<BigInt> target) {
  const std::size_t n = basis.size();
  std::vector<BigInt> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (target[j] == 0) continue;
    const BigInt& p = basis[j][j];
    if (target[j] % p != 0) fail(ErrorKind::InternalError, {}, "element outside lattice");
    c[j] = target[j] / p;
    for (std::size_t k = j; k < n; ++k)
      if (basis[j][k] != 0) target[k] -= c[j] * basis[j][k];
  }
  return c;
}

}  // namespace

Subquotient::Subquotient(ModSubgroup top, ModSubgroup bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  ensure(top_.moduli() == bottom_.moduli(), "subquotient moduli differ");
  ensure(top_.contains(bottom_), "subquotient bottom not inside top");
  const std::size_t n = top_.dim();
  top_basis_ = lattice_basis(top_);
  const BigMatrix bottom_basis = lattice_basis(bottom_);
  BigMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = triangular_solve(top_basis_, bottom_basis[i]);
  SmithForm snf = smith_normal_form(c, n);
  for (std::size_t i = 0; i < n; ++i) {
    ensure(snf.diagonal[i] != 0, "subquotient is infinite");
    if (snf.diagonal[i] != 1) {
      kept_.push_back(i);
      factors_.push_back(static_cast<std::int64_t>(snf.diagonal[i]));
    }
  }
  V_ = std::move(snf.V);
  V_inv_ = std::move(snf.V_inv);
}

std::vector<BigInt> Subquotient::lattice_coefficients(const Vec& element) const {
  Vec r = reduce_mod(element, top_.moduli());
  if (!top_.contains(r)) fail(ErrorKind::InternalError, {}, "element not in subquotient top");
  std::vector<BigInt> target(r.begin(), r.end());
  return triangular_solve(top_basis_, std::move(target));
}

Vec Subquotient::coordinates(const Vec& element) const {
  const std::vector<BigInt> c = lattice_coefficients(element);
  Vec out(kept_.size());
  for (std::size_t k = 0; k < kept_.size(); ++k) {
    BigInt acc = 0;
    const std::size_t col = kept_[k];
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0 && V_[i][col] != 0) acc += c[i] * V_[i][col];
    acc %= factors_[k];
    if (acc < 0) acc += factors_[k];
    out[k] = static_cast<std::int64_t>(acc);
  }
  return out;
}

Vec Subquotient::lift(const Vec& coords) const {
  ensure(coords.size() == kept_.size(), "coordinate length mismatch");
  const std::size_t n = top_.dim();
  std::vector<BigInt> c(n);
  for (std::size_t k = 0; k < kept_.size(); ++k) {
    if (coords[k] == 0) continue;
    const auto& row = V_inv_[kept_[k]];
    for (std::size_t i = 0; i < n; ++i)
      if (row[i] != 0) c[i] += coords[k] * row[i];
  }
  std::vector<BigInt> lattice = row_times(c, top_basis_);
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt v = lattice[i] % top_.moduli()[i];
    if (v < 0) v += top_.moduli()[i];
    out[i] = static_cast<std::int64_t>(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FinAbHom

Vec FinAbHom::apply(const Vec& x) const {
  Vec y(codomain.size(), 0);
  for (std::size_t j = 0; j < domain.size(); ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < codomain.size(); ++i)
      y[i] = mod(y[i] + mulmod(x[j], columns[j][i], codomain[i]), codomain[i]);
  }
  return y;
}

bool FinAbHom::respects_orders() const {
  for (std::size_t j = 0; j < domain.size(); ++j)
    if (!is_zero(scale_mod(columns[j], domain[j], codomain))) return false;
  return true;
}

HomDecomposition::HomDecomposition(const FinAbHom& h) : dom_(h.domain), cod_(h.codomain) {
  ensure(h.columns.size() == dom_.size(), "FinAbHom column count");
  ensure(h.respects_orders(), "FinAbHom does not respect generator orders");
  const std::size_t ny = cod_.size();
  Moduli both = cod_;
  both.insert(both.end(), dom_.begin(), dom_.end());
  graph_ = ModSubgroup(both);
  for (std::size_t j = 0; j < dom_.size(); ++j) {
    Vec g(both.size(), 0);
    for (std::size_t i = 0; i < ny; ++i) g[i] = h.columns[j][i];
    g[ny + j] = 1;
    graph_.insert(std::move(g));
  }
  kernel_ = ModSubgroup(dom_);
  image_ = ModSubgroup(cod_);
  for (std::size_t i = 0; i < both.size(); ++i) {
    if (!graph_.rows()[i]) continue;
    const Vec& r = *graph_.rows()[i];
    if (i < ny) {
      image_.insert(Vec(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(ny)));
    } else {
      kernel_.insert(Vec(r.begin() + static_cast<std::ptrdiff_t>(ny), r.end()));
    }
  }
}

Subquotient HomDecomposition::kernel_presentation() const {
  return Subquotient(kernel_, ModSubgroup(dom_));
}

Subquotient HomDecomposition::image_presentation() const {
  return Subquotient(image_, ModSubgroup(cod_));
}

Subquotient HomDecomposition::cokernel() const {
  return Subquotient(ModSubgroup::whole(cod_), image_);
}

std::optional<Vec> HomDecomposition::solve(const Vec& y) const {
  const std::size_t ny = cod_.size();
  const Moduli& both = graph_.moduli();
  Vec v(both.size(), 0);
  for (std::size_t i = 0; i < ny; ++i) v[i] = mod(y[i], cod_[i]);
  for (std::size_t i = 0; i < ny; ++i) {
    if (v[i] == 0) continue;
    if (!graph_.rows()[i]) return std::nullopt;
    const Vec& row = *graph_.rows()[i];
    if (v[i] % row[i] != 0) return std::nullopt;
    v = combine(1, v, -(v[i] / row[i]), row, both, i);
  }
  Vec x(dom_.size());
  for (std::size_t j = 0; j < dom_.size(); ++j) x[j] = mod(-v[ny + j], dom_[j]);
  return x;
}

HomDecomposition hom_kernel_image_quotient(const FinAbHom& h) { return HomDecomposition(h); }

// ---------------------------------------------------------------------------
// AbelianPresentation

AbelianPresentation::AbelianPresentation(const FiniteGroup& g) : group_(g) {
  if (!g.is_abelian()) fail(ErrorKind::NotAbelian);
  const int n = g.order();
  // Greedy generators with normal-form coordinates 0 <= c_i < m_i.
  std::vector<std::vector<std::int64_t>> nf(n);
  std::vector<char> in(n, 0);
  std::vector<int> span{0};
  in[0] = 1;
  std::vector<std::int64_t> m;
  std::vector<std::vector<std::int64_t>> relations;
  while (static_cast<int>(span.size()) < n) {
    int gen = 1;
    while (in[gen]) ++gen;
    std::int64_t mult = 1;
    int power = gen;
    while (!in[power]) {
      power = g.mul(power, gen);
      ++mult;
    }
    const std::size_t k = m.size();
    std::vector<std::int64_t> rel(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) rel[j] = -nf[power][j];
    rel[k] = mult;
    relations.push_back(rel);
    m.push_back(mult);
    std::vector<int> grown;
    int step = 0;
    for (std::int64_t c = 0; c < mult; ++c) {
      for (int x : span) {
        const int y = g.mul(x, step);
        if (c > 0) {
          in[y] = 1;
          nf[y] = nf[x];
          nf[y].resize(k + 1, 0);
          nf[y][k] = c;
        }
        grown.push_back(y);
      }
      step = g.mul(step, gen);
    }
    for (int x : span) nf[x].resize(k + 1, 0);
    span = std::move(grown);
  }
  const std::size_t k = m.size();
  BigMatrix rel(k, std::vector<BigInt>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < relations[i].size(); ++j) rel[i][j] = relations[i][j];
  SmithForm snf = smith_normal_form(rel, k);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i)
    if (snf.diagonal[i] != 1) {
      kept.push_back(i);
      factors_.push_back(static_cast<std::int64_t>(snf.diagonal[i]));
    }
  coords_.assign(n, Vec(kept.size(), 0));
  for (int x = 0; x < n; ++x) {
    nf[x].resize(k, 0);
    for (std::size_t t = 0; t < kept.size(); ++t) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += nf[x][i] * snf.V[i][kept[t]];
      acc %= factors_[t];
      if (acc < 0) acc += factors_[t];
      coords_[x][t] = static_cast<std::int64_t>(acc);
    }
    index_[coords_[x]] = x;
  }
  ensure(static_cast<int>(index_.size()) == n, "abelian presentation is not bijective");
}

int AbelianPresentation::element(const Vec& coords) const {
  auto it = index_.find(reduce_mod(coords, factors_));
  ensure(it != index_.end(), "coordinates outside presentation");
  return it->second;
}

int AbelianPresentation::basis_element(std::size_t i) const {
  Vec e(factors_.size(), 0);
  e[i] = 1;
  return element(e);
}

AbelianPresentation abelian_presentation(const FiniteGroup& g) { return AbelianPresentation(g); }

FinAbHom to_fin_ab_hom(const IndexMap& map, const AbelianPresentation& dom,
                       const AbelianPresentation& cod) {
  FinAbHom h{dom.factors(), cod.factors(), {}};
  for (std::size_t i = 0; i < dom.rank(); ++i) h.columns.push_back(cod.coords(map[dom.basis_element(i)]));
  return h;
}

}  // namespace rrb
