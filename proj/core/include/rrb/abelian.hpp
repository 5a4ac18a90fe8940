#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rrb/finite_group.hpp"
#include "rrb/smith.hpp"

namespace rrb {

/// A vector in ⊕ Z/d_i, entries kept in [0, d_i).
using Vec = std::vector<std::int64_t>;
using Moduli = std::vector<std::int64_t>;

Vec reduce_mod(Vec v, const Moduli& d);
Vec add_mod(const Vec& x, const Vec& y, const Moduli& d);
Vec sub_mod(const Vec& x, const Vec& y, const Moduli& d);
Vec neg_mod(const Vec& x, const Moduli& d);
Vec scale_mod(const Vec& x, std::int64_t k, const Moduli& d);
bool is_zero(const Vec& x);
BigInt product_of(const Moduli& d);

/// A subgroup of ⊕ Z/d_i kept in Howell-style echelon form.
///
/// Slot i holds either nothing or a row whose first nonzero entry sits at
/// column i with value h_i dividing d_i. Every row r with pivot h_i has its
/// multiple (d_i / h_i) * r spanned by later rows, so reduction against the
/// rows yields a canonical coset representative.
class ModSubgroup {
 public:
  ModSubgroup() = default;
  explicit ModSubgroup(Moduli moduli);
  static ModSubgroup whole(const Moduli& moduli);

  const Moduli& moduli() const noexcept { return d_; }
  std::size_t dim() const noexcept { return d_.size(); }

  void insert(Vec v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  bool contains(const ModSubgroup& other) const;
  BigInt order() const;

  const std::vector<std::optional<Vec>>& rows() const noexcept { return rows_; }
  std::vector<Vec> generators() const;
  /// Every element, in the order of the echelon coefficients. Throws
  /// OrderTooLarge when the subgroup has more than `limit` elements.
  std::vector<Vec> elements(std::int64_t limit = 1 << 20) const;

  friend bool operator==(const ModSubgroup& x, const ModSubgroup& y);

 private:
  Moduli d_;
  std::vector<std::optional<Vec>> rows_;
};

/// The quotient top / bottom of two nested subgroups of one ⊕ Z/d_i, with
/// invariant-factor coordinates and explicit lifts.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(ModSubgroup top, ModSubgroup bottom);

  /// Invariant factors, each at least 2, in divisibility order.
  const Moduli& factors() const noexcept { return factors_; }
  BigInt order() const { return product_of(factors_); }
  const ModSubgroup& top() const noexcept { return top_; }
  const ModSubgroup& bottom() const noexcept { return bottom_; }

  /// Coordinates of the class of `element`, which must lie in top.
  Vec coordinates(const Vec& element) const;
  /// An element of top whose class has the given coordinates.
  Vec lift(const Vec& coords) const;

 private:
  std::vector<BigInt> lattice_coefficients(const Vec& element) const;

  ModSubgroup top_;
  ModSubgroup bottom_;
  BigMatrix top_basis_;
  std::vector<std::size_t> kept_;
  Moduli factors_;
  BigMatrix V_, V_inv_;
};

/// Homomorphism ⊕ Z/d_j -> ⊕ Z/e_i given by the images of the basis vectors.
struct FinAbHom {
  Moduli domain;
  Moduli codomain;
  std::vector<Vec> columns;

  Vec apply(const Vec& x) const;
  /// d_j * columns[j] = 0 for every j.
  bool respects_orders() const;
};

/// Kernel, image and cokernel of a FinAbHom, plus preimage search.
///
/// Built from the graph {(h(x), x)} as one echelon subgroup of Y ⊕ X.
class HomDecomposition {
 public:
  explicit HomDecomposition(const FinAbHom& h);

  const ModSubgroup& kernel() const noexcept { return kernel_; }
  const ModSubgroup& image() const noexcept { return image_; }
  Subquotient kernel_presentation() const;
  Subquotient image_presentation() const;
  Subquotient cokernel() const;
  /// Some x with h(x) = y, if y lies in the image.
  std::optional<Vec> solve(const Vec& y) const;

 private:
  Moduli dom_, cod_;
  ModSubgroup graph_;
  ModSubgroup kernel_;
  ModSubgroup image_;
};

HomDecomposition hom_kernel_image_quotient(const FinAbHom& h);

/// Invariant-factor coordinates for an abelian FiniteGroup.
class AbelianPresentation {
 public:
  AbelianPresentation() = default;
  explicit AbelianPresentation(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return group_; }
  const Moduli& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  const Vec& coords(int element) const { return coords_[element]; }
  int element(const Vec& coords) const;
  /// The element with coordinate vector e_i.
  int basis_element(std::size_t i) const;

 private:
  FiniteGroup group_;
  Moduli factors_;
  std::vector<Vec> coords_;
  std::map<Vec, int> index_;
};

/// Throws NotAbelian.
AbelianPresentation abelian_presentation(const FiniteGroup& g);

/// The matrix of a homomorphism between abelian groups in coordinates.
FinAbHom to_fin_ab_hom(const IndexMap& map, const AbelianPresentation& dom,
                       const AbelianPresentation& cod);

}  // namespace rrb
