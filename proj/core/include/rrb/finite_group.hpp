#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rrb {

/// Element-index array: a map between finite groups or a permutation.
using IndexMap = std::vector<int>;
using Table = std::vector<std::vector<int>>;

inline constexpr int kDefaultMaxOrder = 64;

/// A finite group on {0..n-1} given by its Cayley table; 0 is the identity.
///
/// Values share their immutable table, so copies are cheap.
class FiniteGroup {
 public:
  /// The one-element group.
  FiniteGroup();

  int order() const noexcept { return n_; }
  int mul(int a, int b) const { return (*table_)[a * n_ + b]; }
  int inv(int a) const { return (*inverse_)[a]; }
  int pow(int a, long long e) const;
  int element_order(int a) const;
  bool is_abelian() const noexcept { return abelian_; }
  const std::string& name() const noexcept { return *name_; }
  Table table() const;

  /// Structural equality: identical Cayley tables.
  friend bool operator==(const FiniteGroup& x, const FiniteGroup& y);

 private:
  friend FiniteGroup validate_group(const Table& table, std::string name);

  int n_ = 1;
  bool abelian_ = true;
  std::shared_ptr<const std::vector<int>> table_;
  std::shared_ptr<const std::vector<int>> inverse_;
  std::shared_ptr<const std::string> name_;
};

/// Checks closure, identity at 0, associativity and inverses.
/// Throws NotClosed, NoIdentityAtZero, NotAssociative(i,j,k) or NoInverse(i).
FiniteGroup validate_group(const Table& table, std::string name = {});

FiniteGroup cyclic_group(int n);
FiniteGroup trivial_group();

/// Closure of permutation generators of {0..degree-1}. Elements are the
/// permutations sorted lexicographically, so the identity is 0; the product is
/// (p*q)[x] = p[q[x]].
FiniteGroup permutation_group(int degree, const std::vector<IndexMap>& generators,
                              std::string name = {});
FiniteGroup symmetric_group(int degree);

/// True iff map[x*y] = map[x]*map[y] for all x, y. Throws LengthMismatch.
bool is_homomorphism(const IndexMap& map, const FiniteGroup& domain,
                     const FiniteGroup& codomain);

struct GroupHom {
  FiniteGroup domain;
  FiniteGroup codomain;
  IndexMap image;

  int operator()(int x) const { return image[x]; }
  bool is_injective() const;
  bool is_surjective() const;
};

/// Validated constructor; throws LengthMismatch or NotHomomorphism(x,y).
GroupHom make_hom(const FiniteGroup& domain, const FiniteGroup& codomain, IndexMap image);
GroupHom identity_hom(const FiniteGroup& g);
GroupHom zero_hom(const FiniteGroup& domain, const FiniteGroup& codomain);
/// outer ∘ inner
GroupHom compose(const GroupHom& outer, const GroupHom& inner);
GroupHom inverse(const GroupHom& iso);

IndexMap compose_maps(const IndexMap& outer, const IndexMap& inner);
IndexMap invert_map(const IndexMap& bijection);
IndexMap identity_map(int n);

/// All automorphisms, sorted by image array. Throws OrderTooLarge.
std::vector<GroupHom> automorphism_group(const FiniteGroup& g,
                                         int max_order = kDefaultMaxOrder);

/// Smallest subgroup containing the generators, as a sorted element list.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
bool is_normal(const FiniteGroup& g, const std::vector<int>& subgroup);
std::vector<int> group_center(const FiniteGroup& g);

/// A subgroup as a group in its own right, with elements renumbered in
/// increasing order, and its embedding.
struct SubgroupEmbedding {
  FiniteGroup group;
  GroupHom embedding;
};
SubgroupEmbedding subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elements);

struct QuotientGroup {
  FiniteGroup group;
  GroupHom projection;
  IndexMap section;  ///< minimum coset representative; section[0] = 0
};

/// Cosets are numbered by their minimum representatives. Throws NotNormal.
QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup);

struct ProductGroup {
  FiniteGroup group;
  GroupHom inj1, inj2, proj1, proj2;
};

/// Pair encoding (x, y) -> x * |second| + y.
ProductGroup direct_product(const FiniteGroup& first, const FiniteGroup& second);

/// Brute-force isomorphism search for small groups.
std::optional<GroupHom> find_isomorphism(const FiniteGroup& x, const FiniteGroup& y);

}  // namespace rrb
