#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "rrb/rrb.hpp"

// Brute-force references used to check the library. None of them go through
// the cochain complex: they decide membership by building the total group or
// searching for morphisms directly.

namespace rrb::testing {

/// Every vector of ⊕ Z/d_i in lexicographic order.
std::vector<Vec> all_vectors(const Moduli& d);

/// Every map {0..n-1} -> {0..m-1} with map[0] = 0.
std::vector<IndexMap> all_normalized_maps(int n, int m);

/// True iff the tables of assemble_total form an RRB group.
bool total_is_rrb(const RRBModule& m, const FactorSystem& fs);

/// Z1, Z2 and B2 as coordinate sets.
///
/// Z2: factor systems whose total tables form an RRB group. B2: factor systems
/// extracted from the split extension along every normalized section. Z1:
/// 1-cochains whose shear (a, k) -> (a, k + kappa1(a)) is an RRB automorphism
/// of the split extension.
struct BruteCohomology {
  std::set<Vec> z1;
  std::set<Vec> z2;
  std::set<Vec> b2;
};
BruteCohomology brute_cohomology(const CochainComplex& cx);

/// An RRB morphism between the totals commuting with inclusions and
/// projections, found by searching over the images of a section.
bool brute_equivalent(const Extension& x, const Extension& y);

/// An automorphism of the total group restricting to theta on the kernel and
/// inducing psi on the quotient, found by exhaustive search.
std::optional<RRBMorphism> brute_lift(const Extension& e, const RRBMorphism& psi,
                                      const RRBMorphism& theta);

/// Every R: H -> G with R[0] = 0 satisfying the RRB axiom, by direct evaluation.
std::vector<IndexMap> brute_operators(const FiniteGroup& H, const FiniteGroup& G,
                                      const std::vector<IndexMap>& phi);

/// Seeded generator for property sweeps.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(engine_); }
  Vec vec(const Moduli& d) {
    Vec v(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      v[i] = std::uniform_int_distribution<std::int64_t>(0, d[i] - 1)(engine_);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

/// Groups of order at most 8, one per isomorphism type except order 1.
std::vector<FiniteGroup> small_groups();

/// Every RRB group (H, G, phi, R) with H, G drawn from `groups`, capped per pair.
std::vector<RRBGroup> small_rrb_groups(const std::vector<FiniteGroup>& groups,
                                       std::size_t per_pair = 64);

}  // namespace rrb::testing
