#include "support/corpus.hpp"

#include <utility>

namespace rrb::testing {

namespace {

RRBGroup klein_trivial() {
  const FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2)).group;
  return trivial_rrb(v4, trivial_group());
}

NamedModule make(std::string name, const RRBGroup& A, const RRBGroup& K,
                 void (*adjust)(ActionQuadruple&) = nullptr) {
  ActionQuadruple q = trivial_action(A, K);
  if (adjust) adjust(q);
  return NamedModule{std::move(name), RRBModule(A, K, std::move(q))};
}

}  // namespace

IndexMap negation(int n) {
  IndexMap m(n);
  for (int x = 0; x < n; ++x) m[x] = (n - x) % n;
  return m;
}

RRBGroup cyclic_trivial_rrb(int h, int g, IndexMap R) {
  return trivial_rrb(cyclic_group(h), cyclic_group(g), std::move(R));
}

RRBModule trivial_z2_module() {
  return trivial_module(cyclic_trivial_rrb(2, 2, {0, 0}), cyclic_trivial_rrb(2, 2, {0, 0}));
}

std::vector<NamedModule> corpus_modules() {
  const RRBGroup z2_zero = cyclic_trivial_rrb(2, 2, {0, 0});
  const RRBGroup z2_id = cyclic_trivial_rrb(2, 2, {0, 1});
  const RRBGroup z3_id = cyclic_trivial_rrb(3, 3, {0, 1, 2});
  const RRBGroup z3_zero = cyclic_trivial_rrb(3, 3, {0, 0, 0});
  const RRBGroup z2_alone = cyclic_trivial_rrb(2, 1, {0, 0});
  const RRBGroup z3_alone = cyclic_trivial_rrb(3, 1, {0, 0, 0});
  const RRBGroup z3_z2_inversion =
      validate_rrb(cyclic_group(3), cyclic_group(2), {identity_map(3), negation(3)}, {0, 0, 0});

  std::vector<NamedModule> out;
  out.push_back({"z2-trivial", trivial_z2_module()});
  out.push_back(make("z2-f", z2_zero, z2_zero, [](ActionQuadruple& q) { q.f[1][1] = 1; }));
  out.push_back(make("z2-identity-ops", z2_id, z2_id));
  out.push_back(make("z3-over-z2", z3_id, z2_id));
  out.push_back(make("klein-classical", klein_trivial(), z2_alone));
  out.push_back(make("z2-z3-inversion", z2_id, z3_id, [](ActionQuadruple& q) {
    q.nu[1] = negation(3);
    q.mu[1] = negation(3);
  }));
  out.push_back(make("z2-z3-mu-sigma", z2_zero, z3_zero, [](ActionQuadruple& q) {
    q.mu[1] = negation(3);
    q.sigma[1] = negation(3);
  }));
  out.push_back(make("z3-z2-beta-nu", z3_z2_inversion, z3_alone,
                     [](ActionQuadruple& q) { q.nu[1] = negation(3); }));
  out.push_back(make("z3-z2-beta-trivial", z3_z2_inversion, z2_zero));
  out.push_back(make("klein-swap", z2_zero, klein_trivial(),
                     [](ActionQuadruple& q) { q.nu[1] = {0, 2, 1, 3}; }));
  return out;
}

std::vector<NamedExtension> corpus_extensions() {
  std::vector<NamedExtension> out;
  for (const auto& [name, m] : corpus_modules()) {
    const CochainComplex cx(m);
    out.push_back({name + "/split", build_extension(m, cx.zero())});
    if (cx.h2().factors().empty()) continue;
    Vec e(cx.h2().factors().size(), 0);
    e[0] = 1;
    FactorSystem fs = cx.class_from_coordinates(e).representative;
    Vec shift(cx.c1_moduli().size(), 0);
    if (!shift.empty()) shift[0] = 1;
    fs = cx.add(fs, cx.coboundary(cx.cochain1(shift)));
    out.push_back({name + "/nontrivial", build_extension(m, fs)});
  }
  return out;
}

std::vector<NamedExtension> handmade_extensions() {
  const RRBGroup z2_id = cyclic_trivial_rrb(2, 2, {0, 1});
  const RRBGroup z2_alone = cyclic_trivial_rrb(2, 1, {0, 0});
  const RRBGroup z3_alone = cyclic_trivial_rrb(3, 1, {0, 0, 0});
  const FiniteGroup s3 = symmetric_group(3);
  // transpositions are 1, 2 and 5 in the lexicographic numbering
  const IndexMap sign{0, 1, 1, 0, 0, 1};
  std::vector<NamedExtension> out;
  out.push_back({"z4-over-z2-classical",
                 validate_extension(z2_alone, cyclic_trivial_rrb(4, 1, {0, 0, 0, 0}), z2_alone,
                                    {0, 2}, {0}, {0, 1, 0, 1}, {0})});
  out.push_back({"z4-over-z2-identity",
                 validate_extension(z2_id, cyclic_trivial_rrb(4, 4, {0, 1, 2, 3}), z2_id, {0, 2},
                                    {0, 2}, {0, 1, 0, 1}, {0, 1, 0, 1})});
  out.push_back({"s3-over-a3", validate_extension(z3_alone, trivial_rrb(s3, trivial_group()),
                                                  z2_alone, {0, 3, 4}, {0}, sign, {0})});
  out.push_back({"s3-sign", validate_extension(z3_alone, trivial_rrb(s3, cyclic_group(2), sign),
                                               z2_id, {0, 3, 4}, {0}, sign, {0, 1})});
  return out;
}

std::vector<NamedExtension> all_extensions() {
  std::vector<NamedExtension> out = corpus_extensions();
  for (auto& e : handmade_extensions()) out.push_back(std::move(e));
  return out;
}

}  // namespace rrb::testing
