#include "rrb/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "rrb/error.hpp"

namespace rrb {

namespace {

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorKind::ParseError, {}, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_error(std::string("missing field '") + name + "'");
  return j.at(name);
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    parse_error(std::string(what) + ": " + e.what());
  }
}

IndexMap index_map(const Json& j, const char* what) { return as<IndexMap>(j, what); }
std::vector<IndexMap> index_maps(const Json& j, const char* what) {
  return as<std::vector<IndexMap>>(j, what);
}

std::string big(const BigInt& x) { return x.str(); }

Json flat(const IndexMap& table, int rows, int cols) {
  Json out = Json::array();
  for (int i = 1; i < rows; ++i)
    for (int j = 1; j < cols; ++j) out.push_back(table[i * cols + j]);
  return out;
}

IndexMap unflat(const Json& j, int rows, int cols, const char* what) {
  const IndexMap v = index_map(j, what);
  if (static_cast<int>(v.size()) != (rows - 1) * (cols - 1))
    parse_error(std::string(what) + " has the wrong length");
  IndexMap out(rows * cols, 0);
  std::size_t pos = 0;
  for (int i = 1; i < rows; ++i)
    for (int c = 1; c < cols; ++c) out[i * cols + c] = v[pos++];
  return out;
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

FiniteGroup group_from_json(const Json& j, const std::filesystem::path& base) {
  if (j.is_string()) {
    const std::filesystem::path p = base / j.get<std::string>();
    return group_from_json(load_json(p), p.parent_path());
  }
  const std::string name = j.is_object() && j.contains("name")
                               ? as<std::string>(j.at("name"), "group name")
                               : std::string();
  if (j.is_object() && j.contains("degree")) {
    const int degree = as<int>(j.at("degree"), "degree");
    const auto gens = index_maps(field(j, "generators"), "generators");
    for (const auto& g : gens) {
      if (static_cast<int>(g.size()) != degree) parse_error("generator has the wrong degree");
      std::vector<bool> hit(degree, false);
      for (int x : g) {
        if (x < 0 || x >= degree || hit[x]) parse_error("generator is not a permutation");
        hit[x] = true;
      }
    }
    return permutation_group(degree, gens, name);
  }
  const Table table = as<Table>(field(j, "table"), "table");
  if (j.contains("order") && as<int>(j.at("order"), "order") != static_cast<int>(table.size()))
    fail(ErrorKind::LengthMismatch, {as<int>(j.at("order"), "order"),
                                     static_cast<int>(table.size())},
         "order");
  return validate_group(table, name);
}

Json group_to_json(const FiniteGroup& g) {
  Json j{{"order", g.order()}, {"table", g.table()}};
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

RRBGroup rrb_from_json(const Json& j, const std::filesystem::path& base) {
  if (j.is_string()) {
    const std::filesystem::path p = base / j.get<std::string>();
    return rrb_from_json(load_json(p), p.parent_path());
  }
  const FiniteGroup H = group_from_json(field(j, "H"), base);
  const FiniteGroup G = group_from_json(field(j, "G"), base);
  std::vector<IndexMap> phi = j.contains("phi")
                                  ? index_maps(j.at("phi"), "phi")
                                  : std::vector<IndexMap>(G.order(), identity_map(H.order()));
  IndexMap R = j.contains("R") ? index_map(j.at("R"), "R") : IndexMap(H.order(), 0);
  return validate_rrb(H, G, std::move(phi), std::move(R));
}

Json rrb_to_json(const RRBGroup& r) {
  return Json{{"H", group_to_json(r.H())},
              {"G", group_to_json(r.G())},
              {"phi", r.phi()},
              {"R", r.R()}};
}

RRBMorphism morphism_from_json(const Json& j, const RRBGroup& from, const RRBGroup& to) {
  return validate_morphism(from, to, index_map(field(j, "psi"), "psi"),
                           index_map(field(j, "eta"), "eta"));
}

Json morphism_to_json(const RRBMorphism& m) {
  return Json{{"psi", m.psi.image}, {"eta", m.eta.image}};
}

Extension extension_from_json(const Json& j, const std::filesystem::path& base) {
  const RRBGroup kernel = rrb_from_json(field(j, "kernel"), base);
  const RRBGroup total = rrb_from_json(field(j, "total"), base);
  const RRBGroup quotient = rrb_from_json(field(j, "quotient"), base);
  const Json& incl = field(j, "incl");
  const Json& proj = field(j, "proj");
  return validate_extension(kernel, total, quotient, index_map(field(incl, "psi"), "incl.psi"),
                            index_map(field(incl, "eta"), "incl.eta"),
                            index_map(field(proj, "psi"), "proj.psi"),
                            index_map(field(proj, "eta"), "proj.eta"));
}

Json extension_to_json(const Extension& e) {
  return Json{{"kernel", rrb_to_json(e.kernel)},
              {"total", rrb_to_json(e.total)},
              {"quotient", rrb_to_json(e.quotient)},
              {"incl", morphism_to_json(e.incl)},
              {"proj", morphism_to_json(e.proj)}};
}

ActionQuadruple action_from_json(const Json& j) {
  return ActionQuadruple{index_maps(field(j, "nu"), "nu"), index_maps(field(j, "mu"), "mu"),
                         index_maps(field(j, "sigma"), "sigma"), index_maps(field(j, "f"), "f")};
}

Json action_to_json(const ActionQuadruple& q) {
  return Json{{"nu", q.nu}, {"mu", q.mu}, {"sigma", q.sigma}, {"f", q.f}};
}

RRBModule module_from_json(const Json& j, const std::filesystem::path& base) {
  const RRBGroup A = rrb_from_json(field(j, "A"), base);
  const RRBGroup K = rrb_from_json(field(j, "K"), base);
  if (!j.contains("action")) return trivial_module(A, K);
  return RRBModule(A, K, action_from_json(j.at("action")));
}

Json module_to_json(const RRBModule& m) {
  return Json{{"A", rrb_to_json(m.quotient())},
              {"K", rrb_to_json(m.kernel())},
              {"action", action_to_json(m.action())}};
}

FactorSystem factor_system_from_json(const Json& j) {
  const auto shape = as<std::vector<int>>(field(j, "shape"), "shape");
  if (shape.size() != 4) parse_error("shape needs four entries");
  for (int n : shape)
    if (n < 1) parse_error("shape entries must be positive");
  FactorSystem fs = FactorSystem::zero(shape[0], shape[1], shape[2], shape[3]);
  fs.tau1 = unflat(field(j, "tau1"), fs.nA, fs.nA, "tau1");
  fs.tau2 = unflat(field(j, "tau2"), fs.nB, fs.nB, "tau2");
  fs.rho = unflat(field(j, "rho"), fs.nA, fs.nB, "rho");
  const IndexMap chi = index_map(field(j, "chi"), "chi");
  if (static_cast<int>(chi.size()) != fs.nA - 1) parse_error("chi has the wrong length");
  for (int a = 1; a < fs.nA; ++a) fs.chi[a] = chi[a - 1];
  auto check = [](const IndexMap& t, int n, const char* what) {
    for (int v : t)
      if (v < 0 || v >= n) parse_error(std::string(what) + " entry out of range");
  };
  check(fs.tau1, fs.nK, "tau1");
  check(fs.tau2, fs.nL, "tau2");
  check(fs.rho, fs.nK, "rho");
  check(fs.chi, fs.nL, "chi");
  return fs;
}

Json factor_system_to_json(const FactorSystem& fs) {
  Json chi = Json::array();
  for (int a = 1; a < fs.nA; ++a) chi.push_back(fs.x(a));
  return Json{{"shape", {fs.nA, fs.nB, fs.nK, fs.nL}},
              {"tau1", flat(fs.tau1, fs.nA, fs.nA)},
              {"tau2", flat(fs.tau2, fs.nB, fs.nB)},
              {"rho", flat(fs.rho, fs.nA, fs.nB)},
              {"chi", chi}};
}

CompatiblePair pair_from_json(const Json& j, const RRBModule& m) {
  return CompatiblePair{morphism_from_json(field(j, "psi"), m.quotient(), m.quotient()),
                        morphism_from_json(field(j, "theta"), m.kernel(), m.kernel())};
}

Json pair_to_json(const CompatiblePair& c) {
  return Json{{"psi", morphism_to_json(c.psi)}, {"theta", morphism_to_json(c.theta)}};
}

Json cohomology_report(const CochainComplex& cx) {
  const Moduli h2 = cx.h2().factors();
  Json generators = Json::array();
  for (std::size_t i = 0; i < h2.size(); ++i) {
    Vec e(h2.size(), 0);
    e[i] = 1;
    generators.push_back(factor_system_to_json(cx.class_from_coordinates(e).representative));
  }
  return Json{{"z1", invariant_factors(cx.z1())},
              {"z2", invariant_factors(cx.z2())},
              {"b2", invariant_factors(cx.b2())},
              {"h2", h2},
              {"orders",
               {{"z1", big(cx.z1().order())},
                {"z2", big(cx.z2().order())},
                {"b2", big(cx.b2().order())},
                {"h2", big(cx.h2().order())}}},
              {"witnesses", {{"h2_generators", generators}}}};
}

Json wells_report_to_json(const WellsReport& report) {
  const WellsData& d = report.data;
  Json pairs = Json::array();
  for (const PairRecord& r : d.pairs) {
    Json p = pair_to_json(r.pair);
    p["in_C"] = r.in_C;
    p["omega"] = r.omega ? Json(*r.omega) : Json(nullptr);
    p["inducible"] = r.inducible;
    p["criterion"] = r.criterion;
    if (r.witness) p["witness"] = morphism_to_json(*r.witness);
    pairs.push_back(std::move(p));
  }
  Json exactness = Json::object();
  Json witnesses = Json::object();
  for (const ExactnessCheck& c : report.checks) {
    exactness[c.name] = c.ok;
    if (!c.ok) witnesses[c.name] = c.witness;
  }
  return Json{{"h2", d.h2_factors},
              {"pairs", std::move(pairs)},
              {"compatible_count", d.compatible.size()},
              {"z1_order", d.z1.size()},
              {"aut_K_H_order", d.aut_K_H.size()},
              {"aut_AK_H_order", d.aut_AK_H.size()},
              {"exactness", std::move(exactness)},
              {"exactness_witnesses", std::move(witnesses)},
              {"omega_is_homomorphism", report.omega_is_homomorphism}};
}

}  // namespace rrb
