#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrb/rrb.hpp"

namespace {

using rrb::Json;
namespace fs = std::filesystem;

enum class Format { text, json };

enum Exit : int { kOk = 0, kParse = 1, kInvalid = 2, kBudget = 3 };

struct JobConfig {
  Format format = Format::text;
  int max_order = rrb::kDefaultMaxOrder;
  std::int64_t budget = rrb::kDefaultBudget;
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const JobConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.format == Format::json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

Json error_json(const rrb::Error& e) {
  Json j{{"error", e.label()}, {"kind", std::string(rrb::to_string(e.kind()))},
         {"witness", e.witness()}};
  if (!e.detail().empty()) j["detail"] = e.detail();
  return j;
}

int exit_code(rrb::ErrorKind kind) {
  switch (kind) {
    case rrb::ErrorKind::ParseError:
      return kParse;
    case rrb::ErrorKind::BudgetExceeded:
    case rrb::ErrorKind::OrderTooLarge:
      return kBudget;
    default:
      return kInvalid;
  }
}

std::string payload_type(const Json& j) {
  if (!j.is_object()) return {};
  if (j.contains("table") || j.contains("degree")) return "group";
  if (j.contains("kernel") && j.contains("total")) return "extension";
  if (j.contains("A") && j.contains("K")) return "module";
  if (j.contains("H") && j.contains("G")) return "rrb";
  return {};
}

int cmd_validate(const JobConfig& cfg, const fs::path& path) {
  const Json j = rrb::load_json(path);
  const std::string type = payload_type(j);
  if (type.empty()) rrb::fail(rrb::ErrorKind::ParseError, {}, "unrecognized payload in " + path.string());
  const fs::path base = path.parent_path();
  Json report{{"type", type}};
  std::ostringstream text;
  try {
    if (type == "group") {
      const rrb::FiniteGroup g = rrb::group_from_json(j, base);
      report["order"] = g.order();
      report["abelian"] = g.is_abelian();
      text << "valid group of order " << g.order() << '\n';
    } else if (type == "rrb") {
      const rrb::RRBGroup r = rrb::rrb_from_json(j, base);
      report["order"] = {r.H().order(), r.G().order()};
      report["trivial"] = rrb::is_trivial(r);
      report["bijective"] = rrb::is_bijective(r);
      text << "valid RRB group with |H| = " << r.H().order() << ", |G| = " << r.G().order()
           << '\n';
    } else if (type == "extension") {
      const rrb::Extension e = rrb::extension_from_json(j, base);
      report["abelian"] = e.is_abelian;
      text << "valid " << (e.is_abelian ? "abelian " : "") << "extension, |H| = "
           << e.total.H().order() << ", |G| = " << e.total.G().order() << '\n';
    } else {
      const rrb::RRBModule m = rrb::module_from_json(j, base);
      report["order"] = {m.nA(), m.nB(), m.nK(), m.nL()};
      text << "valid module, |A| = " << m.nA() << ", |B| = " << m.nB() << ", |K| = " << m.nK()
           << ", |L| = " << m.nL() << '\n';
    }
  } catch (const rrb::Error& e) {
    if (e.kind() == rrb::ErrorKind::ParseError) throw;
    report["valid"] = false;
    report.update(error_json(e));
    emit(cfg, report, "invalid " + type + ": " + e.label() + '\n');
    return exit_code(e.kind());
  }
  report["valid"] = true;
  emit(cfg, report, text.str());
  return kOk;
}

int cmd_enumerate(const JobConfig& cfg, const fs::path& h_path, const fs::path& g_path,
                  const std::optional<fs::path>& phi_path) {
  const rrb::FiniteGroup H = rrb::group_from_json(rrb::load_json(h_path), h_path.parent_path());
  const rrb::FiniteGroup G = rrb::group_from_json(rrb::load_json(g_path), g_path.parent_path());
  std::vector<rrb::IndexMap> phi(G.order(), rrb::identity_map(H.order()));
  if (phi_path) {
    Json j = rrb::load_json(*phi_path);
    if (j.is_object() && j.contains("phi")) j = j.at("phi");
    try {
      phi = j.get<std::vector<rrb::IndexMap>>();
    } catch (const Json::exception& e) {
      rrb::fail(rrb::ErrorKind::ParseError, {}, std::string("phi: ") + e.what());
    }
  }
  const auto ops = rrb::enumerate_rrb_operators(H, G, phi, cfg.budget);
  std::ostringstream text;
  text << ops.size() << " operators\n";
  for (const auto& R : ops) text << join(R) << '\n';
  emit(cfg, Json{{"count", ops.size()}, {"operators", ops}}, text.str());
  return kOk;
}

int cmd_cohomology(const JobConfig& cfg, const fs::path& path, bool representatives) {
  const rrb::RRBModule m = rrb::module_from_json(rrb::load_json(path), path.parent_path());
  const rrb::CochainComplex cx(m);
  Json report = rrb::cohomology_report(cx);
  if (!representatives) report.erase("witnesses");
  std::ostringstream text;
  for (const char* name : {"z1", "z2", "b2", "h2"})
    text << name << ": " << join(report.at(name).get<rrb::Moduli>()) << " order "
         << report.at("orders").at(name).get<std::string>() << '\n';
  if (representatives)
    for (const Json& g : report.at("witnesses").at("h2_generators"))
      text << "h2 generator: " << g.dump() << '\n';
  emit(cfg, report, text.str());
  return kOk;
}

int cmd_wells(const JobConfig& cfg, const fs::path& path) {
  const rrb::Extension e = rrb::extension_from_json(rrb::load_json(path), path.parent_path());
  const rrb::WellsContext ctx(e);
  const rrb::WellsReport report = rrb::verify_wells_exactness(ctx, cfg.max_order);
  const rrb::WellsData& d = report.data;
  std::ostringstream text;
  std::size_t inducible = 0;
  for (const auto& p : d.pairs) inducible += p.inducible;
  text << "h2: " << join(d.h2_factors) << '\n'
       << "pairs: " << d.pairs.size() << ", compatible: " << d.compatible.size()
       << ", inducible: " << inducible << '\n'
       << "|Z1| = " << d.z1.size() << ", |Aut_K(H)| = " << d.aut_K_H.size()
       << ", |Aut_AK(H)| = " << d.aut_AK_H.size() << '\n';
  for (const auto& c : report.checks)
    text << c.name << ": " << (c.ok ? "ok" : "FAILED " + join(c.witness)) << '\n';
  text << "omega homomorphism: " << yes_no(report.omega_is_homomorphism) << '\n';
  emit(cfg, rrb::wells_report_to_json(report), text.str());
  return report.all_passed() ? kOk : kInvalid;
}

int cmd_inducible(const JobConfig& cfg, const fs::path& ext_path, const fs::path& pair_path) {
  const rrb::Extension e =
      rrb::extension_from_json(rrb::load_json(ext_path), ext_path.parent_path());
  const rrb::WellsContext ctx(e);
  const rrb::CompatiblePair pair = rrb::pair_from_json(rrb::load_json(pair_path), ctx.module());
  const rrb::Inducibility verdict = rrb::is_inducible(ctx, pair.psi, pair.theta);
  const bool criterion = rrb::inducible_by_module_criterion(ctx, pair.psi, pair.theta);
  Json report{{"compatible", verdict.compatible},
              {"inducible", verdict.inducible},
              {"criterion", criterion},
              {"agree", verdict.inducible == criterion}};
  std::ostringstream text;
  text << "compatible: " << yes_no(verdict.compatible) << '\n'
       << "inducible: " << yes_no(verdict.inducible) << '\n'
       << "criterion: " << yes_no(criterion) << '\n'
       << "agree: " << yes_no(verdict.inducible == criterion) << '\n';
  if (verdict.witness) {
    report["witness"] = rrb::morphism_to_json(*verdict.witness);
    text << "witness: psi " << join(verdict.witness->psi.image) << " eta "
         << join(verdict.witness->eta.image) << '\n';
  }
  emit(cfg, report, text.str());
  return kOk;
}

int cmd_build(const JobConfig& cfg, const fs::path& module_path, const fs::path& fs_path) {
  const rrb::RRBModule m =
      rrb::module_from_json(rrb::load_json(module_path), module_path.parent_path());
  const rrb::FactorSystem fs = rrb::factor_system_from_json(rrb::load_json(fs_path));
  const rrb::Extension e = rrb::build_extension(m, fs);
  const rrb::CochainComplex cx(m);
  std::ostringstream text;
  text << "extension with |H| = " << e.total.H().order() << ", |G| = " << e.total.G().order()
       << ", class " << join(cx.class_of(fs).coordinates) << " in " << join(cx.h2().factors())
       << '\n';
  emit(cfg, rrb::extension_to_json(e), text.str());
  return kOk;
}

std::int64_t budget_from_env() {
  const char* env = std::getenv("RRB_BUDGET");
  if (!env) return rrb::kDefaultBudget;
  try {
    std::size_t used = 0;
    const long long value = std::stoll(env, &used);
    if (used == std::string(env).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  std::cerr << "ignoring malformed RRB_BUDGET=" << env << '\n';
  return rrb::kDefaultBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative Rota-Baxter group extensions: cohomology, Wells maps, inducibility"};
  app.require_subcommand(1);

  JobConfig cfg;
  cfg.budget = budget_from_env();
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--max-order", cfg.max_order, "Largest group order for automorphism searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Axiom-evaluation cap for operator enumeration")
      ->check(CLI::PositiveNumber);

  fs::path path, second, third;
  bool representatives = false;

  auto* validate = app.add_subcommand("validate", "Validate a group, RRB group, module or extension");
  validate->add_option("file", path)->required()->check(CLI::ExistingFile);

  auto* enumerate = app.add_subcommand("enumerate", "List every RRB operator H -> G for an action");
  enumerate->add_option("H", path)->required()->check(CLI::ExistingFile);
  enumerate->add_option("G", second)->required()->check(CLI::ExistingFile);
  enumerate->add_option("phi", third, "One permutation of H per element of G (default trivial)")
      ->check(CLI::ExistingFile);

  auto* cohomology = app.add_subcommand("cohomology", "Invariant factors of Z1, Z2, B2 and H2");
  cohomology->add_option("module", path)->required()->check(CLI::ExistingFile);
  cohomology->add_flag("--representatives", representatives, "Print an H2 generator per factor");

  auto* wells = app.add_subcommand("wells", "Wells map and exactness report for an extension");
  wells->add_option("extension", path)->required()->check(CLI::ExistingFile);

  auto* inducible = app.add_subcommand("inducible", "Decide whether a pair of automorphisms lifts");
  inducible->add_option("extension", path)->required()->check(CLI::ExistingFile);
  inducible->add_option("pair", second)->required()->check(CLI::ExistingFile);

  auto* build = app.add_subcommand("build", "Build the extension of a module by a factor system");
  build->add_option("module", path)->required()->check(CLI::ExistingFile);
  build->add_option("factor_system", second)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*validate) return cmd_validate(cfg, path);
    if (*enumerate)
      return cmd_enumerate(cfg, path, second,
                           third.empty() ? std::nullopt : std::optional<fs::path>(third));
    if (*cohomology) return cmd_cohomology(cfg, path, representatives);
    if (*wells) return cmd_wells(cfg, path);
    if (*inducible) return cmd_inducible(cfg, path, second);
    if (*build) return cmd_build(cfg, path, second);
  } catch (const rrb::Error& e) {
    std::cerr << "error: " << e.label();
    if (!e.detail().empty()) std::cerr << ": " << e.detail();
    std::cerr << '\n';
    return exit_code(e.kind());
  }
  return kOk;
}
