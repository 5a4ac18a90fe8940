#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "rrb/cohomology.hpp"
#include "rrb/extension.hpp"
#include "rrb/finite_group.hpp"
#include "rrb/module.hpp"
#include "rrb/rrb_group.hpp"
#include "rrb/wells.hpp"

namespace rrb {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Throws ParseError.
Json load_json(const std::filesystem::path& path);

// Every *_from_json throws ParseError for malformed input and the usual
// validation errors for well-formed but invalid data. Where a group or RRB
// group is expected, a string is read as a path relative to `base`.

/// {"name"?, "order", "table"} or {"degree", "generators"}.
FiniteGroup group_from_json(const Json& j, const std::filesystem::path& base = {});
Json group_to_json(const FiniteGroup& g);

/// {"H", "G", "phi": one permutation of H per element of G, "R"}.
RRBGroup rrb_from_json(const Json& j, const std::filesystem::path& base = {});
Json rrb_to_json(const RRBGroup& r);

/// {"psi": [int], "eta": [int]}.
RRBMorphism morphism_from_json(const Json& j, const RRBGroup& from, const RRBGroup& to);
Json morphism_to_json(const RRBMorphism& m);

/// {"kernel", "total", "quotient", "incl", "proj"}.
Extension extension_from_json(const Json& j, const std::filesystem::path& base = {});
Json extension_to_json(const Extension& e);

/// {"nu", "mu", "sigma", "f"} with f[l][a].
ActionQuadruple action_from_json(const Json& j);
Json action_to_json(const ActionQuadruple& q);

/// {"A": rrb, "K": rrb, "action": quadruple}; a missing action is trivial.
RRBModule module_from_json(const Json& j, const std::filesystem::path& base = {});
Json module_to_json(const RRBModule& m);

/// {"shape": [|A|, |B|, |K|, |L|], "tau1", "tau2", "rho", "chi"}, each a flat
/// row-major array over the tuples without identity arguments.
FactorSystem factor_system_from_json(const Json& j);
Json factor_system_to_json(const FactorSystem& fs);

/// {"psi": morphism of A, "theta": morphism of K}.
CompatiblePair pair_from_json(const Json& j, const RRBModule& m);
Json pair_to_json(const CompatiblePair& c);

/// {"z1", "z2", "b2", "h2": invariant factors, "orders", "witnesses"}.
Json cohomology_report(const CochainComplex& cx);

/// {"pairs": [...], "exactness": {...}, "omega_is_homomorphism", "h2"}.
Json wells_report_to_json(const WellsReport& report);

}  // namespace rrb
