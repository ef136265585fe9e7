#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "invariatus/finring.hpp"
#include "invariatus/invariance.hpp"

namespace invariatus {

using Json = nlohmann::ordered_json;

/// "2x4x8", "12", "1" (trivial). Factors are normalized to invariant form.
FiniteAbelianGroup parse_group(std::string_view spec);
/// "0,2,0;1,0,2": semicolon-separated elements of comma-separated
/// coefficients in the factor order of g. Coefficients are reduced.
std::vector<Element> parse_elements(const FiniteAbelianGroup& g, std::string_view text);
/// Inverse of parse_elements.
std::string format_elements(std::span<const Element> xs);

Json to_json(const Element& x);
Json to_json(const FiniteAbelianGroup& g);
/// {"order", "shape", "generators"}
Json to_json(const Subgroup& h);
/// {"domain", "codomain", "basis", "images"}
Json to_json(const Homomorphism& f);
Json to_json(const StrictClassification& c);
/// {"subject", "flags", "witnesses", "classification"}
Json to_json(const InvarianceReport& r);
Json to_json(const StrictLattice& t);

/// Hasse diagram; nodes numbered in canonical order.
std::string to_dot(const StrictLattice& t);

/// {"elements", "additive", "one", "multiplication"}; elements by index.
Json to_json(const FiniteRing& r);
/// {"elements", "additive", "ring", "action"}
Json to_json(const FiniteModule& m);
/// Both validate every axiom; malformed input throws InvalidInput.
FiniteRing ring_from_json(const Json& j);
FiniteModule module_from_json(const Json& j);

}  // namespace invariatus
