#pragma once

#include <map>
#include <string>
#include <vector>

#include "argonaut/engine.hpp"
#include "argonaut/harness.hpp"
#include "argonaut/semantics.hpp"

namespace argonaut {

using ExtensionFamilies = std::map<Semantics, std::vector<Extension>>;

// Nodes in id order, labelled "Γ ⊢ γ"; edges in sorted order.
std::string export_dot(const AttackGraph& g);

// {arguments:[{id,support,conclusion,value?}], edges:[[from,to]],
//  extensions:{sem:[[ids]]}}, two-space indented, trailing newline.
std::string export_json(const AttackGraph& g, const ExtensionFamilies& families = {});

std::string report_json(const PropertyReport& r);

}  // namespace argonaut
