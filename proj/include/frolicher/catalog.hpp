#pragma once

#include "frolicher/structure.hpp"

#include <string>
#include <vector>

namespace frolicher {

// Names of the built-in models, in a fixed order.
std::vector<std::string> catalog_names();
// Throws LookupError for an unknown name.
InvariantComplexStructure catalog_entry(const std::string &name);
// One-line description shown by the CLI.
std::string catalog_description(const std::string &name);

}  // namespace frolicher
