#pragma once

#include <string>
#include <vector>

#include "holo/diagram.hpp"

namespace holo {

// Built-in diagram specs, frozen as JSON data. Throws UnknownName.
DiagramSpec catalog(const std::string& name);

std::vector<std::string> catalog_names();

// Raw JSON for a catalog entry (exactly what catalog() parses).
const char* catalog_json(const std::string& name);

}  // namespace holo
