#pragma once

#include <optional>
#include <string_view>

namespace chartgen {

// Data files compiled into the library (font metrics, themes, label tables,
// default word groups). Names are paths relative to the data/ directory.
std::optional<std::string_view> bundled_resource(std::string_view name);

}  // namespace chartgen
