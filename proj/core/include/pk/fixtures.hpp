#pragma once

#include <string>
#include <vector>

#include "pk/poset.hpp"

namespace pk {

/* Built-in example posets, addressable by name from the CLI. */
RankedPoset fixture(const std::string& name);
std::vector<std::string> fixture_names();

} // namespace pk
