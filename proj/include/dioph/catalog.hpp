#pragma once

#include <string>

#include "dioph/oracle.hpp"

namespace dioph {

// Named constructors for the built-in test constants plus parametric
// families ("liouville<b>", "champernowne<b>", "rand<seed>").
namespace catalog {

// JSON manifest: name -> descriptor for every built-in entry.
std::string manifestJson();

// Construct an oracle by catalog name; throws on unknown names.
OraclePtr byName(const std::string& name);

}  // namespace catalog

}  // namespace dioph
