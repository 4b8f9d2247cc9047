/**
 * Named complexes generated in code.
 */
#ifndef CELLMAC_BUILTINS_HPP
#define CELLMAC_BUILTINS_HPP

#include <string>
#include <vector>

#include "cellmac/cell_complex.hpp"

namespace cellmac {

/// Throws MalformedSpec for an unknown name.
CellComplex builtin(const std::string& name);
std::vector<std::string> builtin_names();

} // namespace cellmac

#endif
