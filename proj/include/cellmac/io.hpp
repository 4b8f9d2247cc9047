/**
 * Complex description files (JSON) and TSV table output.
 */
#ifndef CELLMAC_IO_HPP
#define CELLMAC_IO_HPP

#include <ostream>
#include <stdexcept>
#include <string>

#include "cellmac/cell_complex.hpp"

namespace cellmac {

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Parses { "vertices": [...], "cells": [{ "id", "dim", "vertices", "facets" }] }; unknown fields are rejected.
ComplexSpec parse_complex_json(const std::string& text);
/// Throws IoError when the file cannot be read, MalformedSpec on bad content.
ComplexSpec read_complex_file(const std::string& path);
std::string complex_to_json(const CellComplex& complex);

} // namespace cellmac

#endif
