//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_MOLGRAPH_MOL_IO_HPP
#define FFKIT_MOLGRAPH_MOL_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ffkit/molgraph/molecule.hpp"

namespace ffkit {

enum class MolFormat { Json, Sdf };

/// Parses one molecule record. Throws Error on malformed input, unsupported
/// elements, charge-sum mismatches or disconnected graphs.
Molecule parse_molecule(std::istream& in, MolFormat format);
Molecule parse_molecule(const std::string& text, MolFormat format);

/// Loads a molecule from a file; format inferred from the extension
/// (.json / .sdf, .mol) unless overridden.
Molecule load_molecule(const std::string& path);

/// Reads all records of a multi-molecule SDF (separated by $$$$) or a JSON
/// array of molecule objects.
std::vector<Molecule> parse_molecules(std::istream& in, MolFormat format);
std::vector<Molecule> load_molecules(const std::string& path);

std::string to_json_string(const Molecule& mol);
std::string to_sdf_string(const Molecule& mol);

void save_molecule(const Molecule& mol, const std::string& path);

}  // namespace ffkit

#endif  // FFKIT_MOLGRAPH_MOL_IO_HPP
