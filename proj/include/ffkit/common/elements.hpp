//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_COMMON_ELEMENTS_HPP
#define FFKIT_COMMON_ELEMENTS_HPP

#include <array>
#include <string>
#include <string_view>

namespace ffkit {

/// Supported element set (drug-like scope).
enum class Element : int { H = 0, C, N, O, F, P, S, Cl, Br, I };

inline constexpr int kNumElements = 10;

const std::string& element_symbol(Element e);

/// Atomic number of the element.
int element_z(Element e);

/// Single-bond covalent radius in Angstrom.
double covalent_radius(Element e);

/// Parses an element symbol ("C", "Cl", ...). Throws Error on unknown or
/// unsupported symbols.
Element element_from_symbol(std::string_view symbol);

bool is_supported_symbol(std::string_view symbol);

}  // namespace ffkit

#endif  // FFKIT_COMMON_ELEMENTS_HPP
