//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#include "ffkit/common/elements.hpp"

#include <algorithm>

#include "ffkit/common/error.hpp"

namespace ffkit {

namespace {

struct ElementInfo {
    const char* symbol;
    int z;
    double covalent_radius;  // Angstrom, Cordero single-bond values
};

constexpr std::array<ElementInfo, kNumElements> kElements = {{
    {"H", 1, 0.31},
    {"C", 6, 0.76},
    {"N", 7, 0.71},
    {"O", 8, 0.66},
    {"F", 9, 0.57},
    {"P", 15, 1.07},
    {"S", 16, 1.05},
    {"Cl", 17, 1.02},
    {"Br", 35, 1.20},
    {"I", 53, 1.39},
}};

}  // namespace

const std::string& element_symbol(Element e) {
    static const std::array<std::string, kNumElements> symbols = [] {
        std::array<std::string, kNumElements> s;
        for (int i = 0; i < kNumElements; ++i) s[i] = kElements[i].symbol;
        return s;
    }();
    return symbols[static_cast<int>(e)];
}

int element_z(Element e) { return kElements[static_cast<int>(e)].z; }

double covalent_radius(Element e) { return kElements[static_cast<int>(e)].covalent_radius; }

Element element_from_symbol(std::string_view symbol) {
    for (int i = 0; i < kNumElements; ++i) {
        if (symbol == kElements[i].symbol) return static_cast<Element>(i);
    }
    throw input_error("unsupported element symbol: '" + std::string(symbol) + "'");
}

bool is_supported_symbol(std::string_view symbol) {
    return std::any_of(kElements.begin(), kElements.end(),
                       [&](const ElementInfo& e) { return symbol == e.symbol; });
}

}  // namespace ffkit
