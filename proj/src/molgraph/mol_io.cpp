//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#include "ffkit/molgraph/mol_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ffkit/common/error.hpp"

namespace ffkit {

using nlohmann::json;

namespace {

Molecule molecule_from_json(const json& j) {
    if (!j.is_object()) throw input_error("molecule JSON: expected an object");
    std::string name = j.value("name", "");
    if (!j.contains("net_charge") || !j["net_charge"].is_number_integer())
        throw input_error("molecule JSON: missing integer field 'net_charge'");
    int net_charge = j["net_charge"].get<int>();

    if (!j.contains("atoms") || !j["atoms"].is_array())
        throw input_error("molecule JSON: missing array field 'atoms'");
    std::vector<Atom> atoms;
    for (const auto& ja : j["atoms"]) {
        Atom a;
        if (!ja.contains("element") || !ja["element"].is_string())
            throw input_error("molecule JSON: atom without 'element'");
        a.element = element_from_symbol(ja["element"].get<std::string>());
        a.formal_charge = ja.value("formal_charge", 0);
        if (!ja.contains("xyz") || !ja["xyz"].is_array() || ja["xyz"].size() != 3)
            throw input_error("molecule JSON: atom 'xyz' must be a 3-array");
        for (int k = 0; k < 3; ++k) a.position[k] = ja["xyz"][k].get<double>();
        atoms.push_back(a);
    }

    std::vector<Bond> bonds;
    if (j.contains("bonds")) {
        if (!j["bonds"].is_array()) throw input_error("molecule JSON: 'bonds' must be an array");
        for (const auto& jb : j["bonds"]) {
            Bond b;
            if (!jb.contains("i") || !jb.contains("j"))
                throw input_error("molecule JSON: bond without 'i'/'j'");
            b.i = jb["i"].get<int>();
            b.j = jb["j"].get<int>();
            b.order = bond_order_from_name(jb.value("order", "single"));
            bonds.push_back(b);
        }
    }
    return Molecule(name, net_charge, std::move(atoms), std::move(bonds));
}

json molecule_to_json(const Molecule& mol) {
    json j;
    j["name"] = mol.name();
    j["net_charge"] = mol.net_charge();
    j["atoms"] = json::array();
    for (const Atom& a : mol.atoms()) {
        json ja;
        ja["element"] = element_symbol(a.element);
        ja["formal_charge"] = a.formal_charge;
        ja["xyz"] = {a.position[0], a.position[1], a.position[2]};
        j["atoms"].push_back(ja);
    }
    j["bonds"] = json::array();
    for (const Bond& b : mol.bonds()) {
        json jb;
        jb["i"] = b.i;
        jb["j"] = b.j;
        jb["order"] = bond_order_name(b.order);
        j["bonds"].push_back(jb);
    }
    return j;
}

int parse_int_field(const std::string& line, size_t pos, size_t len, const char* what) {
    if (line.size() < pos) throw input_error(std::string("SDF: truncated line reading ") + what);
    std::string field = line.substr(pos, len);
    try {
        size_t idx = 0;
        int v = std::stoi(field, &idx);
        return v;
    } catch (const std::exception&) {
        throw input_error(std::string("SDF: bad integer field for ") + what + ": '" + field + "'");
    }
}

double parse_double_field(const std::string& line, size_t pos, size_t len, const char* what) {
    if (line.size() < pos) throw input_error(std::string("SDF: truncated line reading ") + what);
    std::string field = line.substr(pos, len);
    try {
        return std::stod(field);
    } catch (const std::exception&) {
        throw input_error(std::string("SDF: bad float field for ") + what + ": '" + field + "'");
    }
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Reads one V2000 record from the stream, up to and including the "$$$$"
// terminator or end of stream. Returns false if the stream holds no record.
bool read_sdf_record(std::istream& in, Molecule* out) {
    std::string header[3];
    std::string line;
    int got = 0;
    while (got < 3 && std::getline(in, line)) header[got++] = line;
    if (got == 0) return false;
    if (got < 3) throw input_error("SDF: truncated header block");

    if (!std::getline(in, line)) throw input_error("SDF: missing counts line");
    int natoms = parse_int_field(line, 0, 3, "atom count");
    int nbonds = parse_int_field(line, 3, 3, "bond count");
    if (natoms <= 0) throw input_error("SDF: non-positive atom count");

    std::vector<Atom> atoms(natoms);
    for (int i = 0; i < natoms; ++i) {
        if (!std::getline(in, line)) throw input_error("SDF: truncated atom block");
        atoms[i].position[0] = parse_double_field(line, 0, 10, "x");
        atoms[i].position[1] = parse_double_field(line, 10, 10, "y");
        atoms[i].position[2] = parse_double_field(line, 20, 10, "z");
        if (line.size() < 32) throw input_error("SDF: truncated atom line");
        std::string sym = trim(line.substr(31, 3));
        atoms[i].element = element_from_symbol(sym);
    }

    std::vector<Bond> bonds(nbonds);
    for (int b = 0; b < nbonds; ++b) {
        if (!std::getline(in, line)) throw input_error("SDF: truncated bond block");
        int i1 = parse_int_field(line, 0, 3, "bond atom 1");
        int i2 = parse_int_field(line, 3, 3, "bond atom 2");
        int code = parse_int_field(line, 6, 3, "bond order");
        if (i1 < 1 || i1 > natoms || i2 < 1 || i2 > natoms)
            throw input_error("SDF: atom index out of range in bond block");
        bonds[b].i = i1 - 1;
        bonds[b].j = i2 - 1;
        switch (code) {
            case 1: bonds[b].order = BondOrder::Single; break;
            case 2: bonds[b].order = BondOrder::Double; break;
            case 3: bonds[b].order = BondOrder::Triple; break;
            case 4: bonds[b].order = BondOrder::Aromatic; break;
            default: throw input_error("SDF: unsupported bond order code " + std::to_string(code));
        }
    }

    // Property block: honor M CHG, ignore everything else until M END.
    while (std::getline(in, line)) {
        if (line.rfind("M  END", 0) == 0) break;
        if (line.rfind("M  CHG", 0) == 0) {
            int count = parse_int_field(line, 6, 3, "charge count");
            for (int k = 0; k < count; ++k) {
                int idx = parse_int_field(line, 9 + 8 * k + 1, 3, "charge atom");
                int chg = parse_int_field(line, 9 + 8 * k + 5, 3, "charge value");
                if (idx < 1 || idx > natoms)
                    throw input_error("SDF: atom index out of range in M CHG");
                atoms[idx - 1].formal_charge = chg;
            }
        }
    }
    // Skip data items until the record terminator (or EOF for a bare molfile).
    while (std::getline(in, line)) {
        if (trim(line) == "$$$$") break;
    }

    int net = 0;
    for (const Atom& a : atoms) net += a.formal_charge;
    *out = Molecule(trim(header[0]), net, std::move(atoms), std::move(bonds));
    return true;
}

}  // namespace

Molecule parse_molecule(std::istream& in, MolFormat format) {
    if (format == MolFormat::Json) {
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw input_error(std::string("molecule JSON: ") + e.what());
        }
        return molecule_from_json(j);
    }
    Molecule mol("", 0, {Atom{}}, {});
    if (!read_sdf_record(in, &mol)) throw input_error("SDF: empty input");
    return mol;
}

Molecule parse_molecule(const std::string& text, MolFormat format) {
    std::istringstream in(text);
    return parse_molecule(in, format);
}

std::vector<Molecule> parse_molecules(std::istream& in, MolFormat format) {
    std::vector<Molecule> out;
    if (format == MolFormat::Json) {
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw input_error(std::string("molecule JSON: ") + e.what());
        }
        if (j.is_array()) {
            for (const auto& item : j) out.push_back(molecule_from_json(item));
        } else {
            out.push_back(molecule_from_json(j));
        }
        return out;
    }
    Molecule mol("", 0, {Atom{}}, {});
    while (in.good()) {
        // Peek for content before attempting a record.
        std::streampos pos = in.tellg();
        std::string line;
        bool has_content = false;
        while (std::getline(in, line)) {
            if (!trim(line).empty()) {
                has_content = true;
                break;
            }
            pos = in.tellg();
        }
        if (!has_content) break;
        in.clear();
        in.seekg(pos);
        if (!read_sdf_record(in, &mol)) break;
        out.push_back(mol);
    }
    if (out.empty()) throw input_error("SDF: empty input");
    return out;
}

namespace {

MolFormat format_from_path(const std::string& path) {
    auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "json") return MolFormat::Json;
    if (ext == "sdf" || ext == "mol") return MolFormat::Sdf;
    throw input_error("cannot infer molecule format from path: " + path);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    return in;
}

}  // namespace

Molecule load_molecule(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_molecule(in, format_from_path(path));
}

std::vector<Molecule> load_molecules(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse_molecules(in, format_from_path(path));
}

std::string to_json_string(const Molecule& mol) { return molecule_to_json(mol).dump(2); }

std::string to_sdf_string(const Molecule& mol) {
    std::ostringstream out;
    out << mol.name() << "\n  ffkit\n\n";
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%3d%3d  0  0  0  0  0  0  0  0999 V2000\n", mol.num_atoms(),
                  mol.num_bonds());
    out << buf;
    for (const Atom& a : mol.atoms()) {
        std::snprintf(buf, sizeof(buf), "%10.4f%10.4f%10.4f %-3s 0  0  0  0  0  0  0  0  0  0  0  0\n",
                      a.position[0], a.position[1], a.position[2],
                      element_symbol(a.element).c_str());
        out << buf;
    }
    for (const Bond& b : mol.bonds()) {
        int code = 1;
        switch (b.order) {
            case BondOrder::Single: code = 1; break;
            case BondOrder::Double: code = 2; break;
            case BondOrder::Triple: code = 3; break;
            case BondOrder::Aromatic: code = 4; break;
        }
        std::snprintf(buf, sizeof(buf), "%3d%3d%3d  0\n", b.i + 1, b.j + 1, code);
        out << buf;
    }
    std::vector<std::pair<int, int>> charges;
    for (int i = 0; i < mol.num_atoms(); ++i) {
        if (mol.atom(i).formal_charge != 0) charges.emplace_back(i + 1, mol.atom(i).formal_charge);
    }
    for (size_t k = 0; k < charges.size(); k += 8) {
        size_t run = std::min<size_t>(8, charges.size() - k);
        std::snprintf(buf, sizeof(buf), "M  CHG%3d", static_cast<int>(run));
        out << buf;
        for (size_t m = k; m < k + run; ++m) {
            std::snprintf(buf, sizeof(buf), " %3d %3d", charges[m].first, charges[m].second);
            out << buf;
        }
        out << "\n";
    }
    out << "M  END\n$$$$\n";
    return out.str();
}

void save_molecule(const Molecule& mol, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    if (format_from_path(path) == MolFormat::Json)
        out << to_json_string(mol) << "\n";
    else
        out << to_sdf_string(mol);
}

}  // namespace ffkit
