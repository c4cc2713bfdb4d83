#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "crystals/builders.hpp"
#include "crystals/crystal.hpp"

namespace crystals {

// crystal/1 JSON:
//   {"format":"crystal/1","cartan":[[...]],
//    "elements":[{"id":0,"wt":[...]},...],
//    "f":{"1":[[src,dst],...],...}}
// Colors are 1-based strings; every color of the datum is present (possibly
// with an empty list); edges are listed in increasing source order.
nlohmann::ordered_json crystal_to_json(const Crystal& b);

// Throws SchemaError on malformed or dangling data and AxiomError if the
// crystal axioms fail.
Crystal crystal_from_json(const nlohmann::json& j);

std::string serialize_crystal(const Crystal& b);
Crystal parse_crystal(const std::string& text);

void save_crystal(const Crystal& b, const std::filesystem::path& path);
Crystal load_crystal(const std::filesystem::path& path);

// Adds every *.json crystal in `dir` to `seeds` (sorted by file name).
void load_seed_directory(SeedTable& seeds, const std::filesystem::path& dir);

// Graphviz rendering: nodes "id:wt", one edge per f_i labelled f<i>.
std::string to_dot(const Crystal& b);

// Cartan matrix from a JSON array of integer arrays.
RootDatum datum_from_json(const nlohmann::json& j);

}  // namespace crystals
