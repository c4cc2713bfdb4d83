#include "crystals/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "crystals/errors.hpp"

namespace crystals {

namespace {

constexpr const char* kFormat = "crystal/1";

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

int as_int(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer()) throw SchemaError(what + " must be an integer");
  return v.get<int>();
}

}  // namespace

RootDatum datum_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw SchemaError("cartan must be an array of integer arrays");
  std::vector<std::vector<int>> cartan;
  for (const auto& row : j) {
    if (!row.is_array()) throw SchemaError("cartan must be an array of integer arrays");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(as_int(v, "cartan entry"));
    cartan.push_back(std::move(r));
  }
  try {
    return RootDatum(std::move(cartan));
  } catch (const InvalidCartan& e) {
    throw SchemaError(std::string("invalid cartan matrix: ") + e.what());
  }
}

nlohmann::ordered_json crystal_to_json(const Crystal& b) {
  nlohmann::ordered_json j;
  j["format"] = kFormat;
  j["cartan"] = b.datum().cartan();
  auto elements = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < b.size(); ++x) {
    nlohmann::ordered_json el;
    el["id"] = x;
    el["wt"] = b.wt(static_cast<ElementId>(x)).coords;
    elements.push_back(std::move(el));
  }
  j["elements"] = std::move(elements);
  nlohmann::ordered_json f = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < b.rank(); ++i) {
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < b.size(); ++x) {
      const ElementId y = b.f(i, static_cast<ElementId>(x));
      if (y != kNone) edges.push_back({x, y});
    }
    f[std::to_string(i + 1)] = std::move(edges);
  }
  j["f"] = std::move(f);
  return j;
}

Crystal crystal_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("crystal file must be a JSON object");
  if (!j.contains("format") || j["format"] != kFormat) {
    throw SchemaError(std::string("missing or unsupported format tag (expected \"") + kFormat +
                      "\")");
  }
  if (!j.contains("cartan")) throw SchemaError("missing \"cartan\"");
  RootDatum datum = datum_from_json(j["cartan"]);
  const std::size_t rank = datum.rank();

  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw SchemaError("missing \"elements\" array");
  }
  const auto& elements = j["elements"];
  const std::size_t n = elements.size();
  std::vector<Weight> weights(n);
  std::vector<char> seen(n, 0);
  for (const auto& el : elements) {
    if (!el.is_object() || !el.contains("id") || !el.contains("wt")) {
      throw SchemaError("each element needs \"id\" and \"wt\"");
    }
    const int id = as_int(el["id"], "element id");
    if (id < 0 || static_cast<std::size_t>(id) >= n || seen[id]) {
      throw SchemaError("element ids must be dense and unique in 0.." + std::to_string(n - 1) +
                        ", got " + std::to_string(id));
    }
    seen[id] = 1;
    if (!el["wt"].is_array() || el["wt"].size() != rank) {
      throw SchemaError("element " + std::to_string(id) + " needs a weight of length " +
                        std::to_string(rank));
    }
    std::vector<int> coords;
    for (const auto& v : el["wt"]) coords.push_back(as_int(v, "weight coordinate"));
    weights[id] = Weight(std::move(coords));
  }

  std::vector<std::vector<ElementId>> f(rank, std::vector<ElementId>(n, kNone));
  if (j.contains("f")) {
    if (!j["f"].is_object()) throw SchemaError("\"f\" must be an object keyed by color");
    for (const auto& [key, edges] : j["f"].items()) {
      std::size_t color = 0;
      try {
        std::size_t used = 0;
        color = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw SchemaError("edge color '" + key + "' is not a positive integer");
      }
      if (color < 1 || color > rank) {
        throw SchemaError("edge color " + key + " outside 1.." + std::to_string(rank));
      }
      if (!edges.is_array()) throw SchemaError("edges of color " + key + " must be an array");
      for (const auto& edge : edges) {
        if (!edge.is_array() || edge.size() != 2) {
          throw SchemaError("edge of color " + key + " must be a [src, dst] pair");
        }
        const int src = as_int(edge[0], "edge source");
        const int dst = as_int(edge[1], "edge target");
        for (int v : {src, dst}) {
          if (v < 0 || static_cast<std::size_t>(v) >= n) {
            throw SchemaError("edge [" + std::to_string(src) + "," + std::to_string(dst) +
                              "] of color " + key + " references missing element " +
                              std::to_string(v));
          }
        }
        if (f[color - 1][src] != kNone) {
          throw SchemaError("element " + std::to_string(src) + " has two f_" + key + " edges");
        }
        f[color - 1][src] = dst;
      }
    }
  }

  Crystal out(std::move(datum), std::move(weights), std::move(f));
  const AxiomReport report = verify_axioms(out);
  if (!report.ok()) throw AxiomError(report.summary());
  return out;
}

std::string serialize_crystal(const Crystal& b) { return crystal_to_json(b).dump() + "\n"; }

Crystal parse_crystal(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return crystal_from_json(j);
}

void save_crystal(const Crystal& b, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize_crystal(b);
}

Crystal load_crystal(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_crystal(ss.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  } catch (const AxiomError& e) {
    throw AxiomError(path.string() + ": " + e.what());
  }
}

void load_seed_directory(SeedTable& seeds, const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) seeds.add(load_crystal(file));
}

std::string to_dot(const Crystal& b) {
  std::ostringstream os;
  os << "digraph crystal {\n  node [shape=box];\n";
  for (std::size_t x = 0; x < b.size(); ++x) {
    os << "  " << x << " [label=\"" << x << ":" << b.wt(static_cast<ElementId>(x)).str()
       << "\"];\n";
  }
  constexpr std::size_t kColors = sizeof(kPalette) / sizeof(kPalette[0]);
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t x = 0; x < b.size(); ++x) {
      const ElementId y = b.f(i, static_cast<ElementId>(x));
      if (y == kNone) continue;
      os << "  " << x << " -> " << y << " [label=\"f" << i + 1 << "\", color=\""
         << kPalette[i % kColors] << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace crystals
