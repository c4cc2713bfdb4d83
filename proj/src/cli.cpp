#include "crystals/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "crystals/builders.hpp"
#include "crystals/decomposition.hpp"
#include "crystals/errors.hpp"
#include "crystals/io.hpp"
#include "crystals/pgl2.hpp"
#include "crystals/tensor.hpp"
#include "json.hpp"

namespace crystals {

namespace {

using ojson = nlohmann::ordered_json;

struct DatumOptions {
  std::string type;
  std::string cartan;
  std::string seeds;

  void attach(CLI::App* cmd, bool with_seeds = true) {
    cmd->add_option("--type", type, "Cartan type, e.g. A2");
    cmd->add_option("--cartan", cartan, "Cartan matrix as JSON (or a path to a JSON file)");
    if (with_seeds) cmd->add_option("--seeds", seeds, "directory of seed crystals B(omega_i)");
  }

  RootDatum datum() const {
    if (!type.empty() && !cartan.empty()) throw CLI::ValidationError("use --type or --cartan, not both");
    if (!type.empty()) return RootDatum::from_type(type);
    if (cartan.empty()) throw CLI::RequiredError("--type or --cartan");
    std::string text = cartan;
    if (std::filesystem::is_regular_file(cartan)) {
      std::ifstream in(cartan);
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError(std::string("--cartan: malformed JSON: ") + e.what());
    }
    return datum_from_json(j);
  }

  SeedTable seed_table() const {
    SeedTable table(datum());
    if (!seeds.empty()) load_seed_directory(table, seeds);
    return table;
  }
};

Weight weight_for(const RootDatum& datum, const std::string& text, const std::string& flag) {
  Weight w = parse_weight(text);
  if (w.rank() != datum.rank()) {
    throw CLI::ValidationError(flag, "expected " + std::to_string(datum.rank()) +
                                         " coordinates, got " + std::to_string(w.rank()));
  }
  return w;
}

std::vector<std::size_t> parse_nodes(const std::string& text) {
  std::vector<std::size_t> out;
  for (int v : parse_weight(text).coords) {
    if (v < 1) throw CLI::ValidationError("--levi", "nodes are 1-based");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write " + path);
  file << text;
}

ojson report_json(const DecompositionReport& report) {
  ojson entries = ojson::array();
  for (const auto& entry : report.entries) {
    ojson e;
    e["hw"] = entry.highest_weight.coords;
    e["mult"] = entry.multiplicity;
    e["components"] = entry.components;
    entries.push_back(std::move(e));
  }
  ojson j;
  j["entries"] = std::move(entries);
  return j;
}

std::string pair_list(const std::set<std::pair<int, int>>& pairs) {
  std::string s;
  for (const auto& [l, m] : pairs) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(l) + "," + std::to_string(m) + ")";
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal crystals, tensor product decompositions and the PGL(2) lattice model"};
  app.name("crystals");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  // build
  DatumOptions build_datum;
  std::string build_hw;
  std::string build_out;
  auto* build = app.add_subcommand("build", "construct B(lambda)");
  build_datum.attach(build);
  build->add_option("--hw", build_hw, "highest weight, comma separated")->required();
  build->add_option("--out", build_out, "output crystal file");

  // tensor
  std::string tensor_a, tensor_b, tensor_out;
  auto* tensor_cmd = app.add_subcommand("tensor", "Kashiwara tensor product of two crystals");
  tensor_cmd->add_option("left", tensor_a)->required()->check(CLI::ExistingFile);
  tensor_cmd->add_option("right", tensor_b)->required()->check(CLI::ExistingFile);
  tensor_cmd->add_option("--out", tensor_out, "output crystal file");

  // decompose
  std::string decompose_file, decompose_seeds, report_format;
  auto* decompose_cmd = app.add_subcommand("decompose", "split into highest weight components");
  decompose_cmd->add_option("crystal", decompose_file)->required()->check(CLI::ExistingFile);
  decompose_cmd->add_option("--seeds", decompose_seeds, "directory of seed crystals");
  decompose_cmd->add_option("--report", report_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // branch
  std::string branch_file, branch_levi;
  auto* branch_cmd = app.add_subcommand("branch", "restrict to a Levi and decompose");
  branch_cmd->add_option("crystal", branch_file)->required()->check(CLI::ExistingFile);
  branch_cmd->add_option("--levi", branch_levi, "1-based nodes, comma separated")->required();

  // strings
  std::string strings_file;
  int strings_color = 1;
  auto* strings_cmd = app.add_subcommand("strings", "maximal i-strings of a crystal");
  strings_cmd->add_option("crystal", strings_file)->required()->check(CLI::ExistingFile);
  strings_cmd->add_option("--color", strings_color, "1-based color")->capture_default_str();

  // lr
  DatumOptions lr_datum;
  std::string lr_hw1, lr_hw2;
  auto* lr_cmd = app.add_subcommand("lr", "tensor product multiplicities");
  lr_datum.attach(lr_cmd);
  lr_cmd->add_option("--hw1", lr_hw1)->required();
  lr_cmd->add_option("--hw2", lr_hw2)->required();

  // closed-check
  DatumOptions closed_datum;
  std::string closed_hw1, closed_hw2;
  auto* closed_cmd = app.add_subcommand("closed-check", "check B(l+m) embeds in B(l) (x) B(m)");
  closed_datum.attach(closed_cmd);
  closed_cmd->add_option("--hw1", closed_hw1)->required();
  closed_cmd->add_option("--hw2", closed_hw2)->required();

  // verify
  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "check the crystal axioms of a file");
  verify_cmd->add_option("crystal", verify_file)->required()->check(CLI::ExistingFile);

  // dot
  std::string dot_file, dot_out;
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  dot_cmd->add_option("crystal", dot_file)->required()->check(CLI::ExistingFile);
  dot_cmd->add_option("--out", dot_out);

  // pgl2
  auto* pgl2_cmd = app.add_subcommand("pgl2", "PGL(2) affine Grassmannian lattice model");
  pgl2_cmd->require_subcommand(1);
  pgl2_cmd->fallthrough();
  int lmax = 6, prec = 24, samples = 200, l1 = 0, m1 = 0, l2 = 0, m2 = 0, l = 0, m = 0;
  std::uint64_t seed = 42;
  std::string pgl2_out;
  auto* census_cmd = pgl2_cmd->add_subcommand("census", "which S^m meet Gr^l");
  census_cmd->add_option("--lmax", lmax)->capture_default_str();
  census_cmd->add_option("--prec", prec)->capture_default_str();
  auto* convolve_cmd = pgl2_cmd->add_subcommand("convolve", "orbit labels of generic products");
  convolve_cmd->add_option("--l1", l1)->required();
  convolve_cmd->add_option("--m1", m1)->required();
  convolve_cmd->add_option("--l2", l2)->required();
  convolve_cmd->add_option("--m2", m2)->required();
  convolve_cmd->add_option("--prec", prec)->capture_default_str();
  convolve_cmd->add_option("--samples", samples)->capture_default_str();
  convolve_cmd->add_option("--seed", seed)->capture_default_str();
  auto* crystal_cmd = pgl2_cmd->add_subcommand("crystal", "B(l) from the strata S^m of Gr^l");
  crystal_cmd->add_option("--l", l)->required();
  crystal_cmd->add_option("--prec", prec)->capture_default_str();
  crystal_cmd->add_option("--out", pgl2_out);
  auto* params_cmd = pgl2_cmd->add_subcommand("params", "free parameters of S^m meet Gr^l");
  params_cmd->add_option("--l", l)->required();
  params_cmd->add_option("--m", m)->required();
  params_cmd->add_option("--prec", prec)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const bool table = format == "table";

  try {
    if (build->parsed()) {
      const SeedTable seeds = build_datum.seed_table();
      const Weight lambda = weight_for(seeds.datum(), build_hw, "--hw");
      const Crystal b = build_B(seeds, lambda);
      if (!build_out.empty()) {
        save_crystal(b, build_out);
        if (table) {
          out << "B(" << lambda.str() << "): " << b.size() << " elements -> " << build_out << "\n";
        } else {
          ojson j;
          j["hw"] = lambda.coords;
          j["size"] = b.size();
          j["out"] = build_out;
          emit(out, j);
        }
      } else {
        out << serialize_crystal(b);
      }
    } else if (tensor_cmd->parsed()) {
      const Crystal product = tensor(load_crystal(tensor_a), load_crystal(tensor_b));
      write_or_print(tensor_out, serialize_crystal(product), out);
    } else if (decompose_cmd->parsed()) {
      const Crystal b = load_crystal(decompose_file);
      SeedTable seeds(b.datum());
      if (!decompose_seeds.empty()) load_seed_directory(seeds, decompose_seeds);
      const DecompositionReport report = decompose(b, seeds);
      const bool as_table = report_format.empty() ? table : report_format == "table";
      if (as_table) {
        out << format_table(report);
      } else {
        emit(out, report_json(report));
      }
    } else if (branch_cmd->parsed()) {
      const Crystal b = load_crystal(branch_file);
      const BranchingReport report = branch_to_levi(b, parse_nodes(branch_levi));
      if (table) {
        out << "levi:";
        for (std::size_t i : report.levi) out << ' ' << i + 1;
        out << "\n" << format_table(report.decomposition);
      } else {
        ojson j;
        std::vector<std::size_t> nodes;
        for (std::size_t i : report.levi) nodes.push_back(i + 1);
        j["levi"] = nodes;
        j["entries"] = report_json(report.decomposition)["entries"];
        emit(out, j);
      }
    } else if (strings_cmd->parsed()) {
      const Crystal b = load_crystal(strings_file);
      if (strings_color < 1 || static_cast<std::size_t>(strings_color) > b.rank()) {
        throw CLI::ValidationError("--color", "outside 1.." + std::to_string(b.rank()));
      }
      const auto strings = i_string_decomposition(b, static_cast<std::size_t>(strings_color - 1));
      if (table) {
        for (const auto& s : strings) {
          out << "top " << s.top << "  length " << s.length() << "  weights";
          for (ElementId x : s.elements) out << " (" << b.wt(x).str() << ")";
          out << "\n";
        }
      } else {
        ojson list = ojson::array();
        for (const auto& s : strings) {
          ojson e;
          e["top"] = s.top;
          e["length"] = s.length();
          e["elements"] = s.elements;
          ojson weights = ojson::array();
          for (ElementId x : s.elements) weights.push_back(b.wt(x).coords);
          e["weights"] = std::move(weights);
          list.push_back(std::move(e));
        }
        ojson j;
        j["color"] = strings_color;
        j["strings"] = std::move(list);
        emit(out, j);
      }
    } else if (lr_cmd->parsed()) {
      const SeedTable seeds = lr_datum.seed_table();
      const Weight a = weight_for(seeds.datum(), lr_hw1, "--hw1");
      const Weight b = weight_for(seeds.datum(), lr_hw2, "--hw2");
      const auto mult = lr_multiplicities(seeds, a, b);
      if (table) {
        out << "B(" << a.str() << ") (x) B(" << b.str() << "):\n";
        for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
          out << "  B(" << it->first.str() << ") x " << it->second << "\n";
        }
      } else {
        ojson entries = ojson::array();
        for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
          ojson e;
          e["hw"] = it->first.coords;
          e["mult"] = it->second;
          entries.push_back(std::move(e));
        }
        ojson j;
        j["hw1"] = a.coords;
        j["hw2"] = b.coords;
        j["entries"] = std::move(entries);
        emit(out, j);
      }
    } else if (closed_cmd->parsed()) {
      const SeedTable seeds = closed_datum.seed_table();
      const Weight a = weight_for(seeds.datum(), closed_hw1, "--hw1");
      const Weight b = weight_for(seeds.datum(), closed_hw2, "--hw2");
      const bool closed = verify_closed_family(seeds, a, b);
      if (table) {
        out << "B(" << (a + b).str() << ") embeds in B(" << a.str() << ") (x) B(" << b.str()
            << "): " << (closed ? "yes" : "no") << "\n";
      } else {
        ojson j;
        j["hw1"] = a.coords;
        j["hw2"] = b.coords;
        j["closed"] = closed;
        emit(out, j);
      }
      if (!closed) return 1;
    } else if (verify_cmd->parsed()) {
      const Crystal b = load_crystal(verify_file);
      const auto hw = highest_weight_elements(b);
      const auto comps = connected_components(b);
      if (table) {
        out << verify_file << ": " << b.size() << " elements, " << comps.size()
            << " component(s), axioms ok\n";
      } else {
        ojson j;
        j["file"] = verify_file;
        j["size"] = b.size();
        j["axioms"] = "ok";
        j["components"] = comps.size();
        j["highest_weight_elements"] = hw;
        emit(out, j);
      }
    } else if (dot_cmd->parsed()) {
      write_or_print(dot_out, to_dot(load_crystal(dot_file)), out);
    } else if (census_cmd->parsed()) {
      const auto pairs = pgl2::strata_census(lmax, prec, pgl2::default_pool(prec));
      std::set<std::pair<int, int>> expected;
      for (int ll = 0; ll <= lmax; ++ll)
        for (int mm = -ll; mm <= ll; ++mm)
          if (pgl2::admissible(ll, mm)) expected.emplace(ll, mm);
      if (table) {
        out << "attained (l,m): " << pair_list(pairs) << "\n"
            << "matches l-m in 2Z>=0, l>=|m|: " << (pairs == expected ? "yes" : "no") << "\n";
      } else {
        ojson list = ojson::array();
        for (const auto& [ll, mm] : pairs) list.push_back({ll, mm});
        ojson j;
        j["lmax"] = lmax;
        j["prec"] = prec;
        j["pairs"] = std::move(list);
        j["matches_criterion"] = pairs == expected;
        emit(out, j);
      }
    } else if (convolve_cmd->parsed()) {
      const auto stats = pgl2::convolution_census(l1, m1, l2, m2, prec, samples, seed);
      const int stated = pgl2::convolution_label_stated(l1, m1, l2, m2);
      const int exchanged = pgl2::convolution_label_exchanged(l1, m1, l2, m2);
      if (table) {
        out << "Gr^" << l1 << " S^" << m1 << " * Gr^" << l2 << " S^" << m2 << ", " << samples
            << " samples at precision " << prec << "\n  orbit labels:";
        for (const auto& [label, count] : stats.orbit_labels) out << " " << label << "x" << count;
        out << "\n  iwasawa labels:";
        for (const auto& [label, count] : stats.iwasawa_labels) out << " " << label << "x" << count;
        out << "\n  max{l1-m2, m1+l2} = " << stated << ", max{l2-m1, l1+m2} = " << exchanged
            << "\n";
      } else {
        ojson labels = ojson::object();
        for (const auto& [label, count] : stats.orbit_labels) labels[std::to_string(label)] = count;
        ojson iwasawa = ojson::object();
        for (const auto& [label, count] : stats.iwasawa_labels) {
          iwasawa[std::to_string(label)] = count;
        }
        ojson j;
        j["l1"] = l1;
        j["m1"] = m1;
        j["l2"] = l2;
        j["m2"] = m2;
        j["labels"] = std::move(labels);
        j["iwasawa"] = std::move(iwasawa);
        j["generic"] = stats.generic_label;
        j["max_l1_minus_m2_m1_plus_l2"] = stated;
        j["max_l2_minus_m1_l1_plus_m2"] = exchanged;
        emit(out, j);
      }
    } else if (crystal_cmd->parsed()) {
      const Crystal b = pgl2::crystal_from_pgl2(l, prec);
      write_or_print(pgl2_out, serialize_crystal(b), out);
    } else if (params_cmd->parsed()) {
      const int count = pgl2::stratum_parameter_count(l, m, prec);
      const RootDatum a1 = RootDatum::from_type("A1");
      const Rational bound = a1.two_rho_pairing(Weight{l} + Weight{m}) / 2;
      if (table) {
        out << "S^" << m << " meet Gr^" << l << ": " << count << " free parameter(s), "
            << "<l+m, rho> = " << bound.get_str() << "\n";
      } else {
        ojson j;
        j["l"] = l;
        j["m"] = m;
        j["count"] = count;
        j["pairing"] = bound.get_str();
        emit(out, j);
      }
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace crystals
