#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "g2grad/json_io.hpp"
#include "g2grad/selfcheck.hpp"

namespace {

using g2grad::Json;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("cannot parse '" + path +
                                "': " + std::string(e.what()));
  }
}

void emit(const Json& j, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write file '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
  std::cout << j.dump(2) << "\n";
}

std::vector<int> parse_int_list(const std::string& spec,
                                const std::string& what) {
  std::vector<int> out;
  std::string piece;
  std::istringstream in(spec);
  while (std::getline(in, piece, ',')) {
    try {
      size_t used = 0;
      const int value = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument("");
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad " + what + " entry '" + piece + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(what + " must not be empty");
  return out;
}

g2grad::AbelianGroup parse_group_spec(const std::string& spec) {
  return g2grad::AbelianGroup(parse_int_list(spec, "group factor"));
}

std::pair<std::string, g2grad::GroupElement> parse_param_spec(
    const std::string& spec) {
  const size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw std::invalid_argument("parameter must look like g=1,0; got '" +
                                spec + "'");
  // Residues may be written bare (g=1,0) or bracketed (g=[1,0]).
  std::string value = spec.substr(eq + 1);
  if (value.size() >= 2 && value.front() == '[' && value.back() == ']')
    value = value.substr(1, value.size() - 2);
  return {spec.substr(0, eq), parse_int_list(value, "parameter residue")};
}

int run_selfcheck_cmd(unsigned seed) {
  const g2grad::SelfCheckReport report = g2grad::run_selfcheck(seed);
  for (const auto& item : report.items)
    std::cerr << (item.ok ? "[ok]   " : "[FAIL] ") << item.name << ": "
              << item.detail << "\n";
  emit(g2grad::selfcheck_to_json(report), "");
  return report.ok ? 0 : 1;
}

int run_table_cmd() {
  Json out;
  Json names = Json::array();
  for (int i = 0; i < g2grad::kOctDim; ++i)
    names.push_back(g2grad::oct_basis_name(i));
  out["basis"] = names;
  Json rows = Json::array();
  for (int i = 0; i < g2grad::kOctDim; ++i) {
    Json row = Json::array();
    for (int j = 0; j < g2grad::kOctDim; ++j) {
      int sign = 0;
      const int index = g2grad::table_product(i, j, &sign);
      if (sign == 0)
        row.push_back("0");
      else
        row.push_back(std::string(sign < 0 ? "-" : "") +
                      g2grad::oct_basis_name(index));
    }
    rows.push_back(row);
  }
  out["products"] = rows;
  emit(out, "");
  return 0;
}

int run_new_cmd(int type, const std::string& group_spec,
                const std::vector<std::string>& param_specs,
                const std::string& out_path) {
  const g2grad::AbelianGroup group = parse_group_spec(group_spec);
  g2grad::GradingDescriptor desc;
  desc.type = type;
  for (const auto& spec : param_specs) {
    auto [name, value] = parse_param_spec(spec);
    if (!desc.params.emplace(name, value).second)
      throw std::invalid_argument("duplicate parameter '" + name + "'");
  }
  const g2grad::Grading g = g2grad::canonical_c_grading(group, desc);
  std::cerr << "constructed type " << type << " grading with "
            << g.components.size() << " components\n";
  emit(g2grad::grading_to_json(g, &desc), out_path);
  return 0;
}

int run_verify_cmd(const std::string& path) {
  const g2grad::Grading g = g2grad::grading_from_json(read_json_file(path));
  const g2grad::VerifyReport report = g2grad::verify_grading(g);
  emit(g2grad::verify_report_to_json(report), "");
  return report.ok ? 0 : 1;
}

int run_induce_cmd(const std::string& path, const std::string& out_path) {
  const g2grad::Grading c = g2grad::grading_from_json(read_json_file(path));
  const g2grad::Grading l = g2grad::induce_on_L(c);
  std::cerr << "induced grading has " << l.components.size()
            << " components on the 14-dimensional derivation algebra\n";
  emit(g2grad::grading_to_json(l), out_path);
  return 0;
}

int run_classify_cmd(const std::string& path) {
  const g2grad::Grading g = g2grad::grading_from_json(read_json_file(path));
  const g2grad::Classification c = g2grad::classify_c_grading(g);
  emit(g2grad::classification_to_json(c), "");
  return c.recognized ? 0 : 1;
}

int run_iso_cmd(const std::string& path_a, const std::string& path_b) {
  const g2grad::Grading a = g2grad::grading_from_json(read_json_file(path_a));
  const g2grad::Grading b = g2grad::grading_from_json(read_json_file(path_b));
  emit(g2grad::iso_result_to_json(g2grad::iso_check(a, b)), "");
  return 0;
}

int run_chars_cmd(const std::string& group_spec,
                  const std::string& grading_path) {
  std::optional<g2grad::Grading> grading;
  g2grad::AbelianGroup group;
  if (!grading_path.empty()) {
    grading = g2grad::grading_from_json(read_json_file(grading_path));
    group = grading->group;
    if (!group_spec.empty() && parse_group_spec(group_spec) != group)
      throw std::invalid_argument(
          "--group disagrees with the group stored in the grading file");
  } else if (!group_spec.empty()) {
    group = parse_group_spec(group_spec);
  } else {
    throw std::invalid_argument("chars needs --group or --grading");
  }

  Json out;
  out["group"] = g2grad::group_to_json(group);
  Json entries = Json::array();
  for (const auto& chi : g2grad::characters(group)) {
    Json entry;
    entry["exponents"] = Json(chi.exponents);
    if (grading)
      entry["matrix"] = g2grad::matrix_to_json(
          g2grad::character_automorphism(*grading, chi));
    entries.push_back(entry);
  }
  out["characters"] = entries;
  emit(out, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for split octonion and G2 gradings"};
  app.require_subcommand(1);

  auto* sc_self = app.add_subcommand("selfcheck", "run the consistency audit");
  unsigned seed = 20240915u;
  sc_self->add_option("--seed", seed, "seed for the random samples");

  auto* sc_table =
      app.add_subcommand("table", "print the multiplication table");

  auto* sc_grading =
      app.add_subcommand("grading", "construct and analyze gradings");
  sc_grading->require_subcommand(1);

  auto* sc_new =
      sc_grading->add_subcommand("new", "construct a canonical grading");
  int new_type = 0;
  std::string new_group, new_out;
  std::vector<std::string> new_params;
  sc_new->add_option("--type", new_type, "grading type, 1..9")->required();
  sc_new->add_option("--group", new_group, "group factors, e.g. 4,2")
      ->required();
  sc_new->add_option("--param", new_params,
                     "named parameter, e.g. g=1,0 (repeatable)");
  sc_new->add_option("-o,--output", new_out, "also write the JSON to a file");

  auto* sc_verify =
      sc_grading->add_subcommand("verify", "check the grading axioms");
  std::string verify_path;
  sc_verify->add_option("file", verify_path, "grading JSON file")->required();

  auto* sc_induce = sc_grading->add_subcommand(
      "induce", "transfer an octonion grading to the derivation algebra");
  std::string induce_path, induce_out;
  sc_induce->add_option("file", induce_path, "grading JSON file")->required();
  sc_induce->add_option("-o,--output", induce_out,
                        "also write the JSON to a file");

  auto* sc_classify = sc_grading->add_subcommand(
      "classify", "match an octonion grading against the canonical families");
  std::string classify_path;
  sc_classify->add_option("file", classify_path, "grading JSON file")
      ->required();

  auto* sc_iso = sc_grading->add_subcommand(
      "iso", "compare two octonion gradings up to isomorphism");
  std::string iso_a, iso_b;
  sc_iso->add_option("first", iso_a, "grading JSON file")->required();
  sc_iso->add_option("second", iso_b, "grading JSON file")->required();

  auto* sc_chars =
      app.add_subcommand("chars", "list characters and their automorphisms");
  std::string chars_group, chars_grading;
  sc_chars->add_option("--group", chars_group, "group factors, e.g. 2,2");
  sc_chars->add_option("--grading", chars_grading,
                       "grading JSON file for automorphism matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sc_self)) return run_selfcheck_cmd(seed);
    if (app.got_subcommand(sc_table)) return run_table_cmd();
    if (app.got_subcommand(sc_chars))
      return run_chars_cmd(chars_group, chars_grading);
    if (app.got_subcommand(sc_grading)) {
      if (sc_grading->got_subcommand(sc_new))
        return run_new_cmd(new_type, new_group, new_params, new_out);
      if (sc_grading->got_subcommand(sc_verify))
        return run_verify_cmd(verify_path);
      if (sc_grading->got_subcommand(sc_induce))
        return run_induce_cmd(induce_path, induce_out);
      if (sc_grading->got_subcommand(sc_classify))
        return run_classify_cmd(classify_path);
      if (sc_grading->got_subcommand(sc_iso)) return run_iso_cmd(iso_a, iso_b);
    }
    throw std::logic_error("no subcommand dispatched");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
