#include "msla/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msla/g2.hpp"
#include "msla/multisym.hpp"
#include "msla/serialize.hpp"
#include "msla/verify.hpp"

namespace msla {
namespace {

// Problems with an input document (unreadable, malformed JSON, bad
// content) map to exit code 2; semantic violations keep their
// std::invalid_argument type and map to exit code 3.
struct BadDocument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadDocument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw BadDocument(std::string(e.what()));
  }
}

template <typename F>
auto parse_doc(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw BadDocument(std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw BadDocument(std::string(e.what()));
  }
}

void emit(const Json& payload, const std::string& out_path) {
  const std::string text = payload.dump(2);
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << text << "\n";
}

FormPackage load_form(const std::string& form_path) {
  if (form_path.empty()) return FormPackage{standard_phi(), std::nullopt};
  return parse_doc(
      [&] { return form_package_from_json(read_json_file(form_path)); });
}

Subspace load_subspace(const std::string& in_path) {
  return parse_doc([&] { return subspace_from_json(read_json_file(in_path)); });
}

Json generic_classification(const FormPackage& pkg, const Subspace& w) {
  const MultisymplecticSpace sp(pkg.form);
  if (w.ambient() != static_cast<std::size_t>(sp.ambient()))
    throw std::invalid_argument(
        "classify: subspace and form ambient dimensions differ");
  Json j;
  j["mode"] = "generic";
  j["ambient"] = sp.ambient();
  j["degree"] = sp.degree();
  j["dim"] = w.dim();
  j["restricted_kernel_dim"] = restricted_kernel(sp, w).dim();
  j["multisymplectic"] = is_multisymplectic_subspace(sp, w);
  Json depths = Json::array();
  for (int l = 1; l <= sp.k(); ++l) {
    const TypeIPredicates p = type_i_predicates(sp, w, l);
    Json d;
    d["l"] = l;
    d["complement_dim"] = type_i_complement(sp, w, l).dim();
    d["isotropic"] = p.isotropic;
    d["coisotropic"] = p.coisotropic;
    d["lagrangian"] = p.lagrangian;
    d["type_ii_isotropic"] = type_ii_isotropic(sp, w, l);
    d["type_ii_span_dim"] = type_ii_complement(sp, w, l).span.dim();
    depths.push_back(d);
  }
  j["depths"] = depths;
  j["fully_nondegenerate"] = verdict_to_json(fully_nondegenerate_on(sp, w, 64, 17));
  return j;
}

int cmd_classify(const std::string& in_path, const std::string& form_path,
                 const std::string& out_path) {
  const Subspace w = load_subspace(in_path);
  const FormPackage pkg = load_form(form_path);
  Json payload;
  if (w.dim() == 0) {
    payload["mode"] = "trivial";
    payload["dim"] = 0;
    payload["note"] =
        "the zero subspace is isotropic at every depth and grade";
  } else {
    std::optional<G2Space> g2;
    if (pkg.form.grade() == 3 && pkg.form.ambient() == 7 &&
        w.ambient() == 7) {
      try {
        g2.emplace(G2Space::from_form(
            pkg.form, pkg.volume.value_or(standard_volume(7))));
      } catch (const std::invalid_argument&) {
        // Not a cross-product form; fall through to the generic report.
      }
    }
    if (g2.has_value()) {
      payload = classification_to_json(classify_g2_subspace(*g2, w));
      payload["mode"] = "g2";
    } else {
      payload = generic_classification(pkg, w);
    }
  }
  emit(payload, out_path);
  return 0;
}

int cmd_complement(const std::string& in_path, const std::string& form_path,
                   int l, const std::string& type,
                   const std::string& out_path) {
  const Subspace w = load_subspace(in_path);
  const FormPackage pkg = load_form(form_path);
  const MultisymplecticSpace sp(pkg.form);
  if (w.ambient() != static_cast<std::size_t>(sp.ambient()))
    throw std::invalid_argument(
        "complement: subspace and form ambient dimensions differ");
  Json payload;
  if (type == "i") {
    payload["type"] = "i";
    payload["l"] = l;
    payload["complement"] = subspace_to_json(type_i_complement(sp, w, l));
  } else {
    const TypeIIComplement c = type_ii_complement(sp, w, l);
    payload["type"] = "ii";
    payload["grade"] = c.grade;
    payload["span"] = subspace_to_json(c.span);
    payload["note"] =
        "span of the decomposable second-kind complement, in lexicographic "
        "blade coordinates of the grade-" +
        std::to_string(l) + " exterior power";
  }
  emit(payload, out_path);
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t trials,
               std::uint64_t seed, const std::string& out_path) {
  const std::vector<std::string>& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::cerr << "unknown suite '" << suite << "'; available:";
    for (const std::string& n : names) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.trials = trials;
  cfg.seed = seed;
  const SuiteReport rep = run_suite(cfg);
  std::ostringstream line;
  line << "suite " << rep.suite << ": trials="
       << rep.passed + rep.failed + rep.unknown << " passed=" << rep.passed
       << " failed=" << rep.failed << " unknown=" << rep.unknown << " ("
       << std::fixed << std::setprecision(1) << rep.wall_ms << " ms)";
  std::cout << line.str() << "\n";
  const std::size_t shown = std::min<std::size_t>(rep.failures.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const TrialFailure& f = rep.failures[i];
    std::cout << "  trial " << f.trial << " [" << f.input
              << "]: expected " << f.expected << "; got " << f.got << "\n";
  }
  if (rep.failures.size() > shown)
    std::cout << "  ... and " << rep.failures.size() - shown
              << " more failures\n";
  if (!out_path.empty()) emit(report_to_json(rep), out_path);
  return rep.failed > 0 ? 1 : 0;
}

std::string render_vector(const std::vector<Rational>& v) {
  int nonzero = 0;
  std::size_t where = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      ++nonzero;
      where = i;
    }
  }
  if (nonzero == 0) return "0";
  if (nonzero == 1) {
    const std::string base = "e" + std::to_string(where + 1);
    if (v[where] == 1) return base;
    if (v[where] == -1) return "-" + base;
    return rational_to_string(v[where]) + "*" + base;
  }
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rational_to_string(v[i]);
  }
  return out + ")";
}

int cmd_cross_table(const std::string& form_path,
                    const std::string& out_path) {
  const FormPackage pkg = load_form(form_path);
  if (pkg.form.grade() != 3 || pkg.form.ambient() != 7)
    throw std::invalid_argument(
        "cross-table: need a degree-3 form on a 7-dimensional space");
  const G2Space s =
      G2Space::from_form(pkg.form, pkg.volume.value_or(standard_volume(7)));

  std::vector<std::vector<std::string>> cells(7, std::vector<std::string>(7));
  std::size_t width = 2;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          render_vector(s.basis_cross(i, j));
      width = std::max(
          width,
          cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
              .size());
    }
  std::cout << "basis cross products (row x column)\n    ";
  for (int j = 0; j < 7; ++j)
    std::cout << std::setw(static_cast<int>(width) + 1)
              << "e" + std::to_string(j + 1);
  std::cout << "\n";
  for (int i = 0; i < 7; ++i) {
    std::cout << std::setw(3) << "e" + std::to_string(i + 1) << " ";
    for (int j = 0; j < 7; ++j)
      std::cout << std::setw(static_cast<int>(width) + 1)
                << cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::cout << "\n";
  }

  if (!out_path.empty()) {
    Json table = Json::array();
    for (int i = 0; i < 7; ++i) {
      Json row = Json::array();
      for (int j = 0; j < 7; ++j) {
        Json entry = Json::array();
        for (const Rational& q : s.basis_cross(i, j))
          entry.push_back(rational_to_string(q));
        row.push_back(entry);
      }
      table.push_back(row);
    }
    Json metric = Json::array();
    for (std::size_t i = 0; i < 7; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < 7; ++j)
        row.push_back(rational_to_string(s.metric().at(i, j)));
      metric.push_back(row);
    }
    Json payload;
    payload["table"] = table;
    payload["metric"] = metric;
    emit(payload, out_path);
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "exact linear algebra of alternating forms: orthogonal complements, "
      "subspace classification, randomized property verification"};
  app.require_subcommand(1);

  std::string in_path;
  std::string form_path;
  std::string out_path;
  int l = 1;
  std::string type = "i";
  std::string suite;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;

  CLI::App* classify =
      app.add_subcommand("classify", "classify a subspace against a form");
  classify->add_option("--input", in_path, "subspace JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  classify
      ->add_option("--form", form_path,
                   "form JSON file; default is the reference degree-3 form "
                   "on Q^7")
      ->check(CLI::ExistingFile);
  classify->add_option("--out", out_path,
                       "write the JSON payload here instead of stdout");

  CLI::App* complement = app.add_subcommand(
      "complement", "orthogonal complement of a subspace at a depth/grade");
  complement->add_option("--input", in_path, "subspace JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  complement->add_option("--l", l, "depth (first kind) or grade (second kind)")
      ->check(CLI::PositiveNumber);
  complement->add_option("--type", type, "complement kind: i or ii")
      ->check(CLI::IsMember({"i", "ii"}));
  complement->add_option("--form", form_path, "form JSON file")
      ->check(CLI::ExistingFile);
  complement->add_option("--out", out_path,
                         "write the JSON payload here instead of stdout");

  CLI::App* verify =
      app.add_subcommand("verify", "run a randomized property suite");
  verify->add_option("--suite", suite, "suite name (see list on error)")
      ->required();
  verify->add_option("--trials", trials, "number of trials")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--out", out_path, "write the JSON report here");

  CLI::App* table = app.add_subcommand(
      "cross-table", "basis cross product table of a degree-3 form");
  table->add_option("--form", form_path, "form JSON file")
      ->check(CLI::ExistingFile);
  table->add_option("--out", out_path, "write the JSON payload here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(classify))
      return cmd_classify(in_path, form_path, out_path);
    if (app.got_subcommand(complement))
      return cmd_complement(in_path, form_path, l, type, out_path);
    if (app.got_subcommand(verify))
      return cmd_verify(suite, trials, seed, out_path);
    return cmd_cross_table(form_path, out_path);
  } catch (const BadDocument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace msla
