#include "voa24/algebra_io.hpp"
#include "voa24/catalog.hpp"
#include "voa24/orbifold.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace voa24;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  std::string format = "text";
  int parallel = 1;
  bool oracle = false;
  long bound = kDefaultBound;
};

void emit(const GlobalOpts& g, const json& doc, const std::string& text) {
  if (g.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int run_verify(const GlobalOpts& g, const std::string& case_id) {
  std::vector<const CaseRow*> selected;
  if (case_id == "all") {
    for (const auto& row : rows()) selected.push_back(&row);
  } else {
    const CaseRow* row = find_row(case_id);
    if (!row) {
      std::cerr << "unknown case '" << case_id << "'\n";
      return kExitUsage;
    }
    selected.push_back(row);
  }

  VerifyOptions opts;
  opts.bound = g.bound;
  opts.workers = 1;  // row-level parallelism below
  opts.oracle = g.oracle;

  std::vector<VerificationReport> reports(selected.size());
  if (g.parallel > 1 && selected.size() > 1) {
    std::vector<std::future<VerificationReport>> futs;
    for (const CaseRow* row : selected)
      futs.push_back(std::async(std::launch::async,
                                [row, opts] { return verify_case(*row, opts); }));
    for (size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
  } else {
    VerifyOptions seq = opts;
    seq.workers = g.parallel;
    for (size_t i = 0; i < selected.size(); ++i)
      reports[i] = verify_case(*selected[i], seq);
  }

  bool all_pass = true;
  for (const auto& rep : reports)
    if (!rep.verdict) all_pass = false;

  if (g.format == "json") {
    if (reports.size() == 1) {
      std::cout << report_json(reports[0]).dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& rep : reports) arr.push_back(report_json(rep));
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (const auto& rep : reports) std::cout << report_text(rep);
    std::cout << (all_pass ? "all selected cases PASS" : "some cases FAIL") << "\n";
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

int run_search(const GlobalOpts& g, const std::string& spec) {
  const SemisimpleAlgebra algebra = parse_algebra(spec);
  SearchOptions opts;
  opts.bound = g.bound;
  opts.workers = g.parallel;
  const CandidateSet cs = candidate_search(algebra, opts);
  emit(g, search_json(algebra, cs), search_text(algebra, cs));
  return kExitOk;
}

int run_weights(const GlobalOpts& g, const std::string& type_text, long level) {
  const SemisimpleAlgebra one = parse_algebra(type_text + "," + std::to_string(level));
  if (one.ideals.size() != 1) {
    std::cerr << "weights expects a single simple type\n";
    return kExitUsage;
  }
  const LeveledSimple s = one.ideals[0];
  const auto list = dominant_weights(s, g.bound);
  json doc;
  doc["type"] = type_name(s.type);
  doc["level"] = s.level;
  doc["count"] = static_cast<long>(list.size());
  doc["weights"] = json::array();
  std::ostringstream os;
  os << type_name(s.type) << " at level " << s.level << ": " << list.size()
     << " dominant weights\n";
  for (const auto& w : list) {
    const Rational cw = conformal_weight(s, w);
    doc["weights"].push_back({{"coords", weight_coords(w)},
                              {"weight", print_weight(w)},
                              {"level", highest_root_pairing(s.type, w)},
                              {"conformal_weight", to_string(cw)}});
    os << "  " << print_weight(w) << "  [" << weight_coords(w)
       << "]  level " << highest_root_pairing(s.type, w) << "  h = "
       << to_string(cw) << "\n";
  }
  emit(g, doc, os.str());
  return kExitOk;
}

int run_fixed(const GlobalOpts& g, const std::string& type_text) {
  const SemisimpleAlgebra one = parse_algebra(type_text + ",1");
  if (one.ideals.size() != 1) {
    std::cerr << "fixed expects a single simple type\n";
    return kExitUsage;
  }
  const SimpleType t = one.ideals[0].type;
  const auto& options = fixed_options(t);
  json doc;
  doc["type"] = type_name(t);
  doc["options"] = json::array();
  std::ostringstream os;
  bool first = true;
  for (const auto& option : options) {
    json names = json::array();
    std::string joined;
    for (size_t i = 0; i < option.size(); ++i) {
      names.push_back(type_name(option[i]));
      if (i) joined += "+";
      joined += type_name(option[i]);
    }
    doc["options"].push_back(names);
    if (!first) os << " | ";
    os << joined;
    first = false;
  }
  if (first) os << "(none)";
  os << "\n";
  emit(g, doc, os.str());
  return kExitOk;
}

int run_dim(const GlobalOpts& g, const std::string& type_text, const std::string& coords) {
  const SemisimpleAlgebra one = parse_algebra(type_text + ",1");
  if (one.ideals.size() != 1) {
    std::cerr << "dim expects a single simple type\n";
    return kExitUsage;
  }
  const SimpleType t = one.ideals[0].type;
  const Weight w = parse_weight(coords, t.rank);
  const long d = weyl_dim(t, w);
  json doc;
  doc["type"] = type_name(t);
  doc["weight"] = weight_coords(w);
  doc["dim"] = d;
  emit(g, doc, std::to_string(d) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for weight-one Lie algebra data of "
               "holomorphic vertex operator algebras of central charge 24"};
  app.require_subcommand(0, 1);

  GlobalOpts g;
  std::string catalog_export;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--parallel", g.parallel, "number of enumeration workers")
      ->check(CLI::PositiveNumber);
  app.add_flag("--oracle", g.oracle, "enable brute-force cross-checks");
  app.add_option("--bound", g.bound, "resource guard for enumerations")
      ->check(CLI::PositiveNumber);
  app.add_option("--catalog-export", catalog_export,
                 "write the catalog JSON document to PATH");

  std::string verify_case_id = "all";
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("case", verify_case_id, "case id (e.g. A:n=12) or 'all'");

  std::string search_spec;
  CLI::App* search = app.add_subcommand("search", "classify the orbifold weight-one algebra");
  search->add_option("algebra", search_spec, "algebra, e.g. \"A1,4^12\"")->required();

  std::string weights_type;
  long weights_level = 1;
  CLI::App* weights = app.add_subcommand("weights", "list admissible dominant weights");
  weights->add_option("type", weights_type, "simple type, e.g. B2")->required();
  weights->add_option("level", weights_level, "level")->required();

  std::string fixed_type;
  CLI::App* fixed = app.add_subcommand("fixed", "order-2 fixed-point subalgebra types");
  fixed->add_option("type", fixed_type, "simple type, e.g. E6")->required();

  std::string dim_type, dim_coords;
  CLI::App* dim = app.add_subcommand("dim", "irreducible module dimension");
  dim->add_option("type", dim_type, "simple type, e.g. B12")->required();
  dim->add_option("weight", dim_coords, "comma-separated fundamental coordinates")
      ->required();

  for (CLI::App* sub : {verify, search, weights, fixed, dim}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!catalog_export.empty()) {
      std::ofstream out(catalog_export);
      if (!out) {
        std::cerr << "cannot write '" << catalog_export << "'\n";
        return kExitUsage;
      }
      out << catalog_json().dump(2) << "\n";
      if (app.get_subcommands().empty()) return kExitOk;
    }
    if (verify->parsed()) return run_verify(g, verify_case_id);
    if (search->parsed()) return run_search(g, search_spec);
    if (weights->parsed()) return run_weights(g, weights_type, weights_level);
    if (fixed->parsed()) return run_fixed(g, fixed_type);
    if (dim->parsed()) return run_dim(g, dim_type, dim_coords);
    if (catalog_export.empty()) std::cout << app.help();
    return kExitOk;
  } catch (const ResourceGuard& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
