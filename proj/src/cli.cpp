#include "equilocal/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "equilocal/consistency.hpp"
#include "equilocal/errors.hpp"
#include "equilocal/examples.hpp"
#include "equilocal/genus.hpp"
#include "equilocal/json_io.hpp"
#include "equilocal/localization.hpp"
#include "equilocal/multigraph.hpp"
#include "equilocal/search.hpp"

namespace equilocal::cli {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError(path, "cannot open file");
  buffer << file.rdbuf();
  return buffer.str();
}

FixedPointData load(const std::string& path, std::istream& in) {
  return parse_fixed_point_data(read_source(path, in));
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError(path, "cannot open file for writing");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

unsigned default_jobs() {
  if (const char* env = std::getenv("EQUILOCAL_JOBS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return 1;
}

int run_verify(const FixedPointData& d, std::ostream& out, std::ostream& err) {
  const auto reports = run_all_filters(d);
  Json filters = Json::array();
  std::vector<std::string> failed;
  for (const auto& r : reports) {
    filters.push_back(to_json(r));
    if (r.failed()) failed.push_back(r.name);
  }
  out << dump({{"filters", std::move(filters)}, {"passed", failed.empty()}});
  if (failed.empty()) {
    err << "verify: all " << reports.size() << " filters pass or do not apply\n";
    return kExitOk;
  }
  err << "verify: " << failed.size() << " filter(s) failed:";
  for (const auto& name : failed) err << ' ' << name;
  err << '\n';
  return kExitFilterFailure;
}

int run_genus(const FixedPointData& d, std::ostream& out, std::ostream& err) {
  const GenusPolynomial counts = genus_via_counts(d);
  const IndexFormulaResult index = genus_via_index_formula(d);
  Json index_json;
  bool agree = false;
  if (const auto* gp = std::get_if<GenusPolynomial>(&index)) {
    index_json = {{"coefficients", gp->coefficients}};
    agree = *gp == counts;
  } else {
    const auto& nc = std::get<NotConstant>(index);
    index_json = {{"not_constant", {{"index", nc.index}, {"value", nc.value.to_string()}}}};
  }
  const auto spec = genus_specializations(counts);
  out << dump({{"counts", {{"coefficients", counts.coefficients}}},
               {"index_formula", std::move(index_json)},
               {"agree", agree},
               {"todd", spec.todd},
               {"signature", spec.signature},
               {"euler", spec.euler}});
  err << "genus: chi^i = (-1)^i N_i gives [";
  for (std::size_t i = 0; i < counts.coefficients.size(); ++i)
    err << (i ? ", " : "") << counts.coefficients[i];
  err << "]; index formula " << (agree ? "agrees" : "does not agree") << '\n';
  return kExitOk;
}

int run_chern(const FixedPointData& d, std::ostream& out, std::ostream& err) {
  Json numbers = Json::object();
  for (int degree = 1; degree <= d.n(); ++degree)
    for (const auto& lambda : partitions_of(degree, d.n()))
      numbers[lambda.to_string()] = to_string(localization_sum(d, lambda));
  Json result = {{"n", d.n()}, {"numbers", std::move(numbers)}};
  if (d.n() == 4) {
    const auto c = chern_numbers_dim8(d);
    const auto t = ty_genus_from_chern(c);
    result["dim8"] = to_json(c);
    result["ty_from_chern"] = {to_string(t[0]), to_string(t[1]), to_string(t[2])};
  }
  out << dump(result);
  err << "chern: " << result["numbers"].size() << " localization sums over partitions of degree <= " << d.n()
      << '\n';
  return kExitOk;
}

int run_graph(const FixedPointData& d, const std::string& dot_path, std::ostream& out, std::ostream& err) {
  if (check_hattori(d).failed()) {
    out << dump({{"graph", nullptr}, {"reason", "Hattori pairing fails"}});
    err << "graph: Hattori pairing fails, no describing multigraph\n";
    return kExitFilterFailure;
  }
  const auto g = find_describing_multigraph(d);
  if (!g) {
    out << dump({{"graph", nullptr}, {"reason", "no multigraph meets the level and congruence conditions"}});
    err << "graph: no describing multigraph\n";
    return kExitFilterFailure;
  }
  const FilterReport lemma = verify_lemma28(*g, d);
  Json result = {{"graph", to_json(*g)}, {"lemma28", to_json(lemma)}};
  const auto shape = figure1_shape(*g, d);
  result["figure1_m"] = shape ? Json(*shape) : Json(nullptr);
  if (!dot_path.empty()) write_text(dot_path, emit_dot(*g), out);
  out << dump(result);
  err << "graph: " << g->edges().size() << " edges; lemma28 " << to_string(lemma.status) << '\n';
  return lemma.failed() ? kExitFilterFailure : kExitOk;
}

struct SearchArgs {
  Weight max_weight = 0;
  unsigned jobs = 1;
  std::string out_path;
  bool progress = false;
};

int run_search_command(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  SearchOptions options;
  options.max_weight = args.max_weight;
  options.jobs = args.jobs;
  if (args.progress) options.progress = [&err](std::string_view line) { err << "search: " << line << '\n'; };
  int code = kExitOk;
  SearchReport report;
  std::vector<Breach> breaches;
  try {
    report = case_elimination_report(options);
  } catch (const AssertionBreach& breach) {
    report = breach.report();
    breaches = breach.breaches();
    code = kExitAssertionBreach;
  }
  write_text(args.out_path, dump(to_json(report, breaches)), out);
  std::size_t agree = 0;
  for (const auto& s : report.survivors) agree += s.weights_agree_up_to_sign ? 1 : 0;
  err << "search: W=" << report.weight_bound << ", " << report.candidates_enumerated << " candidates, "
      << report.eliminated_total() << " eliminated, " << report.survivors.size() << " survivors ("
      << agree << " with weights agreeing up to sign), " << breaches.size() << " breaches\n";
  return code;
}

struct ExampleArgs {
  std::string name;
  Weight a = 1, b = 1, c = 1, d = 1;
  std::string variant = "I";
  std::string out_path;
};

FixedPointData build_example(const ExampleArgs& e) {
  namespace ex = examples;
  if (e.name == "sphere") return ex::sphere(e.a);
  if (e.name == "s6") return ex::s6(e.b, e.c);
  if (e.name == "cp2") return ex::cp2(e.a, e.b);
  if (e.name == "hirzebruch")
    return ex::hirzebruch(e.a, e.b, e.c, e.variant == "II" ? ex::HirzebruchVariant::II : ex::HirzebruchVariant::I);
  if (e.name == "s2xs6") return ex::s2xs6(e.a, e.b, e.c);
  if (e.name == "s6xs6") return ex::s6xs6(e.a, e.b, e.c, e.d);
  throw PreconditionViolation("unknown example '" + e.name + "'");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fixed-point computations for circle actions", "equilocal"};
  app.require_subcommand(1);

  std::string file;
  std::string dot_path;
  auto add_file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "fixed-point data JSON, or - for standard input")->required();
    return sub;
  };
  auto* verify = add_file_command("verify", "run every consistency filter");
  auto* genus = add_file_command("genus", "chi_y genus by fixed-point counts and by the index formula");
  auto* chern = add_file_command("chern", "Chern numbers by localization");
  auto* graph = add_file_command("graph", "find and check a describing multigraph");
  graph->add_option("--dot", dot_path, "also write the graph in DOT format");

  SearchArgs search_args;
  search_args.jobs = default_jobs();
  auto* search = app.add_subcommand("search", "bounded search over 4-point data in dimension 8");
  search->add_option("--max-weight", search_args.max_weight, "largest weight label")
      ->required()
      ->check(CLI::Range(Weight{1}, Weight{1000}));
  search->add_option("--jobs", search_args.jobs, "worker threads (default EQUILOCAL_JOBS or 1)")
      ->check(CLI::Range(1u, 1024u));
  search->add_option("--out", search_args.out_path, "write the report here instead of standard output");
  search->add_flag("--progress", search_args.progress, "progress lines on standard error");

  ExampleArgs example_args;
  auto* example = app.add_subcommand("example", "fixed-point data of a known action");
  example->add_option("name", example_args.name, "sphere, s6, cp2, hirzebruch, s2xs6 or s6xs6")
      ->required()
      ->check(CLI::IsMember({"sphere", "s6", "cp2", "hirzebruch", "s2xs6", "s6xs6"}));
  example->add_option("--a", example_args.a, "parameter a");
  example->add_option("--b", example_args.b, "parameter b");
  example->add_option("--c", example_args.c, "parameter c");
  example->add_option("--d", example_args.d, "parameter d (s6xs6: b of the second factor)");
  example->add_option("--variant", example_args.variant, "hirzebruch variant")->check(CLI::IsMember({"I", "II"}));
  example->add_option("--out", example_args.out_path, "write here instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return run_verify(load(file, in), out, err);
    if (*genus) return run_genus(load(file, in), out, err);
    if (*chern) return run_chern(load(file, in), out, err);
    if (*graph) return run_graph(load(file, in), dot_path, out, err);
    if (*search) return run_search_command(search_args, out, err);
    if (*example) {
      write_text(example_args.out_path, serialize_fixed_point_data(build_example(example_args)), out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace equilocal::cli
