// asmkit command-line interface.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "asmkit/acceptance.hpp"
#include "asmkit/asmkit.hpp"

namespace {

using asmkit::Json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

void write_file(std::string const& path, std::string const& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Usage("cannot write '" + path + "'");
  out << bytes;
}

// Text form of a flat JSON result: one "key: value" line per field.
std::string as_text(Json const& j) {
  if (!j.is_object()) return j.is_string() ? j.get<std::string>() + "\n" : j.dump() + "\n";
  std::string s;
  for (auto const& [k, v] : j.items()) s += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return s;
}

asmkit::Rational parse_rational(std::string const& s) {
  try {
    return asmkit::Rational(s);
  } catch (std::exception const&) {
    throw Usage("not a rational number: '" + s + "'");
  }
}

struct Options {
  int threads = 0;
  std::string format = "json";

  // convert
  std::string from = "asm", to = "asm", input, matrix;
  // shared
  int n = 0;
  // count
  std::string method = "formula";
  // weight
  std::string x = "2", phase = "even";
  bool hybrid = false, distribution = false;
  // half
  std::string variant = "free", c;
  bool average = false;
  // symmetric
  std::string group;
  // hankel
  int coefficients = 0;
  // fpl
  bool histogram = false, wieland = false, wilson = false, nesting = false;
  // sample
  std::uint64_t seed = 42, max_window = std::uint64_t{1} << 40;
  std::string out;
  bool frozen = false;
  int cell = 8;
  // octahedron / cube
  int lambda = 1;
  std::string pairs;
  bool audit = false;
  // selftest
  std::vector<int> only;
};

Json cmd_convert(Options const& o, std::string& text_out) {
  std::string src;
  if (!o.matrix.empty()) src = o.matrix;
  else if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw Usage("cannot read '" + o.input + "'");
    src = read_all(in);
  } else {
    src = read_all(std::cin);
  }
  auto const a = asmkit::asm_from_input(src, asmkit::parse_kind(o.from));
  auto const to = asmkit::parse_kind(o.to);
  text_out = asmkit::convert_to_text(a, to);
  return asmkit::convert_to_json(a, to);
}

Json cmd_count(Options const& o) {
  asmkit::BigCount v;
  if (o.method == "formula") v = asmkit::count_formula(o.n);
  else if (o.method == "brute") v = asmkit::count_brute(o.n);
  else if (o.method == "transfer") v = asmkit::count_transfer(o.n);
  else v = asmkit::count_ideals(*asmkit::build_poset(o.n));
  return Json{{"n", o.n}, {"count", v.str()}};
}

Json cmd_weight(Options const& o) {
  if (o.hybrid) {
    auto const phase = o.phase == "even" ? asmkit::HybridPhase::OneOneEven : asmkit::HybridPhase::OneOneOdd;
    auto const r = asmkit::hybrid_2_enumeration(o.n, phase);
    return Json{{"n", o.n}, {"phase", o.phase}, {"value", r.value.str()}, {"twos", r.twos}, {"fives", r.fives}};
  }
  auto const x = parse_rational(o.x);
  auto const dist = asmkit::minus_one_distribution(o.n);
  Json j{{"n", o.n}, {"x", asmkit::to_decimal(x)}, {"value", asmkit::to_decimal(asmkit::evaluate(dist, x))}};
  if (o.distribution) {
    Json d = Json::array();
    for (auto const& c : dist) d.push_back(c.str());
    j["distribution"] = std::move(d);
  }
  return j;
}

Json cmd_half(Options const& o) {
  if (o.average) {
    auto const r = asmkit::half_average_property(o.n);
    Json rows = Json::array();
    for (auto const& s : r.by_k)
      rows.push_back(Json{{"k", s.k}, {"vectors", s.vectors}, {"total", s.total.str()},
                          {"average", asmkit::to_decimal(s.average)}});
    return Json{{"n", o.n}, {"by_k", std::move(rows)}, {"all_equal", r.all_equal}};
  }
  if (o.variant == "free")
    return Json{{"n", o.n}, {"variant", "free"}, {"value", asmkit::half_2_enumeration({o.n, asmkit::FreeBottom{}}).str()}};
  if (o.c.empty())
    return Json{{"n", o.n}, {"variant", "fixed"}, {"total", asmkit::half_2_enumeration_fixed_total(o.n).str()}};
  asmkit::FixedAlternating f;
  for (char ch : o.c) {
    if (ch != '+' && ch != '-') throw Usage("--c takes a string of + and -");
    f.c.push_back(ch == '+' ? 1 : -1);
  }
  asmkit::HalfSpec const spec{o.n, f};
  return Json{{"n", o.n}, {"variant", "fixed"}, {"c", o.c}, {"count", asmkit::half_count(spec).str()},
              {"value", asmkit::half_2_enumeration(spec).str()}};
}

Json cmd_symmetric(Options const& o) {
  if (!o.group.empty()) {
    auto g = asmkit::parse_group(o.group);
    if (!g) throw Usage("unknown symmetry group '" + o.group + "'");
    return Json{{"n", o.n}, {"group", o.group}, {"count", asmkit::count_symmetric(o.n, *g).str()}};
  }
  Json counts = Json::object();
  for (auto g : asmkit::kAllGroups) counts[std::string(asmkit::group_name(g))] = asmkit::count_symmetric(o.n, g).str();
  return Json{{"n", o.n}, {"counts", std::move(counts)}};
}

Json cmd_hankel(Options const& o) {
  auto const r = asmkit::hankel_identity(o.n);
  Json j{{"n", o.n}, {"determinant", r.determinant.str()}, {"expected", r.expected.str()}, {"equal", r.equal}};
  if (o.coefficients > 0) {
    Json c = Json::array();
    for (auto const& v : asmkit::catalan3_coefficients(o.coefficients)) c.push_back(v.str());
    j["coefficients"] = std::move(c);
  }
  return j;
}

Json cmd_fpl(Options const& o) {
  if (o.n > 7) throw Usage("fpl supports --n up to 7");
  if (o.wieland) {
    auto const r = asmkit::wieland_check(o.n);
    return Json{{"n", o.n}, {"rotation_invariant", r.rotation_invariant},
                {"reflection_invariant", r.reflection_invariant}, {"patterns", r.histogram.size()}};
  }
  if (o.wilson) {
    auto const r = asmkit::wilson_fraction(o.n);
    return Json{{"n", o.n}, {"count", r.count.str()}, {"predicted", asmkit::to_decimal(r.predicted)},
                {"prediction_integral", r.prediction_integral}, {"equal", r.equal}};
  }
  if (o.nesting) {
    auto const r = asmkit::nesting_check(o.n);
    return Json{{"n", o.n}, {"count", r.count.str()}, {"expected", r.expected.str()}, {"equal", r.equal}};
  }
  Json h = Json::object();
  for (auto const& [p, c] : asmkit::count_by_link_pattern(o.n)) h[p.key()] = c.str();
  return Json{{"n", o.n}, {"histogram", std::move(h)}};
}

Json cmd_sample(Options const& o, std::string& raw_out) {
  asmkit::CftpOptions opt;
  opt.max_window = o.max_window;
  auto const r = asmkit::cftp_run(o.n, asmkit::RandomSource(o.seed), opt);
  auto const h = asmkit::asm_to_height(r.sample);
  if (o.format == "json") {
    Json j{{"n", o.n}, {"seed", o.seed}, {"coalescence_time", r.coalescence_time}, {"steps", r.steps},
           {"asm", r.sample.entries().to_rows()}};
    if (o.frozen) j["frozen"] = asmkit::frozen_map(h).flags().to_rows();
    return j;
  }
  auto const s = asmkit::asm_to_six_vertex(r.sample);
  raw_out = asmkit::render_tiling(s, o.format, o.cell);
  if (o.frozen && o.format == "text") raw_out += "\n" + asmkit::frozen_map(h).to_text();
  return {};
}

Json cmd_octahedron(Options const& o, std::string& text_out) {
  auto const p = asmkit::octahedron(o.n, o.lambda);
  Json j{{"n", o.n}, {"lambda", o.lambda}, {"terms", p.size()}};
  if (o.audit) {
    auto const a = asmkit::audit_octahedron(p);
    j["audit"] = Json{{"passed", true}, {"min_exponent", a.min_exponent}, {"max_exponent", a.max_exponent}};
  }
  if (!o.pairs.empty()) {
    Json list = Json::array();
    for (auto const& q : asmkit::extract_pairs(p, o.n))
      list.push_back(Json{{"lower", q.lower.entries().to_rows()}, {"upper", q.upper.entries().to_rows()}});
    write_file(o.pairs, list.dump(1) + "\n");
    j["pairs_written"] = list.size();
  }
  j["polynomial"] = asmkit::to_json(p);
  text_out = p.to_string() + "\n";
  return j;
}

Json cmd_cube(Options const& o, std::string& text_out) {
  auto const p = asmkit::cube(o.n);
  auto const [i, j, k] = asmkit::cube_site(o.n);
  Json out{{"n", o.n}, {"site", {i, j, k}}, {"terms", p.size()}};
  if (o.audit) {
    auto const a = asmkit::audit_cube(p, o.n);
    out["audit"] = Json{{"passed", true}, {"min_exponent", a.min_exponent}, {"max_exponent", a.max_exponent}};
  }
  out["polynomial"] = asmkit::to_json(p);
  text_out = p.to_string() + "\n";
  return out;
}

int cmd_selftest(Options const& o) {
  bool all = true;
  for (auto const& c : asmkit::acceptance::criteria()) {
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), c.id) == o.only.end()) continue;
    auto const r = asmkit::acceptance::run(c);
    all = all && r.passed;
    std::cout << asmkit::acceptance::format_line(r) << std::endl;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating-sign matrix toolkit"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--threads", o.threads, "Worker thread cap (default: ASMKIT_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Order")->required()->check(CLI::Range(1, 1000)); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  std::vector<std::string> kinds;
  for (auto const& [k, name] : asmkit::kKindNames) kinds.emplace_back(name);

  auto* convert = app.add_subcommand("convert", "Convert between representations");
  convert->add_option("--from", o.from, "Input representation")->check(CLI::IsMember(kinds));
  convert->add_option("--to", o.to, "Output representation")->check(CLI::IsMember(kinds));
  convert->add_option("--input", o.input, "Input file (default: stdin)");
  convert->add_option("--matrix", o.matrix, "Inline input; rows separated by ';' or newlines");
  add_format(convert);

  auto* count = app.add_subcommand("count", "Count ASMs of order n");
  add_n(count);
  count->add_option("--method", o.method, "Counting method")
      ->check(CLI::IsMember({"formula", "brute", "transfer", "ideals"}));
  add_format(count);

  auto* weight = app.add_subcommand("weight", "Weighted enumeration by -1 entries, or the hybrid 2-enumeration");
  add_n(weight);
  weight->add_option("--x", o.x, "Weight per -1 entry (integer or p/q)");
  weight->add_flag("--distribution", o.distribution, "Also print the -1 count distribution");
  weight->add_flag("--hybrid", o.hybrid, "Hybrid 2-enumeration on a checkerboard");
  weight->add_option("--phase", o.phase, "Checkerboard phase: cell (1,1) even or odd")
      ->check(CLI::IsMember({"even", "odd"}));
  add_format(weight);

  auto* half = app.add_subcommand("half", "Half-board counts");
  add_n(half);
  half->add_option("--variant", o.variant, "Bottom row: free or fixed")->check(CLI::IsMember({"free", "fixed"}));
  half->add_option("--c", o.c, "Fixed boundary vector as a string of + and -");
  half->add_flag("--average", o.average, "Average completions by boundary sum");
  add_format(half);

  auto* symmetric = app.add_subcommand("symmetric", "Count ASMs invariant under a symmetry group");
  add_n(symmetric);
  symmetric->add_option("--group", o.group, "Group name (default: all groups)");
  add_format(symmetric);

  auto* hankel = app.add_subcommand("hankel", "Hankel determinant identity");
  add_n(hankel);
  hankel->add_option("--coefficients", o.coefficients, "Also list this many series coefficients")
      ->check(CLI::NonNegativeNumber);
  add_format(hankel);

  auto* fpl = app.add_subcommand("fpl", "Fully packed loop link patterns");
  add_n(fpl);
  auto* fpl_modes = fpl->add_option_group("mode");
  fpl_modes->add_flag("--histogram", o.histogram, "Link-pattern histogram (default)");
  fpl_modes->add_flag("--wieland", o.wieland, "Rotation/reflection invariance");
  fpl_modes->add_flag("--wilson", o.wilson, "States linking 1 with 2 against the predicted fraction");
  fpl_modes->add_flag("--nesting", o.nesting, "States with pattern (1,2)(3,4)... against A(n-1)");
  fpl_modes->require_option(0, 1);
  add_format(fpl);

  auto* sample = app.add_subcommand("sample", "Exact uniform sample by coupling from the past");
  add_n(sample);
  sample->add_option("--seed", o.seed, "Random seed");
  sample->add_option("--out", o.out, "Output file (default: stdout)");
  sample->add_option("--format", o.format, "json, or a tiling rendering: text, ppm, svg")
      ->check(CLI::IsMember({"json", "text", "ppm", "svg"}));
  sample->add_flag("--frozen-map", o.frozen, "Include the frozen-site map");
  sample->add_option("--cell", o.cell, "Pixels per vertex for ppm/svg")->check(CLI::PositiveNumber);
  sample->add_option("--max-window", o.max_window, "Largest time window before giving up");

  auto* octa = app.add_subcommand("octahedron", "Octahedron recurrence at (0,0,n)");
  add_n(octa);
  octa->add_option("--lambda", o.lambda, "Recurrence parameter");
  octa->add_option("--pairs", o.pairs, "Write decoded ASM pairs to this JSON file");
  octa->add_flag("--audit", o.audit, "Check coefficients are 1 and exponents in {-1,0,1}");
  add_format(octa);

  auto* cube = app.add_subcommand("cube", "Cube recurrence at level n");
  add_n(cube);
  cube->add_flag("--audit", o.audit, "Check coefficients are 1, exponents in [-1,4] and the term count");
  add_format(cube);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest->add_option("--only", o.only, "Run only these criteria")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    CLI::App const* shown = &app;
    for (auto const* sub : app.get_subcommands()) shown = sub;
    std::cerr << shown->help();
    return 2;
  }

  asmkit::set_thread_count(o.threads);
  CLI::App const* sub = app.get_subcommands().front();
  std::string const name = sub->get_name();
  try {
    if (name == "selftest") return cmd_selftest(o);
    Json result;
    std::string text, raw;
    if (name == "convert") result = cmd_convert(o, text);
    else if (name == "count") result = cmd_count(o);
    else if (name == "weight") result = cmd_weight(o);
    else if (name == "half") result = cmd_half(o);
    else if (name == "symmetric") result = cmd_symmetric(o);
    else if (name == "hankel") result = cmd_hankel(o);
    else if (name == "fpl") result = cmd_fpl(o);
    else if (name == "sample") result = cmd_sample(o, raw);
    else if (name == "octahedron") result = cmd_octahedron(o, text);
    else if (name == "cube") result = cmd_cube(o, text);

    std::string bytes;
    if (!raw.empty()) bytes = raw;
    else if (o.format == "text") bytes = text.empty() ? as_text(result) : text;
    else bytes = result.dump() + "\n";
    if (!o.out.empty()) write_file(o.out, bytes);
    else std::cout << bytes;
    return 0;
  } catch (Usage const& e) {
    std::cerr << "error: " << e.what() << "\n\n" << sub->help();
    return 2;
  } catch (asmkit::Error const& e) {
    std::cout << asmkit::error_json(e).dump() << "\n";
    return 1;
  }
}
