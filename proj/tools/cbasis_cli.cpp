// Command-line front end. Exit codes: 0 success, 1 invariant or acceptance failure,
// 2 guard exhaustion, 3 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "cbasis/blocks.hpp"
#include "cbasis/canonical.hpp"
#include "cbasis/crystal.hpp"
#include "cbasis/json_io.hpp"

namespace {

using namespace cbasis;

constexpr int kOk = 0;
constexpr int kInvariant = 1;
constexpr int kGuard = 2;
constexpr int kUsage = 3;

struct Options {
  bool json = false;
  std::size_t support_guard = 0;
  std::size_t depth_guard = 0;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Limits limits_from(const Options& opt) {
  Limits l = Limits::from_environment();
  if (opt.support_guard) l.support_guard = opt.support_guard;
  if (opt.depth_guard) l.depth_guard = opt.depth_guard;
  return l;
}

void emit(const Options& opt, const Json& j, const std::string& pretty) {
  if (opt.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << pretty << '\n';
}

Space space_from(const std::string& type, const std::string& sigma, std::size_t n) {
  if (type == "c") {
    if (!sigma.empty()) throw UsageError("--sigma only applies to --type a");
    return Space::c();
  }
  if (sigma.empty()) throw UsageError("--type a needs --sigma");
  SignVector s = parse_signs(sigma);
  if (s.size() != n) throw UsageError("--sigma length differs from the tuple length");
  return Space::a(std::move(s));
}

std::pair<int, int> parse_box(const std::string& text) {
  const Tuple t = parse_tuple(text);
  if (t.size() != 2 || t[0] > t[1]) throw UsageError("--box expects LO,HI with LO <= HI");
  return {t[0], t[1]};
}

/// "i:c,i:c" as coefficients of eps_i.
Weight parse_weight(const std::string& text) {
  Weight w(Family::typeC);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--weight items look like i:c");
    std::size_t used_i = 0, used_c = 0;
    const std::string is = item.substr(0, colon), cs = item.substr(colon + 1);
    const int i = std::stoi(is, &used_i);
    const int c = std::stoi(cs, &used_c);
    if (used_i != is.size() || used_c != cs.size() || i < 0) throw UsageError("bad --weight item '" + item + "'");
    w += Weight::epsilon(Family::typeC, i, c);
  }
  return w;
}

Json check_json(const NStatCheck& c, const char* first, const char* second) {
  const char* kinds[] = {"parity", "inequality", "equality"};
  return {{"kind", kinds[static_cast<int>(c.kind)]}, {"s", c.s}, {"i", c.i}, {first, c.value_a}, {second, c.value_b}};
}

std::string check_text(const NStatCheck& c, const std::string& first, const std::string& second) {
  std::ostringstream out;
  out << "N_[1," << c.s << "](" << first << "," << c.i << ") = " << c.value_a << ", N_[1," << c.s << "](" << second
      << "," << c.i << ") = " << c.value_b;
  switch (c.kind) {
    case NStatCheck::Kind::parity: out << " (parity differs)"; break;
    case NStatCheck::Kind::inequality: out << " (needs <=)"; break;
    case NStatCheck::Kind::equality: out << " (needs =)"; break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

int run_canonical(const Options& opt, const std::string& type, const std::string& sigma, const std::string& btext,
                  bool q1) {
  const Tuple b = parse_tuple(btext);
  const Space space = space_from(type, sigma, b.size());
  CanonicalBasis engine(limits_from(opt));
  const CanonicalEntry& e = engine.canonical(b, space);

  bool above = true, qzq = true;
  for (const auto& [a, p] : e.vector.terms())
    if (a != b) {
      above = above && bruhat_less(b, a, space);
      qzq = qzq && in_qZq(p);
    }
  const bool lead = e.vector.coefficient(b).is_one();
  const bool homogeneous = e.vector.is_homogeneous();
  const bool bar = engine.certify_bar_invariant(e.vector);
  const bool ok = lead && above && qzq && homogeneous && bar;

  const TensorVec shown = q1 ? e.vector.specialize_at_one() : e.vector;
  Json j = {{"b", to_json(b)}, {"space", to_json(space)}};
  if (!space.is_c()) j["sigma"] = to_string(space.sigma);
  j["specialized_at_q1"] = q1;
  j["vector"] = to_json(shown);
  j["straightening_steps"] = e.straightening_steps;
  j["certificates"] = {{"leading_coefficient_one", lead},
                       {"support_strictly_above", above},
                       {"off_diagonal_in_qZq", qzq},
                       {"weight_homogeneous", homogeneous},
                       {"bar_invariant_in_rough_basis", bar}};
  emit(opt, j, shown.to_string());
  if (!ok) std::cerr << "error: certificate failed for (" << to_string(b) << ")\n";
  return ok ? kOk : kInvariant;
}

int run_bruhat(const Options& opt, const std::string& type, const std::string& sigma, const std::string& atext,
               const std::string& btext) {
  const Tuple a = parse_tuple(atext), b = parse_tuple(btext);
  if (a.size() != b.size()) throw UsageError("--a and --b have different lengths");
  const Space space = space_from(type, sigma, b.size());
  const BruhatReport r = bruhat_compare(a, b, space);

  std::string pretty;
  switch (r.relation) {
    case Relation::equal: pretty = "a ⪯ b (equal)"; break;
    case Relation::less: pretty = "a ≺ b"; break;
    case Relation::greater: pretty = "a ≻ b"; break;
    case Relation::incomparable: pretty = "a and b are incomparable"; break;
  }
  Json j = {{"a", to_json(a)}, {"b", to_json(b)}, {"space", to_json(space)}, {"relation", to_string(r.relation)}};
  j["leq"] = !r.violation_leq;
  j["geq"] = !r.violation_geq;
  j["violation_leq"] = r.violation_leq ? check_json(*r.violation_leq, "a", "b") : Json();
  j["violation_geq"] = r.violation_geq ? check_json(*r.violation_geq, "b", "a") : Json();
  if (r.violation_leq) pretty += "\nnot a ⪯ b: " + check_text(*r.violation_leq, "a", "b");
  if (r.violation_geq) pretty += "\nnot b ⪯ a: " + check_text(*r.violation_geq, "b", "a");
  if (r.relation == Relation::less) pretty += "\nall N-statistics of a are bounded by those of b";
  if (r.relation == Relation::greater) pretty += "\nall N-statistics of b are bounded by those of a";
  emit(opt, j, pretty);
  return kOk;
}

int run_crystal(const Options& opt, const std::string& op, int i, const std::string& btext, const std::string& sigma) {
  const Tuple b = parse_tuple(btext);
  const Space space = space_from(sigma.empty() ? "c" : "a", sigma, b.size());
  if (space.is_c() && i < 0) throw UsageError("type C operators have index >= 0");
  const auto out = crystal_op(b, i, op == "f" ? GenKind::f : GenKind::e, space);
  Json j = {{"b", to_json(b)}, {"op", op}, {"i", i}, {"result", out ? to_json(*out) : Json()}};
  emit(opt, j, out ? to_string(*out) : "none");
  return kOk;
}

int run_component(const Options& opt, const std::string& box, int n, bool dot, const std::string& connect) {
  if (!connect.empty()) {
    const Tuple b = parse_tuple(connect);
    if (!is_antidominant(b)) {
      Json j = {{"b", to_json(b)}, {"antidominant", false}, {"word", Json()}};
      emit(opt, j, "(" + to_string(b) + ") is not antidominant, so it is not in the component of z");
      return kOk;
    }
    const Connection c = connect_to_z(b);
    Json j = {{"b", to_json(b)}, {"antidominant", true}, {"word", to_string(c.word)}, {"from_proof", c.from_proof}};
    emit(opt, j, to_string(c.word) + (c.from_proof ? "" : "  (found by box search)"));
    return kOk;
  }
  const auto [lo, hi] = parse_box(box);
  if (n < 1) throw UsageError("--n must be positive");
  if (lo > 0 || hi < 0) throw UsageError("--box must contain 0");
  const ComponentReport r = explore_component(n, lo, hi);
  if (dot) {
    std::cout << component_dot(r);
    return kOk;
  }
  std::ostringstream pretty;
  pretty << "reached " << r.adjacency.size() << " tuples from z inside [" << lo << "," << hi << "]^" << n << '\n';
  for (const auto& [t, edges] : r.adjacency) pretty << "  " << to_string(t) << '\n';
  pretty << "antidominant but not reached within the box: " << r.unreached_antidominant.size() << '\n';
  for (const auto& t : r.unreached_antidominant) pretty << "  " << to_string(t) << '\n';
  pretty << "reached but not antidominant: " << r.reached_not_antidominant.size();
  emit(opt, to_json(r), pretty.str());
  return r.reached_not_antidominant.empty() ? kOk : kInvariant;
}

int run_arc(const Options& opt, const std::string& btext) {
  const Tuple b = parse_tuple(btext);
  const BlockStats s = block_stats(b);
  Json j = {{"b", to_json(b)}, {"n0", s.n0}, {"n1", s.n1}, {"atypicality", s.atypicality}};
  std::ostringstream pretty;
  if (is_strictly_dominant(b)) {
    const ArcDiagram d = weight_diagram(b);
    j["diagram"] = to_json(d);
    j["rendered"] = d.render();
    j["in_lambda"] = d.in_lambda();
    pretty << "diagram: " << d.render() << '\n' << "in Lambda: " << (d.in_lambda() ? "yes" : "no") << '\n';
  } else {
    j["diagram"] = Json();
    pretty << "diagram: undefined (b is not strictly dominant)\n";
  }
  pretty << "n0 = " << s.n0 << ", n1 = " << s.n1 << ", atypicality = " << s.atypicality;
  emit(opt, j, pretty.str());
  return kOk;
}

int run_scan(const Options& opt, int n, const std::string& box, const std::string& weight, unsigned threads,
             long time_ms) {
  const auto [lo, hi] = parse_box(box);
  if (n < 1) throw UsageError("--n must be positive");
  std::vector<Tuple> tuples = box_tuples(n, lo, hi);
  if (!weight.empty()) {
    const Weight w = parse_weight(weight);
    std::erase_if(tuples, [&](const Tuple& t) { return total_weight(t, Space::c()) != w; });
  }
  const Limits l = limits_from(opt);
  ScanBudget budget{l.support_guard, l.depth_guard, std::chrono::milliseconds(time_ms), threads};
  const ScanReport r = negativity_scan(tuples, budget);

  Json hits = Json::array(), failures = Json::array();
  std::ostringstream pretty;
  pretty << "scanned " << r.scanned << " tuples: " << r.hits.size() << " negative coefficients, " << r.failures.size()
         << " guard failures";
  for (const auto& h : r.hits) {
    hits.push_back({{"b", to_json(h.b)}, {"a", to_json(h.a)}, {"d", to_json(h.d)}});
    pretty << "\n  b = " << to_string(h.b) << "  a = " << to_string(h.a) << "  d = " << h.d.to_string();
  }
  for (const auto& f : r.failures) {
    failures.push_back({{"b", to_json(f.b)}, {"reason", f.reason}});
    pretty << "\n  b = " << to_string(f.b) << "  not finished: " << f.reason;
  }
  emit(opt, {{"scanned", r.scanned}, {"hits", hits}, {"failures", failures}}, pretty.str());
  return r.failures.empty() ? kOk : kGuard;
}

int run_ckw(const Options& opt, const std::string& btext) {
  const Tuple b = parse_tuple(btext);
  CanonicalBasis engine(limits_from(opt));
  const CkwComparison c = engine.compare_ckw(b);
  Json j = {{"b", to_json(b)},
            {"sigma", to_string(c.sigma)},
            {"b_prime", to_json(prime_map(b))},
            {"pr_sigma_c_b", to_json(c.lhs)},
            {"pr_0_c_sigma_b_prime", to_json(c.rhs)},
            {"equal", c.equal}};
  std::ostringstream pretty;
  pretty << "sigma = " << to_string(c.sigma) << ", b' = " << to_string(prime_map(b)) << '\n'
         << "pr_sigma c_b       = " << c.lhs.to_string() << '\n'
         << "pr_0 c^sigma_b'    = " << c.rhs.to_string() << '\n'
         << (c.equal ? "equal" : "NOT equal");
  emit(opt, j, pretty.str());
  return c.equal ? kOk : kInvariant;
}

int run_selftest(const Options& opt) {
  std::ostringstream lines;
  const auto results = acceptance::run_all(opt.json ? lines : std::cout);
  if (opt.json) {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                     {"seconds", r.seconds}});
    std::cout << Json{{"criteria", arr}, {"passed", acceptance::all_passed(results)}}.dump(2) << '\n';
  }
  return acceptance::all_passed(results) ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical bases of minuscule tensor spaces, Bruhat orders and crystals"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--support-guard", opt.support_guard, "Largest vector support (overrides CBASIS_SUPPORT_GUARD)")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth-guard", opt.depth_guard, "Largest step/recursion count (overrides CBASIS_DEPTH_GUARD)")
      ->check(CLI::PositiveNumber);

  std::string type = "c", sigma, a, b, op, box, weight, connect;
  bool q1 = false, dot = false;
  int i = 0, n = 0;
  unsigned threads = 1;
  long time_ms = 0;
  const auto types = CLI::IsMember({"c", "a"});

  auto* canonical = app.add_subcommand("canonical", "Canonical basis vector c_b");
  canonical->add_option("--type", type, "c (sp) or a (sl)")->check(types);
  canonical->add_option("--sigma", sigma, "Sign string such as +-+ (type a)");
  canonical->add_option("--b", b, "Tuple, e.g. 0,1")->required();
  canonical->add_flag("--q1", q1, "Specialize coefficients at q = 1");

  auto* bruhat = app.add_subcommand("bruhat", "Compare two tuples in the Bruhat order");
  bruhat->add_option("--type", type, "c or a")->check(types);
  bruhat->add_option("--sigma", sigma, "Sign string (type a)");
  bruhat->add_option("--a", a, "First tuple")->required();
  bruhat->add_option("--b", b, "Second tuple")->required();

  auto* crystal = app.add_subcommand("crystal", "Apply one crystal operator");
  crystal->add_option("--op", op, "f or e")->required()->check(CLI::IsMember({"f", "e"}));
  crystal->add_option("--i", i, "Operator index")->required();
  crystal->add_option("--b", b, "Tuple")->required();
  crystal->add_option("--sigma", sigma, "Sign string; selects the type a crystal");

  auto* component = app.add_subcommand("component", "Bounded search of the crystal component of z");
  component->add_option("--box", box, "Entry range LO,HI")->default_str("-2,2");
  component->add_option("--n", n, "Tuple length");
  component->add_flag("--dot", dot, "Emit Graphviz DOT instead of a report");
  component->add_option("--connect", connect, "Print a certified operator word from z to this tuple instead");

  auto* arc = app.add_subcommand("arc", "Weight diagram and block statistics");
  arc->add_option("--b", b, "Tuple")->required();

  auto* scan = app.add_subcommand("scan", "Report negative coefficients of type C canonical vectors");
  scan->add_option("--n", n, "Tuple length")->required();
  scan->add_option("--box", box, "Entry range LO,HI")->required();
  scan->add_option("--weight", weight, "Keep tuples of this total weight, as i:c,i:c (coefficients of eps_i)");
  scan->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--time-ms", time_ms, "Wall-clock budget per tuple in ms (0 = none)")->check(CLI::NonNegativeNumber);

  auto* ckw = app.add_subcommand("ckw", "Compare pr_sigma c_b with pr_0 c^sigma_b'");
  ckw->add_option("--b", b, "Tuple")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (canonical->parsed()) return run_canonical(opt, type, sigma, b, q1);
    if (bruhat->parsed()) return run_bruhat(opt, type, sigma, a, b);
    if (crystal->parsed()) return run_crystal(opt, op, i, b, sigma);
    if (component->parsed()) {
      if (connect.empty() && n == 0) throw UsageError("component needs --n (or --connect)");
      return run_component(opt, box.empty() ? "-2,2" : box, n, dot, connect);
    }
    if (arc->parsed()) return run_arc(opt, b);
    if (scan->parsed()) return run_scan(opt, n, box, weight, threads, time_ms);
    if (ckw->parsed()) return run_ckw(opt, b);
    if (selftest->parsed()) return run_selftest(opt);
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage: number out of range\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
