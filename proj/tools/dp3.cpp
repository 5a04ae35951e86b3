#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "dp3/contour.hpp"
#include "dp3/dimer.hpp"
#include "dp3/formula.hpp"
#include "dp3/kuo.hpp"
#include "dp3/walk.hpp"

using namespace dp3;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int i = 0, j = 0, k = 0;
  int window = 2, kmin = -1, kmax = 2;
  std::uint64_t budget = 1'000'000;
  bool at_ones = false, as_json = false, raw = false;
  std::string engine = "enumerate";
  std::string svg;
  std::string word;
  int figure = 0;
};

PfOptions pf_options(const Options& o) {
  PfOptions p;
  p.budget = o.budget;
  p.engine = o.engine == "transfer" ? Engine::transfer : Engine::enumerate;
  return p;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

CutSubgraph graph_of(const LatticePoint& p, bool raw) {
  const SixTuple t = phi(p);
  CutSubgraph g = cut(t);
  return raw ? g : core(g);
}

int cmd_formula(const Options& o) {
  const LatticePoint p{o.i, o.j, o.k};
  const LaurentPoly z = cluster_variable(p);
  const ExponentProfile e = exponent_profile(p);
  if (o.as_json) {
    std::cout << json{{"point", to_string(p)},
                      {"factored", factored_form(p)},
                      {"expanded", to_string(z)},
                      {"terms", z.num_terms()},
                      {"count", predicted_count(p).get_str()},
                      {"power_of_two", e.power_of_two()},
                      {"power_of_three", e.power_of_three()}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "z" << to_string(p) << " = " << factored_form(p) << "\n";
  std::cout << "  = " << to_string(z) << "\n";
  std::cout << "terms: " << z.num_terms() << ", value at ones: " << z.at_ones() << " = 2^" << e.power_of_two()
            << " * 3^" << e.power_of_three() << "\n";
  return kOk;
}

int cmd_mutate(const Options& o) {
  bool tau = true;
  TauWord tw;
  std::vector<int> mw;
  try {
    tw = parse_tau_word(o.word);
  } catch (const ParseError&) {
    tau = false;
    mw = parse_mutation_word(o.word);
  }
  const Seed s = tau ? apply_tau_word(initial_seed(), tw) : apply_mutations(initial_seed(), mw);
  json report;
  report["word"] = o.word;
  report["cluster"] = json::array();
  std::optional<Prism> prism;
  if (tau) prism = prism_of(tw);
  for (int x = 0; x < kVars; ++x) {
    json entry{{"position", x + 1}, {"polynomial", to_string(s.cluster[x])}};
    if (prism) {
      entry["point"] = to_string((*prism)[x]);
    } else {
      try {
        entry["point"] = to_string(locate_variable(s.cluster[x], o.window));
      } catch (const NotFound&) {
        entry["point"] = nullptr;
      }
    }
    report["cluster"].push_back(entry);
  }
  const auto model = classify_model(s.b);
  report["model"] = model ? json(*model) : json(nullptr);
  if (o.as_json) {
    std::cout << report.dump(2) << "\n";
    return kOk;
  }
  std::cout << "quiver model: " << (model ? std::to_string(*model) : std::string("none")) << "\n";
  for (const auto& e : report["cluster"]) {
    std::cout << e["position"].get<int>() << " ";
    std::cout << (e["point"].is_null() ? std::string("not located") : e["point"].get<std::string>());
    std::cout << ": " << e["polynomial"].get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_render(const Options& o) {
  const LatticePoint p{o.i, o.j, o.k};
  const CutSubgraph g = graph_of(p, o.raw);
  const std::string svg = to_svg(g);
  if (o.svg.empty() || o.svg == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(o.svg);
    if (!out) throw UsageError("cannot write " + o.svg);
    out << svg;
    std::cerr << "wrote " << o.svg << " (" << g.vertices.size() << " vertices, " << g.edges.size() << " edges)\n";
  }
  return kOk;
}

int cmd_count(const Options& o) {
  const LatticePoint p{o.i, o.j, o.k};
  const auto t0 = std::chrono::steady_clock::now();
  const mpz_class n = match_count(graph_of(p, o.raw), pf_options(o));
  const double ms = ms_since(t0);
  const mpz_class predicted = predicted_count(p);
  if (o.as_json) {
    std::cout << json{{"point", to_string(p)},
                      {"contour", to_string(phi(p))},
                      {"count", n.get_str()},
                      {"predicted", predicted.get_str()},
                      {"ms", ms}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << to_string(phi(p)) << ": " << n << " perfect matchings (formula predicts " << predicted << ")\n";
  }
  return n == predicted ? kOk : kFailed;
}

int cmd_pf(const Options& o) {
  const LatticePoint p{o.i, o.j, o.k};
  const CutSubgraph g = graph_of(p, o.raw);
  const LaurentPoly w = partition_function(g, pf_options(o));
  if (o.as_json) {
    json r{{"point", to_string(p)}, {"contour", to_string(phi(p))}};
    if (o.at_ones)
      r["at_ones"] = w.at_ones().get_str();
    else
      r["partition_function"] = to_string(w);
    r["covering_monomial"] = to_string(g.covering_monomial());
    std::cout << r.dump(2) << "\n";
  } else if (o.at_ones) {
    std::cout << w.at_ones() << "\n";
  } else {
    std::cout << to_string(w) << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  if (o.window < 0) throw UsageError("--window must be non-negative");
  json report;
  report["command"] = "verify --window " + std::to_string(o.window) + " --kmin " + std::to_string(o.kmin) +
                      " --kmax " + std::to_string(o.kmax) + " --budget " + std::to_string(o.budget);
  report["points"] = json::array();
  report["failures"] = json::array();
  int passed = 0, skipped = 0;
  if (o.window > 0)
    for (int i = -o.window; i <= o.window; ++i)
      for (int j = -o.window; j <= o.window; ++j)
        for (int k = o.kmin; k <= o.kmax; ++k) {
          const LatticePoint p{i, j, k};
          json rec{{"point", to_string(p)}, {"contour", to_string(phi(p))}};
          if (is_self_intersecting(phi(p))) {
            rec["status"] = "skipped: self-intersecting";
            ++skipped;
            report["points"].push_back(rec);
            continue;
          }
          const auto t0 = std::chrono::steady_clock::now();
          try {
            const LaurentPoly f = cluster_variable(p);
            const LaurentPoly d = c_value(core(cut(phi(p))), pf_options(o));
            rec["formula"] = to_string(f);
            rec["dimer"] = to_string(d);
            rec["equal"] = f == d;
            rec["count"] = d.at_ones().get_str();
            rec["status"] = f == d ? "pass" : "FAIL";
            if (f == d)
              ++passed;
            else
              report["failures"].push_back(to_string(p));
          } catch (const BudgetExceeded& e) {
            rec["status"] = "skipped: budget exceeded after " + std::to_string(e.partial_count) + " matchings";
            ++skipped;
          }
          rec["ms"] = ms_since(t0);
          report["points"].push_back(rec);
        }
  const bool ok = report["failures"].empty();
  if (o.as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& r : report["points"]) {
      std::cout << r["point"].get<std::string>() << " " << r["contour"].get<std::string>() << " "
                << r["status"].get<std::string>();
      if (r.contains("count")) std::cout << " count=" << r["count"].get<std::string>();
      if (r.contains("ms")) std::cout << " " << static_cast<long>(r["ms"].get<double>()) << "ms";
      std::cout << "\n";
    }
    std::cout << passed << " passed, " << report["failures"].size() << " failed, " << skipped << " skipped\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_kuo(const Options& o) {
  const auto& table = figure_instances();
  auto fig = std::find_if(table.begin(), table.end(), [&](const FigureInstance& f) { return f.number == o.figure; });
  if (fig == table.end()) throw UsageError("figure must be one of 28..34");
  const auto inst = figure_instance(o.figure);
  if (!inst) {
    std::cout << "no condensation instance found for figure " << o.figure << "\n";
    return kFailed;
  }
  Options eo = o;
  if (eo.engine != "enumerate") eo.engine = "transfer";
  const auto t0 = std::chrono::steady_clock::now();
  const KuoInstanceCheck c = check_instance(*inst, pf_options(eo));
  const double ms = ms_since(t0);
  const RecurrenceTerms& r = inst->terms;
  json rep{{"figure", o.figure},
           {"point", to_string(fig->p)},
           {"recurrence", to_string(r.kind)},
           {"variant", to_string(inst->variant)},
           {"outer_contour", to_string(inst->outer)},
           {"identity_holds", c.kuo.holds},
           {"matches_formula", c.matches_formula},
           {"lhs_terms", c.kuo.lhs.num_terms()},
           {"ms", ms}};
  json pts = json::array();
  for (int q = 0; q < 4; ++q)
    pts.push_back(std::string(1, char('A' + inst->sides[q])) + (inst->signs[q] > 0 ? " black " : " white ") +
                  std::to_string(inst->indices[q]));
  rep["points"] = pts;
  if (o.as_json) {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "figure " << o.figure << ": " << to_string(r.kind) << " at " << to_string(fig->p) << " via "
              << to_string(inst->variant) << " condensation on " << to_string(inst->outer) << "\n";
    std::cout << "  z" << to_string(r.lhs[0]) << " z" << to_string(r.lhs[1]) << " = z" << to_string(r.rhs1[0]) << " z"
              << to_string(r.rhs1[1]) << " + z" << to_string(r.rhs2[0]) << " z" << to_string(r.rhs2[1]) << "\n";
    std::cout << "  points:";
    for (const auto& s : pts) std::cout << " [" << s.get<std::string>() << "]";
    std::cout << "\n  identity " << (c.kuo.holds ? "holds" : "FAILS") << " (" << c.kuo.lhs.num_terms()
              << " terms), c-values " << (c.matches_formula ? "match" : "do not match") << " the formula, "
              << static_cast<long>(ms) << " ms\n";
  }
  return c.kuo.holds && c.matches_formula ? kOk : kFailed;
}

void add_point(CLI::App* app, Options& o) {
  app->add_option("i", o.i)->required();
  app->add_option("j", o.j)->required();
  app->add_option("k", o.k)->required();
}

void add_engine(CLI::App* app, Options& o) {
  app->add_option("--budget", o.budget, "stop enumerating after this many matchings")->capture_default_str();
  app->add_option("--engine", o.engine, "enumerate or transfer")
      ->check(CLI::IsMember({"enumerate", "transfer"}))
      ->capture_default_str();
  app->add_flag("--raw", o.raw, "use the raw cut-out instead of its core");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dP3 cluster variables by mutation, closed formula and dimer partition functions"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "machine-readable output");

  auto* f = app.add_subcommand("formula", "closed-form cluster variable z(i,j,k)");
  add_point(f, o);
  auto* m = app.add_subcommand("mutate", "apply a tau-word (\"t1 t2 t4\") or mutation word (\"m1 m4 m3\")");
  m->add_option("word", o.word)->required();
  m->add_option("--window", o.window, "search window for locating raw-word entries")->capture_default_str();
  auto* r = app.add_subcommand("render", "SVG of the cut-out subgraph for phi(i,j,k)");
  add_point(r, o);
  r->add_option("--svg", o.svg, "output file (stdout if omitted)");
  r->add_flag("--raw", o.raw, "draw the raw cut-out instead of its core");
  auto* c = app.add_subcommand("count", "number of perfect matchings of the core subgraph");
  add_point(c, o);
  add_engine(c, o);
  auto* p = app.add_subcommand("pf", "partition function of the core subgraph");
  add_point(p, o);
  add_engine(p, o);
  p->add_flag("--at-ones", o.at_ones, "print only the value at x = 1");
  auto* v = app.add_subcommand("verify", "compare dimer c-values with the formula over a window");
  v->add_option("--window", o.window, "|i|,|j| bound")->capture_default_str();
  v->add_option("--kmin", o.kmin)->capture_default_str();
  v->add_option("--kmax", o.kmax)->capture_default_str();
  add_engine(v, o);
  auto* k = app.add_subcommand("kuo", "verify the condensation identity of an illustrated instance");
  k->add_option("--figure", o.figure, "instance number 28..34")->required();
  k->add_option("--engine", o.engine, "transfer (default) or enumerate")
      ->check(CLI::IsMember({"enumerate", "transfer"}));
  k->add_option("--budget", o.budget)->capture_default_str();
  for (auto* sub : {f, m, r, c, p, v, k}) sub->add_flag("--json", o.as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*f) return cmd_formula(o);
    if (*m) return cmd_mutate(o);
    if (*r) return cmd_render(o);
    if (*c) return cmd_count(o);
    if (*p) return cmd_pf(o);
    if (*v) return cmd_verify(o);
    if (*k) {
      if (k->count("--engine") == 0) o.engine = "transfer";
      return cmd_kuo(o);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SelfIntersecting& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "; raise --budget or use --engine transfer\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
