#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "inertia/elementary.hpp"
#include "inertia/errors.hpp"
#include "inertia/g12.hpp"
#include "inertia/matrix_io.hpp"
#include "inertia/sampling.hpp"
#include "inertia/square_breaker.hpp"
#include "inertia/tree_params.hpp"
#include "inertia/witness.hpp"

namespace inertia::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  int max_vertices = 24;
  std::optional<std::uint64_t> seed;
  std::string registry_path;
  std::string format = "json";
  std::string method = "auto";
  bool no_shortcut = false;
  int trials = 10000;
};

std::uint64_t effective_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("INERTIA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("INERTIA_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

BaseRegistry load_registry(const Options& o) {
  BaseRegistry reg = BaseRegistry::defaults();
  if (!o.registry_path.empty()) reg.load_file(o.registry_path);
  return reg;
}

// Runs body and turns the exception hierarchy into exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const SearchTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

struct Computed {
  LatticeSet set;
  std::string provenance;
  bool unverified = false;
};

Computed compute(const Graph& g, const Options& o, const BaseRegistry& reg) {
  const SearchLimits limits{o.max_vertices};
  std::string method = o.method;
  if (method == "auto") method = is_forest(g) ? "forest" : "cut";
  if (method == "forest") {
    auto r = inertia_forest(g, limits);
    return {r.set, to_string(r.provenance)};
  }
  if (method == "cut") {
    CutOptions opts;
    opts.degree_two_shortcut = !o.no_shortcut;
    opts.limits = limits;
    auto r = inertia_cut_recursive(g, reg, opts);
    return {r.set, to_string(r.provenance), r.unverified};
  }
  if (method == "elementary") return {elementary_set(g, limits), "elementary-set"};
  if (method == "sample") {
    SampleOptions so;
    so.trials = o.trials;
    so.seed = effective_seed(o);
    return {sample_inertias(g, so).set, to_string(Provenance::EmpiricalLowerBound)};
  }
  throw InputError("unknown method " + method);
}

json set_document(const Computed& c) {
  json j = to_json(c.set);
  j["provenance"] = c.provenance;
  if (c.unverified) j["unverified"] = true;
  return j;
}

void emit_set(std::ostream& out, const LatticeSet& set, const std::string& provenance, bool unverified,
              const std::string& format) {
  if (format == "json") {
    out << set_document({set, provenance, unverified}).dump() << '\n';
  } else if (format == "ascii") {
    out << "provenance: " << provenance << (unverified ? " (unverified registry entry)" : "") << '\n';
    out << render(set, RenderStyle::Ascii);
  } else if (format == "svg") {
    out << "<!-- provenance: " << provenance << " -->\n" << render(set, RenderStyle::Svg);
  } else {
    throw InputError("unknown format " + format);
  }
}

json partition_json(const Partition& p) { return p.parts; }

json params_document(const Graph& g, const SearchLimits& limits) {
  json j;
  j["n"] = g.order();
  if (is_forest(g)) {
    const TreeParams t = tree_params(g, limits);
    j["P"] = t.path_cover;
    j["mr"] = t.min_rank;
    j["c"] = t.c;
    j["MD"] = t.md.values;
    j["r"] = t.r;
    j["mult_bound"] = t.mult_bound;
    j["partition"] = partition_json(to_partition(inertia_forest(g, limits).set));
  } else {
    const auto prof = md_profile(g, g.order(), limits);
    j["P"] = nullptr;
    j["mr"] = nullptr;
    j["c"] = nullptr;
    j["MD"] = prof.values;
    j["r"] = nullptr;
    int bound = std::numeric_limits<int>::min();
    for (int k = 0; k <= g.order(); ++k) bound = std::max(bound, prof[k] - k);
    j["mult_bound"] = bound;
    j["partition"] = nullptr;
  }
  return j;
}

std::pair<int, int> parse_target(const std::string& text) {
  static const std::regex pattern(R"(\s*\(?\s*([0-9]+)\s*,\s*([0-9]+)\s*\)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InputError("target must look like (r,s): " + text);
  return {std::stoi(m[1]), std::stoi(m[2])};
}

std::string point_text(int r, int s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

std::vector<fs::path> batch_files(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError("batch path is not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Runs one job per file in parallel; prints {"file": result} keyed by name.
int run_batch(const std::string& dir, std::ostream& out, std::ostream& err,
              const std::function<json(const Graph&)>& job) {
  const auto files = batch_files(dir);
  std::vector<std::future<std::pair<json, int>>> pending;
  for (const auto& path : files) {
    pending.push_back(std::async(std::launch::async, [path, &job] {
      std::ostringstream local_err;
      json result;
      const int code = guarded(local_err, [&] {
        result = job(read_graph(path));
        return static_cast<int>(kOk);
      });
      if (code != kOk) result = {{"error", local_err.str()}, {"exit", code}};
      return std::make_pair(result, code);
    }));
  }
  json doc = json::object();
  int worst = kOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto [result, code] = pending[i].get();
    doc[files[i].filename().string()] = result;
    if (code != kOk) {
      err << files[i].filename().string() << ": " << result["error"].get<std::string>();
      worst = std::max(worst, code);
    }
  }
  out << doc.dump(1) << '\n';
  return worst;
}

std::string set_text(const LatticeSet& q) {
  std::ostringstream s;
  s << q;
  return s.str();
}

}  // namespace

std::vector<SuiteCheck> paper_suite(const BaseRegistry& registry) {
  std::vector<SuiteCheck> checks;
  auto check = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    SuiteCheck c{name, false, ""};
    try {
      auto [ok, detail] = body();
      c.passed = ok;
      c.detail = detail;
    } catch (const std::exception& e) {
      c.detail = std::string("threw: ") + e.what();
    }
    checks.push_back(c);
  };
  auto cut = [&](const Graph& g, bool shortcut = true) {
    CutOptions o;
    o.degree_two_shortcut = shortcut;
    return inertia_cut_recursive(g, registry, o).set;
  };

  check("complete graphs K3..K6 have I = N^2_[1,n], J_n has inertia (1,0,n-1)", [&] {
    for (int n = 3; n <= 6; ++n) {
      const Graph k = graphs::complete(n);
      if (cut(k) != make_region(1, n, n)) return std::make_pair(false, "I(K" + std::to_string(n) + ") = " + set_text(cut(k)));
      const RationalMatrix jn = RationalMatrix::Constant(n, n, Rational(1));
      if (!(inertia_exact(jn) == PartialInertia{1, 0, n - 1})) return std::make_pair(false, std::string("J_n inertia"));
    }
    return std::make_pair(true, std::string("n = 3..6"));
  });

  check("paths P2..P8 have I = N^2_[n-1,n]", [&] {
    for (int n = 2; n <= 8; ++n) {
      const Graph p = graphs::path(n);
      if (inertia_forest(p).set != make_region(n - 1, n, n) || cut(p) != make_region(n - 1, n, n)) {
        return std::make_pair(false, "P" + std::to_string(n));
      }
    }
    return std::make_pair(true, std::string("n = 2..8"));
  });

  const LatticeSet s4_expected({{3, 0}, {1, 1}, {0, 3}}, 4);
  check("I(S4) = {(3,0),(4,0),(0,3),(0,4)} + {r,s >= 1, r+s <= 4}", [&] {
    const Graph s4 = graphs::star(4);
    const auto forest = inertia_forest(s4).set;
    const bool ok = forest == s4_expected && cut(s4) == s4_expected &&
                    inertia_exact(adjacency_matrix(s4)) == PartialInertia{1, 1, 2};
    return std::make_pair(ok, set_text(forest));
  });

  const LatticeSet spt_expected({{5, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 5}}, 6);
  check("star-path tree: P=2, mr=4, c=1, forest = cut = spans", [&] {
    const Graph t = graphs::star_path_tree();
    const TreeParams p = tree_params(t);
    const auto forest = inertia_forest(t).set;
    const bool ok = p.path_cover == 2 && p.min_rank == 4 && p.c == 1 && forest == spt_expected &&
                    cut(t, false) == spt_expected && elementary_from_spans(t) == spt_expected;
    return std::make_pair(ok, set_text(forest));
  });

  const LatticeSet ss_expected({{6, 0}, {4, 1}, {2, 2}, {1, 4}, {0, 6}}, 7);
  check("S4 + S4 at a degree-2 vertex: mr=4 slice {(2,2)}, shortcut = full formula", [&] {
    const Graph t = graphs::star_leaf_sum(2);
    const auto fast = cut(t, true);
    const auto full = cut(t, false);
    const Stripe slice = stripe_slice(fast, 4);
    const TreeParams p = tree_params(t);
    const bool ok = fast == ss_expected && full == ss_expected && inertia_forest(t).set == ss_expected &&
                    slice.r_values == std::vector<int>{2} && p.c == 2 && p.min_rank == 4;
    return std::make_pair(ok, set_text(fast));
  });

  check("star-path tree: pi = (5,3), c = 1, L = {(3,1),(2,2),(1,3)}", [&] {
    const Graph t = graphs::star_path_tree();
    const auto pi = pi_profile(t);
    const Stripe l = l_stripe(t);
    const bool ok = pi == std::vector<int>{5, 3} && l.rank == 4 && l.r_values == std::vector<int>{1, 2, 3};
    return std::make_pair(ok, std::string("pi computed"));
  });

  check("four-fold star sum: pi = (12,9,8,6,4), L = {(4,4)}, P = 5, c = 4", [&] {
    const Graph t = graphs::star_leaf_sum(4);
    const TreeParams p = tree_params(t);
    const Stripe l = l_stripe(t);
    const auto set = inertia_forest(t).set;
    const bool ok = pi_profile(t) == std::vector<int>{12, 9, 8, 6, 4} && l.rank == 8 &&
                    l.r_values == std::vector<int>{4} && p.path_cover == 5 && p.c == 4 &&
                    stripe_slice(set, 8).r_values == std::vector<int>{4} && cut(t) == set;
    return std::make_pair(ok, set_text(set));
  });

  check("five-fold star sum: (11,1) and (5,5) in I, (8,3) not", [&] {
    const auto set = inertia_forest(graphs::star_leaf_sum(5)).set;
    const bool ok = set.contains(11, 1) && set.contains(5, 5) && !set.contains(8, 3);
    return std::make_pair(ok, set_text(set));
  });
  return checks;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inertia sets of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--max-vertices", o.max_vertices, "Cap for exhaustive subset searches")->capture_default_str();
  app.add_option("--seed", o.seed, "Random seed (default INERTIA_SEED or 0)");

  std::string render_format = "ascii";
  std::string graph_path, batch_dir, matrix_path, set_path, out_path, export_dir, target;
  int r = 0, s = 0, k = 0, split_vertex = -1;
  bool spans = false, full = false, all_k = false, do_break = false;

  auto add_graph = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("graph", graph_path, "Edge-list file");
    if (required) opt->required();
    opt->check(CLI::ExistingFile);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, ascii or svg")
        ->check(CLI::IsMember({"json", "ascii", "svg"}))
        ->capture_default_str();
  };

  auto* inertia_cmd = app.add_subcommand("inertia", "Inertia set of a graph");
  add_graph(inertia_cmd, false);
  inertia_cmd->add_option("--batch", batch_dir, "Process every file in a directory");
  inertia_cmd->add_option("--method", o.method, "auto, forest, cut, elementary or sample")
      ->check(CLI::IsMember({"auto", "forest", "cut", "elementary", "sample"}))
      ->capture_default_str();
  inertia_cmd->add_option("--registry", o.registry_path, "JSON file of extra base blocks")->check(CLI::ExistingFile);
  inertia_cmd->add_flag("--no-shortcut", o.no_shortcut, "Keep both terms at degree-2 cut vertices");
  inertia_cmd->add_option("--trials", o.trials, "Trials for --method sample");
  add_format(inertia_cmd);

  auto* params_cmd = app.add_subcommand("params", "P, mr, c, MD and r-profile");
  add_graph(params_cmd, false);
  params_cmd->add_option("--batch", batch_dir, "Process every file in a directory");

  auto* elem_cmd = app.add_subcommand("elementary", "Elementary inertia set E(G)");
  add_graph(elem_cmd);
  elem_cmd->add_flag("--spans", spans, "Compute from bicolored spans");
  elem_cmd->add_flag("--full", full, "Enumerate every span (n <= 8)");
  elem_cmd->add_option("--split", split_vertex, "Print the v-deleting and v-keeping parts at this vertex");
  add_format(elem_cmd);

  auto* witness_cmd = app.add_subcommand("witness", "Matrix in S(G) with partial inertia (r,s)");
  add_graph(witness_cmd);
  witness_cmd->add_option("r", r)->required();
  witness_cmd->add_option("s", s)->required();
  witness_cmd->add_option("--out", out_path, "Write the matrix here instead of stdout");
  witness_cmd->add_option("--registry", o.registry_path, "JSON file of extra base blocks")->check(CLI::ExistingFile);

  auto* verify_cmd = app.add_subcommand("verify", "Check a matrix against a graph and a target inertia");
  add_graph(verify_cmd);
  verify_cmd->add_option("matrix", matrix_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("target", target, "(r,s)")->required();
  verify_cmd->add_flag("--break", do_break, "Also run the square breaker on a PSD matrix");

  auto* sample_cmd = app.add_subcommand("sample", "Empirical lower bound from random matrices");
  add_graph(sample_cmd);
  sample_cmd->add_option("--trials", o.trials)->capture_default_str();

  auto* partition_cmd = app.add_subcommand("partition", "Inertial partition of I(G)");
  add_graph(partition_cmd);
  partition_cmd->add_option("--method", o.method)
      ->check(CLI::IsMember({"auto", "forest", "cut", "sample"}))
      ->capture_default_str();
  partition_cmd->add_option("--registry", o.registry_path)->check(CLI::ExistingFile);

  auto* render_cmd = app.add_subcommand("render", "Draw a lattice set JSON file");
  render_cmd->add_option("set", set_path, "LatticeSet JSON")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--format", render_format)->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();

  auto* g12_cmd = app.add_subcommand("g12", "Checks on the 12- and 13-vertex cube graphs");
  g12_cmd->add_option("--export", export_dir, "Write G12 and M12^T M12 to this directory");

  auto* suite_cmd = app.add_subcommand("paper-suite", "Golden examples");
  suite_cmd->add_option("--registry", o.registry_path)->check(CLI::ExistingFile);

  auto* md_cmd = app.add_subcommand("md", "Maximal disconnection MD_k");
  add_graph(md_cmd);
  md_cmd->add_option("k", k)->required();
  md_cmd->add_flag("--all", all_k, "Print MD_0..MD_k");

  std::vector<std::string> argv_store = {"inertia"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  return guarded(err, [&]() -> int {
    const SearchLimits limits{o.max_vertices};

    if (*inertia_cmd) {
      const BaseRegistry reg = load_registry(o);
      if (!batch_dir.empty()) {
        return run_batch(batch_dir, out, err, [&](const Graph& g) { return set_document(compute(g, o, reg)); });
      }
      if (graph_path.empty()) throw InputError("inertia needs a graph file or --batch");
      const Computed c = compute(read_graph(graph_path), o, reg);
      emit_set(out, c.set, c.provenance, c.unverified, o.format);
      return kOk;
    }

    if (*params_cmd) {
      if (!batch_dir.empty()) {
        return run_batch(batch_dir, out, err, [&](const Graph& g) { return params_document(g, limits); });
      }
      if (graph_path.empty()) throw InputError("params needs a graph file or --batch");
      out << params_document(read_graph(graph_path), limits).dump() << '\n';
      return kOk;
    }

    if (*elem_cmd) {
      const Graph g = read_graph(graph_path);
      SpanOptions so;
      so.full = full;
      if (split_vertex >= 0) {
        const EvSplit split = ev_split(g, split_vertex, so);
        out << json{{"deleting", to_json(split.deleting)}, {"keeping", to_json(split.keeping)}}.dump() << '\n';
        return kOk;
      }
      const LatticeSet e = spans ? elementary_from_spans(g, so) : elementary_set(g, limits);
      emit_set(out, e, spans ? "bicolored-spans" : "elementary-set", false, o.format);
      return kOk;
    }

    if (*witness_cmd) {
      const Graph g = read_graph(graph_path);
      const Computed c = compute(g, o, load_registry(o));
      if (!c.set.contains(r, s)) {
        throw InputError(point_text(r, s) + " is not in the computed inertia set " + set_text(c.set));
      }
      const Witness w = find_witness(g, r, s, limits, effective_seed(o));
      const WitnessCheck chk = verify_witness(g, w.matrix, r, s);
      if (!chk.ok()) throw VerificationError("constructed matrix failed its own check");
      json report = {{"method", w.method},
                     {"constructive", w.constructive},
                     {"inertia", {chk.inertia.pos, chk.inertia.neg, chk.inertia.zero}},
                     {"pattern_ok", chk.pattern_ok}};
      if (out_path.empty()) {
        report["matrix"] = matrix_to_json(w.matrix);
      } else {
        write_matrix(out_path, w.matrix);
        report["written"] = out_path;
      }
      out << report.dump() << '\n';
      return kOk;
    }

    if (*verify_cmd) {
      const Graph g = read_graph(graph_path);
      const RationalMatrix a = read_matrix(matrix_path);
      const auto [tr, ts] = parse_target(target);
      const WitnessCheck chk = verify_witness(g, a, tr, ts);
      json report = {{"pattern_ok", chk.pattern_ok},
                     {"inertia", {chk.inertia.pos, chk.inertia.neg, chk.inertia.zero}},
                     {"target", {tr, ts}},
                     {"pass", chk.ok()}};
      if (do_break) {
        const SquareBreak sb = square_breaker(to_double(a));
        report["square_breaker"] = {{"input_rank", sb.input_rank},
                                    {"inertia", {sb.inertia.pos, sb.inertia.neg, sb.inertia.zero}},
                                    {"pattern_preserved", sb.pattern_preserved},
                                    {"theta", sb.theta}};
      }
      out << report.dump() << '\n';
      return chk.ok() ? kOk : kVerificationFailed;
    }

    if (*sample_cmd) {
      SampleOptions so;
      so.trials = o.trials;
      so.seed = effective_seed(o);
      const SampleReport rep = sample_inertias(read_graph(graph_path), so);
      json observed = json::array();
      for (const Point& p : rep.observed) observed.push_back({p.r, p.s});
      out << json{{"observed", observed}, {"set", to_json(rep.set)}, {"matrices", rep.matrices},
                  {"provenance", to_string(Provenance::EmpiricalLowerBound)}}
                 .dump()
          << '\n';
      return kOk;
    }

    if (*partition_cmd) {
      const Computed c = compute(read_graph(graph_path), o, load_registry(o));
      const Partition p = to_partition(c.set);
      out << json{{"partition", partition_json(p)}, {"conjugate", partition_json(conjugate(p))},
                  {"symmetric", p.symmetric()}, {"provenance", c.provenance}}
                 .dump()
          << '\n';
      return kOk;
    }

    if (*render_cmd) {
      std::ifstream in(set_path);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw InputError(std::string("set file is not valid JSON: ") + e.what());
      }
      out << render(lattice_set_from_json(j), render_format == "svg" ? RenderStyle::Svg : RenderStyle::Ascii);
      return kOk;
    }

    if (*g12_cmd) {
      const g12::Report rep = g12::run_suite();
      for (const auto& c : rep.checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.detail << "]\n";
      out << "lower bound " << rep.lower_bound << ", partition " << rep.partition << '\n';
      out << "note: (2,1) is not in the Hermitian inertia set of G12; this exclusion is a theorem, cited and not "
             "computed\n";
      if (!export_dir.empty()) {
        fs::create_directories(export_dir);
        std::ofstream(fs::path(export_dir) / "g12.txt") << serialize(g12::g12());
        write_matrix(fs::path(export_dir) / "m12_gram.json", g12::m12().transpose() * g12::m12());
      }
      return rep.all_passed() ? kOk : kVerificationFailed;
    }

    if (*suite_cmd) {
      const auto checks = paper_suite(load_registry(o));
      bool ok = true;
      for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.detail << "]\n";
        ok = ok && c.passed;
      }
      return ok ? kOk : kVerificationFailed;
    }

    if (*md_cmd) {
      const Graph g = read_graph(graph_path);
      const MdProfile prof = md_profile(g, k, limits);
      if (all_k) {
        out << json{{"MD", prof.values}}.dump() << '\n';
      } else {
        out << json{{"k", k}, {"MD", prof[k]}, {"witness", prof.witnesses[k].members()}}.dump() << '\n';
      }
      return kOk;
    }
    return kInputError;
  });
}

}  // namespace inertia::cli
