#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcm/expr.hpp"
#include "lcm/instance.hpp"
#include "lcm/operator_model.hpp"
#include "lcm/shift_groupoid.hpp"
#include "lcm/spectra.hpp"
#include "lcm/suites.hpp"

using namespace lcm;
using nlohmann::ordered_json;

namespace {

enum Exit { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_resource = 3 };

struct Options {
  std::string monoid = "free:2";
  std::size_t depth = 2;
  std::int64_t group_bound = 2;
  std::size_t delta_depth = 3;
  std::uint64_t seed = 1;
  std::size_t words = 1000;
  std::string format;
  std::string out;
  bool timing = false;
  bool serial = false;
  std::vector<std::string> suites;
  std::string expression;
  long window = 3;
  std::size_t max_pre = 2;
  std::size_t max_period = 2;
};

void emit(Options const& o, std::string const& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    throw Error("cannot open '" + o.out + "' for writing");
  }
  f << text;
  if (!f) {
    throw Error("write to '" + o.out + "' failed");
  }
}

int run_eval(Options const& o) {
  auto inst = parse_instance(o.monoid, o.group_bound);
  std::string text = std::visit(
      [&](auto const& m) {
        InverseSemigroup<std::decay_t<decltype(m)>> isg(m);
        return print_value(isg, eval_expr(isg, o.expression));
      },
      inst);
  emit(o, text + "\n");
  return exit_pass;
}

int run_check(Options const& o) {
  auto inst = parse_instance(o.monoid, o.group_bound);
  SuiteParams p;
  p.depth = o.depth;
  p.group_bound = o.group_bound;
  p.delta_depth = o.delta_depth;
  p.seed = o.seed;
  p.random_words = o.words;
  p.exec = o.serial ? Exec::serial : Exec::parallel;
  auto const start = std::chrono::steady_clock::now();
  auto rep = lcm::run_check(o.suites, inst, p);
  std::optional<double> wall;
  if (o.timing) {
    wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
  }
  emit(o, o.format == "text" ? report_text(rep, wall) : report_json(rep, wall));
  return rep.passed() ? exit_pass : exit_fail;
}

std::string matrix_json(SparseOp const& op) {
  ordered_json j;
  j["dim"] = op.dim();
  ordered_json trip = ordered_json::array();
  for (auto const& e : op.entries()) {
    trip.push_back({e.row, e.col, e.value});
  }
  j["triplets"] = trip;
  if (op.has_boundary()) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < op.dim(); ++c) {
      if (op.is_boundary(c)) {
        cols.push_back(c);
      }
    }
    j["boundary_columns"] = cols;
  }
  return j.dump() + "\n";
}

std::string matrix_csv(SparseOp const& op) {
  std::ostringstream os;
  for (auto const& row : op.dense()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << row[c];
    }
    os << "\n";
  }
  return os.str();
}

int run_matrix(Options const& o) {
  auto inst = parse_instance(o.monoid, o.group_bound);
  SparseOp op = std::visit(
      [&](auto const& m) {
        using M = std::decay_t<decltype(m)>;
        InverseSemigroup<M> isg(m);
        auto v = eval_expr(isg, o.expression);
        DeltaTruncation<M> t(m, o.delta_depth);
        if (auto const* s = std::get_if<Triple<element_t<M>>>(&v)) {
          return represent_triple(t, *s);
        }
        return e_matrix(t, std::get<ConstructibleSet<element_t<M>>>(v));
      },
      inst);
  emit(o, o.format == "csv" ? matrix_csv(op) : matrix_json(op));
  return exit_pass;
}

ordered_json lattice_summary(FiniteSemilattice const& l) {
  auto const fs = enumerate_filters(l);
  ordered_json gens = ordered_json::array();
  for (auto const& f : fs.filters) {
    gens.push_back(l.label(f.generator));
  }
  ordered_json ultra = ordered_json::array();
  for (auto const& f : fs.ultrafilters) {
    ultra.push_back(l.label(f.generator));
  }
  return {{"elements", l.size()},
          {"filters", fs.filters.size()},
          {"ultrafilters", fs.ultrafilters.size()},
          {"filter_generators", gens},
          {"ultrafilter_generators", ultra}};
}

int run_spectra(Options const& o) {
  auto inst = parse_instance(o.monoid, o.group_bound);
  ordered_json j = std::visit(
      [&](auto const& m) {
        using M = std::decay_t<decltype(m)>;
        InverseSemigroup<M> isg(m);
        auto const right = build_ideal_semilattice(m, Side::right, o.depth);
        auto const left = build_ideal_semilattice(m, Side::left, o.depth);
        auto const es = build_semilattice(isg, o.depth);
        auto const corr = check_product_correspondence(left.lattice, right.lattice);
        auto const phi = check_phi(isg, es, left, right);
        auto const summary = lattice_summary(right.lattice);
        ordered_json out;
        out["instance"] = m.name();
        out["depth"] = o.depth;
        out["filters"] = summary["filters"];
        out["ultrafilters"] = summary["ultrafilters"];
        out["right_ideals"] = summary;
        out["left_ideals"] = lattice_summary(left.lattice);
        out["idempotents"] = lattice_summary(es.lattice);
        out["product"] = {{"filters", corr.product_filters},
                          {"ultrafilters", corr.product_ultrafilters},
                          {"bijective", corr.bijective},
                          {"ultrafilters_preserved", corr.ultrafilters_preserved}};
        out["phi"] = {{"bijective", phi.bijective}, {"meet_preserving", phi.meet_preserving}};
        return out;
      },
      inst);
  emit(o, j.dump(2) + "\n");
  return exit_pass;
}

int run_groupoid(Options const& o) {
  auto inst = parse_instance(o.monoid, o.group_bound);
  auto const* m = std::get_if<FreeMonoid>(&inst);
  if (!m) {
    throw UnsupportedInstance("the shift groupoid is defined for free monoids only");
  }
  InverseSemigroup<FreeMonoid> isg(*m);
  auto const ts = isg.enumerate(o.depth);
  auto const points = enumerate_points(m->alphabet(), o.max_pre, o.max_period);
  ordered_json table = ordered_json::array();
  for (auto const& pt : points) {
    // one row per class (n, pt), with a representative and the germ count
    std::vector<std::pair<long, std::pair<std::string, std::size_t>>> rows;
    for (auto const& s : ts) {
      auto g = make_germ(s, pt);
      if (!g || std::abs(cocycle_h(s)) > o.window) {
        continue;
      }
      long const n = phi_map(*g).first;
      auto it = std::find_if(rows.begin(), rows.end(), [&](auto const& r) { return r.first == n; });
      if (it == rows.end()) {
        rows.push_back({n, {isg.to_string(s), 1}});
      } else {
        ++it->second.second;
      }
    }
    std::sort(rows.begin(), rows.end());
    for (auto const& [n, rep] : rows) {
      table.push_back({{"point", to_string(pt)},
                       {"n", n},
                       {"representative", rep.first},
                       {"germs", rep.second}});
    }
  }
  auto const rep = check_full_shift(isg, o.depth, o.max_pre, o.max_period, o.window,
                                    o.serial ? Exec::serial : Exec::parallel);
  ordered_json j;
  j["instance"] = m->name();
  j["depth"] = o.depth;
  j["window"] = o.window;
  j["points"] = rep.points;
  j["classes"] = table;
  j["phi"] = {{"germs", rep.germs},
              {"germ_classes", rep.germ_classes},
              {"pairs", rep.pairs},
              {"bijective", rep.germ_classes == rep.pairs && rep.bijection.failures == 0},
              {"composition_failures", rep.composition.failures},
              {"criterion_mismatches", rep.criterion_vs_search.failures},
              {"passed", rep.passed()}};
  emit(o, j.dump(2) + "\n");
  return rep.passed() ? exit_pass : exit_fail;
}

void add_instance_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--monoid", o.monoid, "free:<k> | grid:<k> | odometer | automaton:<path>")
      ->capture_default_str();
  cmd->add_option("--group-bound", o.group_bound, "unit window of self-similar instances")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LCM-monoid inverse semigroup toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  add_instance_flags(eval, o);
  eval->add_option("expression", o.expression)->required();
  eval->add_option("--out", o.out);

  auto* check = app.add_subcommand("check", "run property suites");
  add_instance_flags(check, o);
  check->add_option("--suite", o.suites, "suite names or 'all'")->delimiter(',');
  check->add_option("--depth", o.depth)->capture_default_str();
  check->add_option("--delta-depth", o.delta_depth)->capture_default_str();
  check->add_option("--seed", o.seed)->capture_default_str();
  check->add_option("--words", o.words, "random words for the reduction check")
      ->capture_default_str();
  check->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  check->add_option("--out", o.out);
  check->add_flag("--timing", o.timing, "include wall time in the report");
  check->add_flag("--serial", o.serial, "run sweeps on one thread");

  auto* matrix = app.add_subcommand("matrix", "operator of an expression on the Δ window");
  add_instance_flags(matrix, o);
  matrix->add_option("expression", o.expression)->required();
  matrix->add_option("--delta-depth", o.delta_depth)->capture_default_str();
  matrix->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  matrix->add_option("--out", o.out);

  auto* spectra = app.add_subcommand("spectra", "filters of the ideal semilattices");
  add_instance_flags(spectra, o);
  spectra->add_option("--depth", o.depth)->capture_default_str();
  spectra->add_option("--format", o.format)->check(CLI::IsMember({"json"}));
  spectra->add_option("--out", o.out);

  auto* groupoid = app.add_subcommand("groupoid", "germ table and the map to Z x points");
  add_instance_flags(groupoid, o);
  groupoid->add_option("--depth", o.depth, "slot length of the triples")->capture_default_str();
  groupoid->add_option("--window", o.window, "largest |n|")->capture_default_str();
  groupoid->add_option("--max-pre", o.max_pre)->capture_default_str();
  groupoid->add_option("--max-period", o.max_period)->capture_default_str();
  groupoid->add_option("--format", o.format)->check(CLI::IsMember({"json"}));
  groupoid->add_option("--out", o.out);
  groupoid->add_flag("--serial", o.serial);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*eval) {
      return run_eval(o);
    }
    if (*check) {
      return run_check(o);
    }
    if (*matrix) {
      return run_matrix(o);
    }
    if (*spectra) {
      return run_spectra(o);
    }
    if (*groupoid) {
      return run_groupoid(o);
    }
  } catch (ResourceLimit const& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (UsageError const& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return exit_usage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
