// Copyright 2026 The voidspread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end. Subcommands drive the library modules and emit
// plot-ready data files (JSON lines, CSV, portable bitmaps) plus a run
// manifest per invocation. All exact quantities are written as exact
// decimal integers or rationals; floats appear only for Monte Carlo means
// and for derived logarithm columns.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "CLI11.hpp"
#include "voidspread/census.hpp"
#include "voidspread/constraints.hpp"
#include "voidspread/entropy.hpp"
#include "voidspread/gates.hpp"
#include "voidspread/haar.hpp"
#include "voidspread/io.hpp"
#include "voidspread/rvd.hpp"

using namespace voidspread;
using nlohmann::json;

namespace {

constexpr long long kDefaultBudget = 100000000LL;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void finish(io::RunManifest& m, const Timer& timer,
            const std::string& out_prefix) {
  m.wall_seconds = timer.seconds();
  const std::string path = out_prefix + ".manifest.json";
  io::write_manifest(path, m);
  for (const auto& [name, digest] : m.outputs)
    std::cout << name << "  " << digest << "\n";
  std::cout << path << "\n";
}

std::string qpower_value_str(const QPower& v) {
  if (v.is_zero()) return "0";
  cpp_int mag = 1;
  for (long long i = 0; i < std::llabs(v.exponent); ++i) mag *= v.q;
  if (v.exponent >= 0) return mag.str();
  return "1/" + mag.str();
}

json qpower_json(const QPower& v) {
  return json{{"q", v.q},
              {"mantissa", v.mantissa},
              {"exponent", v.exponent},
              {"value", qpower_value_str(v)}};
}

json census_options_json(const CensusOptions& opts, const std::string& method) {
  json j{{"method", method}, {"budget", opts.budget}};
  if (opts.lattice) {
    j["lattice"] = io::interval_spec(*opts.lattice);
    j["enforce_cone_in_lattice"] = opts.enforce_cone_in_lattice;
  }
  return j;
}

Method parse_method(const std::string& s) {
  if (s == "auto") return Method::kAuto;
  if (s == "enumerate") return Method::kEnumerate;
  if (s == "kernel") return Method::kKernel;
  throw std::invalid_argument("unknown method: " + s);
}

double log_q(const cpp_int& value, int q) {
  return boost::multiprecision::log(
             boost::multiprecision::cpp_dec_float_50(value))
             .convert_to<double>() /
         std::log(static_cast<double>(q));
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json report_json(const ConstraintReport& r) {
  return json{{"id", r.id},
              {"model", model_name(r.model)},
              {"q", r.q},
              {"t", r.t},
              {"inputs", r.inputs},
              {"left", r.left.str()},
              {"right", r.right.str()},
              {"applicable", r.applicable},
              {"pass", r.pass},
              {"notes", r.notes}};
}

// ---------------------------------------------------------------------------

struct CensusArgs {
  std::string model, a_spec, b_spec, t_spec;
  std::string method = "auto";
  std::string lattice_spec;
  bool reflecting = false;
  int q = 3;
  int threads = 0;
  long long budget = kDefaultBudget;
  std::string out = "census";
};

int run_census(const CensusArgs& a) {
  Timer timer;
  const Model model = model_from_name(a.model);
  const Region A = io::parse_region(a.a_spec);
  const Region B = io::parse_region(a.b_spec);
  const std::vector<int> ts = io::parse_t_range(a.t_spec);

  CensusOptions opts;
  opts.method = parse_method(a.method);
  opts.budget = a.budget;
  opts.threads = a.threads;
  if (!a.lattice_spec.empty()) {
    opts.lattice = io::parse_interval(a.lattice_spec);
    opts.enforce_cone_in_lattice = !a.reflecting;
  }

  std::string jsonl, csv = "t,N,G\n";
  for (int t : ts) {
    CensusResult r;
    try {
      r = census(model, a.q, A, B, t, opts);
    } catch (const BudgetError& e) {
      std::cerr << "census: enumeration budget exceeded at t=" << t
                << ": need about " << e.required.str()
                << " operator evaluations (budget " << a.budget
                << "; raise --budget or VOIDSPREAD_BUDGET)\n";
      return 2;
    }
    json rec{{"model", model_name(model)},
             {"q", a.q},
             {"A", io::region_json(A)},
             {"B", io::region_json(B)},
             {"t", t},
             {"N", r.N.str()},
             {"G", r.G.str()},
             {"method", r.enumerated ? "enumerate" : "kernel"}};
    jsonl += rec.dump() + "\n";
    csv += std::to_string(t) + "," + r.N.str() + "," + r.G.str() + "\n";
  }

  io::RunManifest m;
  m.subcommand = "census";
  m.budget = a.budget;
  m.params = json{{"model", model_name(model)},
                  {"q", a.q},
                  {"A", a.a_spec},
                  {"B", a.b_spec},
                  {"t", a.t_spec},
                  {"census", census_options_json(opts, a.method)},
                  {"threads", a.threads},
                  {"out", a.out}};
  io::emit_output(m, a.out + ".jsonl", jsonl);
  io::emit_output(m, a.out + ".csv", csv);
  finish(m, timer, a.out);
  return 0;
}

// ---------------------------------------------------------------------------

struct RvdArgs {
  int q = 3;
  long long t = 0;
  std::vector<long long> components;
  long long len_a = -1, len_b = -1;
  long long len_a1 = -1, len_a2 = -1, len_r = -1;
  long long l_i = -1, l_f = -1;
  long long len_g = -1;
  std::string out = "rvd";
};

int run_rvd(const RvdArgs& a) {
  Timer timer;
  json doc{{"q", a.q}, {"t", a.t}};

  if (!a.components.empty()) {
    RvdQuery query;
    query.q = a.q;
    query.component_lengths = a.components;
    query.t = a.t;
    doc["void_probability"] = json{{"component_lengths", a.components},
                                   {"value", qpower_json(
                                                 rvd_void_probability(query))}};
  }
  if (a.len_a >= 0 && a.len_b >= 0) {
    QPower g = rvd_G(a.q, a.len_a, a.len_b, a.t);
    std::string branch;
    if (2 * a.t <= a.len_a)
      branch = "inside the light-cone window (2t <= |A|): 1";
    else if (a.len_b <= 2 * a.len_a)
      branch = "window too small (|B| <= 2|A|): 1";
    else
      branch = "q^(|B|-2|A|)";
    doc["G"] = json{{"lenA", a.len_a},
                    {"lenB", a.len_b},
                    {"branch", branch},
                    {"value", qpower_json(g)}};
  }
  if (a.len_a1 >= 0 && a.len_a2 >= 0 && a.len_r >= 0) {
    doc["two_interval_S2"] =
        json{{"lenA1", a.len_a1},
             {"lenA2", a.len_a2},
             {"lenR", a.len_r},
             {"s_eq_units", rvd_two_interval_s2(a.len_a1, a.len_a2, a.len_r,
                                                a.t)}};
  }
  if (a.l_i >= 0 && a.l_f >= 0) {
    TransitionResult tr = transition_probability(a.q, a.l_i, a.l_f, a.t);
    doc["transition"] = json{{"l_i", a.l_i},
                             {"l_f", a.l_f},
                             {"causal", tr.causal},
                             {"probability", qpower_json(tr.probability)}};
  }
  if (a.len_a >= 0) {
    doc["haar_trivial"] =
        json{{"lenA", a.len_a},
             {"value", qpower_json(haar_average_trivial_probability(
                           a.q, a.len_a))}};
  }
  if (a.len_a >= 0 && a.len_g >= 0) {
    InitialVoidBreakdown b =
        initial_void_probability(a.q, a.len_a, a.len_g, a.t);
    doc["initial_void"] =
        json{{"lenA", a.len_a},
             {"lenG", a.len_g},
             {"connected", qpower_json(b.connected)},
             {"connected_admissible", b.connected_admissible},
             {"disconnected", qpower_json(b.disconnected)},
             {"disconnected_admissible", b.disconnected_admissible},
             {"best", qpower_json(b.best)},
             {"crossover_t", b.crossover_t}};
  }

  io::RunManifest m;
  m.subcommand = "rvd";
  m.params = json{{"q", a.q},           {"t", a.t},
                  {"components", a.components},
                  {"lenA", a.len_a},    {"lenB", a.len_b},
                  {"lenA1", a.len_a1},  {"lenA2", a.len_a2},
                  {"lenR", a.len_r},    {"li", a.l_i},
                  {"lf", a.l_f},        {"lenG", a.len_g},
                  {"out", a.out}};
  io::emit_output(m, a.out + ".json", doc.dump(2) + "\n");
  finish(m, timer, a.out);
  return 0;
}

// ---------------------------------------------------------------------------

struct EntropyArgs {
  std::string intervals_spec, t_spec;
  int cap = kDefaultPermutationCap;
  std::string out = "entropy";
};

std::string min_config_str(const IntervalSystem& system, int cap) {
  std::vector<EndpointConfig> configs = enumerate_configs(system, false, cap);
  const EndpointConfig* best = nullptr;
  for (const EndpointConfig& c : configs)
    if (!best || c.cost < best->cost) best = &c;
  if (!best) return "";
  std::string out;
  for (const auto& [i, j] : best->pairs) {
    if (!out.empty()) out.push_back(';');
    out += std::to_string(i) + "-" + std::to_string(j);
  }
  out += (out.empty() ? "" : "|");
  out += "unpaired=" + std::to_string(best->unpaired);
  return out;
}

int run_entropy(const EntropyArgs& a) {
  Timer timer;
  std::vector<Segment> segments;
  for (const std::string& part : io::split(a.intervals_spec, ',')) {
    std::vector<std::string> f = io::split(part, ':');
    if (f.size() != 2)
      throw std::invalid_argument("intervals: expected 'l:r', got '" + part +
                                  "'");
    segments.push_back(Segment{io::parse_ll(f[0], "left endpoint"),
                               io::parse_ll(f[1], "right endpoint")});
  }
  const std::vector<int> ts = io::parse_t_range(a.t_spec);
  const bool two = segments.size() == 2;

  std::string csv = "t,hol1,hol2,hol2_adjacent,adjacent_dp";
  if (two) csv += ",I2";
  csv += ",min_config\n";
  for (int t : ts) {
    IntervalSystem system{segments, t};
    csv += std::to_string(t);
    csv += "," + std::to_string(s2_hol1(system, a.cap));
    csv += "," + std::to_string(s2_hol2(system, false, a.cap));
    csv += "," + std::to_string(s2_hol2(system, true, a.cap));
    csv += "," + std::to_string(s2_adjacent_dp(system));
    if (two) csv += "," + std::to_string(mutual_information_2(system));
    csv += "," + min_config_str(system, a.cap) + "\n";
  }

  io::RunManifest m;
  m.subcommand = "entropy";
  m.params = json{{"intervals", a.intervals_spec},
                  {"t", a.t_spec},
                  {"cap", a.cap},
                  {"out", a.out}};
  io::emit_output(m, a.out + ".csv", csv);
  finish(m, timer, a.out);
  return 0;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  int q = 2;
  int L = 0;
  int layers = 0;
  std::string a_spec;
  std::string alpha_spec = "0:1:0";
  long long samples = 500;
  unsigned long long seed = 1;
  int threads = 0;
  bool per_sample = false;
  std::string out = "oracle";
};

int run_oracle(const OracleArgs& a) {
  Timer timer;
  const Region A = io::parse_region(a.a_spec);
  const PauliString alpha = io::parse_op_spec(a.alpha_spec, a.q);

  McEstimate est = void_probability_mc(a.q, a.L, a.layers, A, alpha,
                                       a.samples, a.seed, a.threads);

  json params{{"q", a.q},         {"L", a.L},
              {"layers", a.layers}, {"A", a.a_spec},
              {"alpha", a.alpha_spec}, {"samples", a.samples},
              {"threads", a.threads}};
  json doc{{"params", params},
           {"seed", a.seed},
           {"mean", est.mean},
           {"std_error", est.std_error},
           {"samples", est.samples}};

  io::RunManifest m;
  m.subcommand = "oracle";
  m.params = params;
  m.params["out"] = a.out;
  m.seeds = json{{"seed", a.seed}};
  io::emit_output(m, a.out + ".json", doc.dump(2) + "\n");
  if (a.per_sample) {
    std::string csv = "sample,value\n";
    for (long long s = 0; s < a.samples; ++s) {
      SampledCircuit c = sample_circuit(a.q, a.L, a.layers, a.seed,
                                        static_cast<std::uint32_t>(s));
      csv += std::to_string(s) + "," +
             fmt_double(void_probability_sample(c, A, alpha)) + "\n";
    }
    io::emit_output(m, a.out + ".samples.csv", csv);
  }
  finish(m, timer, a.out);
  return 0;
}

// ---------------------------------------------------------------------------

struct ConstraintsArgs {
  std::string model = "both";
  std::string sweep = "default";
  int layouts = 200;
  unsigned long long seed = 20260814ULL;
  int q = 3;
  int t_min = 1;
  int t_max = 9;
  long long budget = kDefaultBudget;
  int threads = 0;
  std::string out = "constraints";
};

int run_constraints(const ConstraintsArgs& a) {
  Timer timer;
  if (a.sweep != "default")
    throw std::invalid_argument("unknown sweep preset: " + a.sweep);
  std::vector<Model> models;
  if (a.model == "both") {
    models = {Model::kFreePropagation, Model::kPerfectTensor};
  } else {
    models = {model_from_name(a.model)};
  }

  SweepOptions o;
  o.layouts = a.layouts;
  o.seed = a.seed;
  o.q = a.q;
  o.min_t = a.t_min;
  o.max_t = a.t_max;
  o.census.budget = a.budget;
  o.census.threads = a.threads;

  std::string jsonl;
  json models_summary = json::array();
  long long failed_total = 0;
  for (Model model : models) {
    SweepSummary s = run_constraint_sweep(model, o);
    failed_total += s.failed;
    for (const ConstraintReport& r : s.all) jsonl += report_json(r).dump() + "\n";
    json by_id = json::object();
    for (const auto& [id, n] : s.applicable_by_id) by_id[id] = n;
    models_summary.push_back(json{{"model", model_name(model)},
                                  {"reports", s.reports},
                                  {"applicable", s.applicable},
                                  {"passed", s.passed},
                                  {"failed", s.failed},
                                  {"skipped", s.skipped},
                                  {"boundary_ties", s.boundary_ties},
                                  {"applicable_by_id", by_id}});
  }
  json summary{{"models", models_summary}, {"failed_total", failed_total}};

  io::RunManifest m;
  m.subcommand = "constraints";
  m.budget = a.budget;
  m.seeds = json{{"seed", a.seed}};
  m.params = json{{"model", a.model},     {"sweep", a.sweep},
                  {"layouts", a.layouts}, {"q", a.q},
                  {"t-min", a.t_min},     {"t-max", a.t_max},
                  {"threads", a.threads}, {"out", a.out}};
  io::emit_output(m, a.out + ".jsonl", jsonl);
  io::emit_output(m, a.out + ".summary.json", summary.dump(2) + "\n");
  finish(m, timer, a.out);
  if (failed_total > 0) {
    std::cerr << "constraints: " << failed_total
              << " applicable check(s) failed\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct FractalArgs {
  std::string model = "perfect-tensor";
  int q = 3;
  std::string op_spec = "0:1:0";
  int layers = 81;
  std::string lattice_spec;
  int first_layer = 0;
  std::string out = "fractal";
};

int run_fractal(const FractalArgs& a) {
  Timer timer;
  CircuitSpec circuit;
  circuit.model = model_from_name(a.model);
  circuit.q = a.q;
  circuit.layers = a.layers;
  circuit.first_layer = a.first_layer;
  if (!a.lattice_spec.empty()) circuit.lattice = io::parse_interval(a.lattice_spec);
  const PauliString p0 = io::parse_op_spec(a.op_spec, a.q);

  SupportBitmap bm = support_bitmap(p0, circuit, a.layers);
  const size_t width = bm.rows.empty() ? 0 : bm.rows.front().size();

  std::string pbm = "P1\n# rows are layers 0.." + std::to_string(a.layers) +
                    ", columns are sites " + std::to_string(bm.origin) + ".." +
                    std::to_string(bm.origin + static_cast<site_t>(width) - 1) +
                    "\n" + std::to_string(width) + " " +
                    std::to_string(bm.rows.size()) + "\n";
  std::string csv = "layer,support_count,min_site,max_site,interior_voids\n";
  for (size_t r = 0; r < bm.rows.size(); ++r) {
    const auto& row = bm.rows[r];
    int count = 0, first = -1, last = -1;
    for (size_t i = 0; i < row.size(); ++i) {
      pbm += row[i] ? '1' : '0';
      pbm += i + 1 < row.size() ? ' ' : '\n';
      if (row[i]) {
        ++count;
        if (first < 0) first = static_cast<int>(i);
        last = static_cast<int>(i);
      }
    }
    csv += std::to_string(r) + "," + std::to_string(count) + ",";
    if (count > 0) {
      csv += std::to_string(bm.origin + first) + "," +
             std::to_string(bm.origin + last);
    } else {
      csv += ",";
    }
    csv += "," + std::to_string(interior_void_count(row)) + "\n";
  }

  io::RunManifest m;
  m.subcommand = "fractal";
  m.params = json{{"model", a.model},
                  {"q", a.q},
                  {"op", a.op_spec},
                  {"layers", a.layers},
                  {"lattice", a.lattice_spec},
                  {"first-layer", a.first_layer},
                  {"out", a.out}};
  io::emit_output(m, a.out + ".pbm", pbm);
  io::emit_output(m, a.out + ".csv", csv);
  finish(m, timer, a.out);
  return 0;
}

// ---------------------------------------------------------------------------

struct Fig13Args {
  int q = 3;
  int L = 80;
  std::string b_spec = "40:47";
  std::vector<int> len_a = {2, 8};
  std::string t_spec = "1..60";
  int samples = 120;
  unsigned long long seed = 20260814ULL;
  int margin = 3;
  int large_t_min = 48;
  long long budget = kDefaultBudget;
  std::string out = "fig13";
};

int run_scan_fig13(const Fig13Args& a) {
  Timer timer;
  const Region B = io::parse_region(a.b_spec);
  const std::vector<int> ts = io::parse_t_range(a.t_spec);
  const long long len_b = *B.size();

  CensusOptions opts;
  opts.lattice = Interval(0, a.L - 1);
  opts.enforce_cone_in_lattice = false;
  opts.budget = a.budget;

  std::string csv = "lenA,sample,a,t,G,log_q_G\n";
  json summaries = json::array();
  bool ok = true;
  for (int len : a.len_a) {
    LayoutSampler rng(a.seed, static_cast<unsigned long long>(len));
    const long long lo = a.margin;
    const long long hi = a.L - 1 - a.margin - (len - 1);
    if (hi < lo)
      throw std::invalid_argument("scan-fig13: margin leaves no positions");
    const QPower rvd_large = rvd_G(a.q, len, len_b, a.large_t_min);
    cpp_int rvd_value = 1;
    for (long long i = 0; i < rvd_large.exponent; ++i) rvd_value *= a.q;

    std::optional<cpp_int> min_large, max_all;
    long long above_rvd = 0, large_rows = 0;
    for (int s = 0; s < a.samples; ++s) {
      const long long pos = rng.uniform(lo, hi);
      Region A{Interval(pos, pos + len - 1)};
      for (int t : ts) {
        CensusResult r = census(Model::kPerfectTensor, a.q, A, B, t, opts);
        csv += std::to_string(len) + "," + std::to_string(s) + "," +
               std::to_string(pos) + "," + std::to_string(t) + "," +
               r.G.str() + "," + fmt_double(log_q(r.G, a.q)) + "\n";
        if (!max_all || r.G > *max_all) max_all = r.G;
        if (t >= a.large_t_min) {
          ++large_rows;
          if (!min_large || r.G < *min_large) min_large = r.G;
          if (r.G > rvd_value) ++above_rvd;
        }
      }
    }
    const bool meets = min_large && *min_large >= rvd_value;
    ok = ok && meets && large_rows > 0;
    summaries.push_back(json{
        {"lenA", len},
        {"rvd_G_large_t", rvd_value.str()},
        {"rvd_log", rvd_large.exponent},
        {"large_t_min", a.large_t_min},
        {"large_t_rows", large_rows},
        {"min_G_large_t", min_large ? min_large->str() : ""},
        {"min_log_large_t", min_large ? log_q(*min_large, a.q) : 0.0},
        {"rows_above_rvd", above_rvd},
        {"max_G", max_all ? max_all->str() : ""},
        {"meets_rvd_floor", meets}});
  }
  json summary{{"B", io::region_json(B)},
               {"L", a.L},
               {"samples_per_length", a.samples},
               {"lengths", summaries},
               {"all_meet_rvd_floor", ok}};

  io::RunManifest m;
  m.subcommand = "scan-fig13";
  m.budget = a.budget;
  m.seeds = json{{"seed", a.seed}};
  m.params = json{{"q", a.q},
                  {"L", a.L},
                  {"B", a.b_spec},
                  {"lenA", a.len_a},
                  {"t", a.t_spec},
                  {"samples", a.samples},
                  {"margin", a.margin},
                  {"large-t-min", a.large_t_min},
                  {"out", a.out}};
  io::emit_output(m, a.out + ".csv", csv);
  io::emit_output(m, a.out + ".summary.json", summary.dump(2) + "\n");
  finish(m, timer, a.out);
  if (!ok) {
    std::cerr << "scan-fig13: sampled void counts fall below the "
                 "random-void floor\n";
    return 1;
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{
      "voidspread: void formation in operator spreading - census, "
      "predictions, entropies, and constraint sweeps"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Config file; keys mirror long option names, command line "
                 "wins");

  CensusArgs census_args;
  auto* c = app.add_subcommand(
      "census", "Exact void census G / containment count N over a time grid");
  c->add_option("--model", census_args.model, "free | perfect-tensor")
      ->required();
  c->add_option("--q", census_args.q, "qudit dimension");
  c->add_option("--A", census_args.a_spec,
                "census region, e.g. 8:11 or 0:3,6:9 (-inf/+inf for rays)")
      ->required();
  c->add_option("--B", census_args.b_spec, "initial window, e.g. 6:13")
      ->required();
  c->add_option("--t", census_args.t_spec, "time grid start..end[:step]")
      ->required();
  c->add_option("--method", census_args.method, "auto | enumerate | kernel");
  c->add_option("--lattice", census_args.lattice_spec,
                "finite open-boundary lattice a:b");
  c->add_flag("--reflecting", census_args.reflecting,
              "allow light cones to hit the open boundary");
  c->add_option("--threads", census_args.threads, "worker threads (0 = auto)");
  c->add_option("--budget", census_args.budget,
                "enumeration budget (operator evaluations)")
      ->envname("VOIDSPREAD_BUDGET");
  c->add_option("--out", census_args.out, "output file prefix");

  RvdArgs rvd_args;
  auto* r = app.add_subcommand(
      "rvd", "Random-void-distribution predictions, branch by branch");
  r->add_option("--q", rvd_args.q, "qudit dimension");
  r->add_option("--t", rvd_args.t, "layers")->required();
  r->add_option("--components", rvd_args.components,
                "region component lengths for the void probability")
      ->delimiter(',');
  r->add_option("--lenA", rvd_args.len_a, "census region length");
  r->add_option("--lenB", rvd_args.len_b, "initial window length");
  r->add_option("--lenA1", rvd_args.len_a1, "first interval length");
  r->add_option("--lenA2", rvd_args.len_a2, "second interval length");
  r->add_option("--lenR", rvd_args.len_r, "gap length");
  r->add_option("--li", rvd_args.l_i, "initial operator length");
  r->add_option("--lf", rvd_args.l_f, "final operator length");
  r->add_option("--lenG", rvd_args.len_g, "initial void length");
  r->add_option("--out", rvd_args.out, "output file prefix");

  EntropyArgs entropy_args;
  auto* e = app.add_subcommand(
      "entropy", "Minimal-cut second Renyi entropies over a time grid");
  e->add_option("--intervals", entropy_args.intervals_spec,
                "endpoint pairs l:r,l:r,... (interval length = r - l)")
      ->required();
  e->add_option("--t", entropy_args.t_spec, "time grid start..end[:step]")
      ->required();
  e->add_option("--cap", entropy_args.cap, "max intervals for permutations");
  e->add_option("--out", entropy_args.out, "output file prefix");

  OracleArgs oracle_args;
  auto* o = app.add_subcommand(
      "oracle", "Monte Carlo void probability in Haar brickwork circuits");
  o->add_option("--q", oracle_args.q, "qudit dimension");
  o->add_option("--L", oracle_args.L, "lattice sites")->required();
  o->add_option("--layers", oracle_args.layers, "circuit layers")->required();
  o->add_option("--A", oracle_args.a_spec, "void region, e.g. 2:3")
      ->required();
  o->add_option("--alpha", oracle_args.alpha_spec,
                "initial operator site:xexp:zexp,...");
  o->add_option("--samples", oracle_args.samples, "circuit samples");
  o->add_option("--seed", oracle_args.seed, "base seed");
  o->add_option("--threads", oracle_args.threads, "worker threads (0 = auto)");
  o->add_flag("--per-sample", oracle_args.per_sample,
              "also write one CSV row per sampled circuit");
  o->add_option("--out", oracle_args.out, "output file prefix");

  ConstraintsArgs constraints_args;
  auto* k = app.add_subcommand(
      "constraints", "Randomized constraint sweep; nonzero exit on failure");
  k->add_option("--model", constraints_args.model,
                "free | perfect-tensor | both");
  k->add_option("--sweep", constraints_args.sweep, "sweep preset");
  k->add_option("--layouts", constraints_args.layouts, "layouts per model");
  k->add_option("--seed", constraints_args.seed, "layout seed");
  k->add_option("--q", constraints_args.q, "qudit dimension");
  k->add_option("--t-min", constraints_args.t_min, "smallest layer count");
  k->add_option("--t-max", constraints_args.t_max, "largest layer count");
  k->add_option("--budget", constraints_args.budget, "enumeration budget")
      ->envname("VOIDSPREAD_BUDGET");
  k->add_option("--threads", constraints_args.threads,
                "worker threads (0 = auto)");
  k->add_option("--out", constraints_args.out, "output file prefix");

  FractalArgs fractal_args;
  auto* f = app.add_subcommand(
      "fractal", "Support bitmap of one evolving operator, layer by layer");
  f->add_option("--model", fractal_args.model, "free | perfect-tensor");
  f->add_option("--q", fractal_args.q, "qudit dimension");
  f->add_option("--op", fractal_args.op_spec,
                "initial operator site:xexp:zexp,...");
  f->add_option("--layers", fractal_args.layers, "layers to apply");
  f->add_option("--lattice", fractal_args.lattice_spec,
                "finite open-boundary lattice a:b (default: auto-sized)");
  f->add_option("--first-layer", fractal_args.first_layer,
                "absolute index of the first layer (sets brick parity)");
  f->add_option("--out", fractal_args.out, "output file prefix");

  Fig13Args fig13_args;
  auto* g = app.add_subcommand(
      "scan-fig13",
      "Perfect-tensor void counts for sampled intervals against a fixed "
      "window on a finite chain");
  g->add_option("--q", fig13_args.q, "qudit dimension");
  g->add_option("--L", fig13_args.L, "lattice sites");
  g->add_option("--B", fig13_args.b_spec, "fixed initial window");
  g->add_option("--lenA", fig13_args.len_a, "sampled interval lengths")
      ->delimiter(',');
  g->add_option("--t", fig13_args.t_spec, "time grid start..end[:step]");
  g->add_option("--samples", fig13_args.samples, "interval samples per length");
  g->add_option("--seed", fig13_args.seed, "sampling seed");
  g->add_option("--margin", fig13_args.margin,
                "keep sampled intervals this far from the open boundary");
  g->add_option("--large-t-min", fig13_args.large_t_min,
                "first t of the saturated window used for the floor check");
  g->add_option("--budget", fig13_args.budget, "enumeration budget")
      ->envname("VOIDSPREAD_BUDGET");
  g->add_option("--out", fig13_args.out, "output file prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c) return run_census(census_args);
    if (*r) return run_rvd(rvd_args);
    if (*e) return run_entropy(entropy_args);
    if (*o) return run_oracle(oracle_args);
    if (*k) return run_constraints(constraints_args);
    if (*f) return run_fractal(fractal_args);
    if (*g) return run_scan_fig13(fig13_args);
  } catch (const std::exception& ex) {
    std::cerr << app.get_name() << ": " << ex.what() << "\n";
    return 2;
  }
  return 1;
}
