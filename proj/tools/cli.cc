#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "xyzcyclic/distance.h"
#include "xyzcyclic/errors.h"
#include "xyzcyclic/oracle.h"

namespace xyz::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T v{};
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw UsageError("bad value '" + text + "' for " + key);
  return v;
}

XYZParams parse_code(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("code '" + s + "' must be written a:b");
  return {parse_number<std::size_t>("codes", trim(s.substr(0, colon))),
          parse_number<std::size_t>("codes", trim(s.substr(colon + 1)))};
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& key, const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const auto v = parse_number<std::size_t>(key, s);
    return {v, v};
  }
  return {parse_number<std::size_t>(key, s.substr(0, colon)), parse_number<std::size_t>(key, s.substr(colon + 1))};
}

// Writes to --out when given, otherwise to the default stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
      os_ = file_.get();
    }
  }
  std::ostream& get() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

json repetition_json(const XYZParams& p) {
  if (code_dimension(p) != 1) return "inapplicable";
  json r;
  for (PauliType t : {PauliType::X, PauliType::Y, PauliType::Z}) {
    r[std::string(1, pauli_char(t))] = has_repetition_structure(p, t);
  }
  return r;
}

std::size_t rank_dimension(const XYZParams& p) {
  const StabilizerCode code = build_code(p);
  return code.num_qubits() - code.independent_rank();
}

json report_json(const DistanceReport& r) {
  json j;
  if (r.params) {
    j["a"] = r.params->a;
    j["b"] = r.params->b;
  }
  j["N"] = r.n;
  j["d_x_up"] = r.d_x_up;
  j["d_z_up"] = r.d_z_up;
  j["d_y_up"] = r.d_y_up;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["skipped"] = r.skipped;
  j["witnesses"] = {{"X", r.x_witness.label()}, {"Z", r.z_witness.label()}, {"Y", r.y_witness.label()}};
  return j;
}

std::string class_name(oracle::LogicalClass c) {
  switch (c) {
    case oracle::LogicalClass::X:
      return "X";
    case oracle::LogicalClass::Z:
      return "Z";
    case oracle::LogicalClass::Y:
      return "Y";
    case oracle::LogicalClass::Other:
      return "other";
  }
  return "other";
}

struct DecoderFlags {
  std::size_t osd_order = 2;
  std::size_t max_iterations = 30;
  std::string bp_variant = "product_sum";
  std::string schedule = "parallel";
  double min_sum_scale = 1.0;

  void add(CLI::App* app) {
    app->add_option("--osd-order", osd_order, "OSD order");
    app->add_option("--max-iterations", max_iterations, "BP iteration cap");
    app->add_option("--bp-variant", bp_variant, "product_sum or min_sum");
    app->add_option("--schedule", schedule, "parallel or serial");
    app->add_option("--min-sum-scale", min_sum_scale, "min-sum scaling factor");
  }
  DecoderConfig config() const {
    DecoderConfig cfg = default_distance_decoder();
    cfg.osd_order = osd_order;
    cfg.max_bp_iterations = max_iterations;
    cfg.bp_variant = parse_bp_variant(bp_variant);
    cfg.schedule = parse_bp_schedule(schedule);
    cfg.min_sum_scale = min_sum_scale;
    cfg.validate();
    return cfg;
  }
};

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

CampaignConfig parse_campaign(const std::string& text) {
  CampaignConfig c;
  bool have_trials = false;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "codes") {
      c.codes.clear();
      for (const auto& s : split(value, ',')) c.codes.push_back(parse_code(s));
    } else if (key == "noise") {
      c.noise = value;
    } else if (key == "eta") {
      c.eta = parse_number<double>(key, value);
    } else if (key == "p") {
      c.p_grid.clear();
      for (const auto& s : split(value, ',')) c.p_grid.push_back(parse_number<double>(key, s));
    } else if (key == "trials") {
      c.trials = parse_number<std::size_t>(key, value);
      have_trials = true;
    } else if (key == "seed") {
      c.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "bp_variant") {
      c.decoder.bp_variant = parse_bp_variant(value);
    } else if (key == "max_iterations") {
      c.decoder.max_bp_iterations = parse_number<std::size_t>(key, value);
    } else if (key == "osd_order") {
      c.decoder.osd_order = parse_number<std::size_t>(key, value);
    } else if (key == "schedule") {
      c.decoder.schedule = parse_bp_schedule(value);
    } else if (key == "min_sum_scale") {
      c.decoder.min_sum_scale = parse_number<double>(key, value);
    } else if (key == "pure_decoder") {
      if (value != "circulant" && value != "full") throw UsageError("pure_decoder must be circulant or full");
      c.pure_on_circulant = value == "circulant";
    } else if (key == "out") {
      c.out = value;
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  if (c.codes.empty()) throw UsageError("config: codes must list at least one a:b pair");
  if (c.p_grid.empty()) throw UsageError("config: p must list at least one error rate");
  if (!have_trials || c.trials == 0) throw UsageError("config: trials must be at least 1");
  c.decoder.validate();
  parse_noise(c.noise, c.p_grid.front(), c.eta);
  return c;
}

CampaignConfig load_campaign(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_campaign(ss.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum XYZ cyclic codes: construction, distance estimation and decoding simulations", "xyzc"};
  app.require_subcommand(1);
  std::size_t threads = 0;
  std::string out_path;
  app.add_option("--threads", threads, "worker threads (0 = all available)");
  app.add_option("--out", out_path, "write results to this file instead of stdout");

  std::size_t a = 0, b = 0;

  auto* construct = app.add_subcommand("construct", "describe C(a, b)");
  construct->add_option("--a", a)->required();
  construct->add_option("--b", b)->required();

  std::string a_range = "0", b_range = "0";
  auto* dimension = app.add_subcommand("dimension", "closed-form and rank dimensions over a range");
  dimension->add_option("--a", a_range, "a or lo:hi")->required();
  dimension->add_option("--b", b_range, "b or lo:hi")->required();

  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  double prior_p = 0.05;
  std::size_t exact = 0;
  DecoderFlags dflags;
  auto* distance = app.add_subcommand("distance", "Monte Carlo distance upper bounds");
  distance->add_option("--a", a)->required();
  distance->add_option("--b", b)->required();
  distance->add_option("--trials", trials);
  distance->add_option("--seed", seed);
  distance->add_option("--prior-p", prior_p, "depolarizing prior for the decoder");
  auto* exact_opt = distance->add_option("--exact", exact, "also enumerate logicals up to this weight");
  dflags.add(distance);

  std::string wtype = "Y";
  std::size_t level = 1;
  auto* witness = app.add_subcommand("witness", "closed-form low-weight logicals");
  witness->add_option("--type", wtype, "X or Y")->required();
  witness->add_option("--b", b)->required();
  auto* a_opt = witness->add_option("--a", a, "a (Y witness)");
  auto* l_opt = witness->add_option("--l", level, "level l >= 1 (X witness)");

  std::size_t b_min = 0, b_max = 0, a_max = 300, screen = 200;
  auto* table1 = app.add_subcommand("table1", "search optimal codes for a range of b");
  table1->add_option("--b-min", b_min)->required();
  table1->add_option("--b-max", b_max)->required();
  table1->add_option("--a-max", a_max);
  table1->add_option("--trials", trials);
  table1->add_option("--screen-trials", screen);
  table1->add_option("--seed", seed);
  table1->add_option("--prior-p", prior_p);
  DecoderFlags tflags;
  tflags.add(table1);

  std::string config_path;
  auto* sweep = app.add_subcommand("sweep", "logical error rates over codes and error rates");
  sweep->add_option("--config", config_path, "flat key = value campaign file")->required();

  std::vector<std::string> d_list;
  auto* overhead = app.add_subcommand("overhead", "qubit counts of XYZ cyclic and XZZX codes");
  overhead->add_option("--d", d_list, "distances (comma separated or repeated)")->required()->delimiter(',');

  std::size_t w_max = 0;
  double max_candidates = 1e8;
  bool list = false;
  auto* orc = app.add_subcommand("oracle", "exhaustive logical enumeration");
  orc->add_option("--a", a)->required();
  orc->add_option("--b", b)->required();
  orc->add_option("--w-max", w_max)->required();
  orc->add_option("--max-candidates", max_candidates);
  orc->add_flag("--list", list, "list every logical up to w-max");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return 2;
  }

  try {
    if (construct->parsed()) {
      const XYZParams p{a, b};
      json j{{"a", a}, {"b", b}, {"N", p.n()}, {"k", code_dimension(p)}, {"k_rank", rank_dimension(p)},
             {"generator", seed_generator_label(p)}, {"repetition", repetition_json(p)}};
      Sink sink(out_path, out);
      sink.get() << j.dump(2) << '\n';
    } else if (dimension->parsed()) {
      const auto [alo, ahi] = parse_range("--a", a_range);
      const auto [blo, bhi] = parse_range("--b", b_range);
      Sink sink(out_path, out);
      sink.get() << "# xyzcyclic dimension schema v1\na,b,n,k,k_rank\n";
      for (std::size_t ai = alo; ai <= ahi; ++ai) {
        for (std::size_t bi = blo; bi <= bhi; ++bi) {
          const XYZParams p{ai, bi};
          sink.get() << ai << ',' << bi << ',' << p.n() << ',' << code_dimension(p) << ',' << rank_dimension(p)
                     << '\n';
        }
      }
    } else if (distance->parsed()) {
      if (trials == 0) throw UsageError("--trials must be at least 1");
      const XYZParams p{a, b};
      DistanceOptions opts;
      opts.prior_p = prior_p;
      opts.threads = threads;
      DistanceReport rep = distance_upper_bound(build_code(p), trials, dflags.config(), seed, opts);
      rep.params = p;
      json j = report_json(rep);
      if (exact_opt->count() > 0) {
        const auto d = exhaustive_distance(build_code(p), exact);
        j["exact"] = {{"w_max", exact}, {"distance", d ? json(*d) : json(nullptr)}};
      }
      Sink sink(out_path, out);
      sink.get() << j.dump(2) << '\n';
    } else if (witness->parsed()) {
      const PauliType t = parse_pauli_type(wtype);
      PauliString w;
      XYZParams p;
      if (t == PauliType::X) {
        if (l_opt->count() == 0) throw UsageError("X witness needs --l");
        p = x_witness_params(b, level);
        w = x_logical_witness(b, level);
      } else if (t == PauliType::Y) {
        if (a_opt->count() == 0) throw UsageError("Y witness needs --a");
        p = {a, b};
        w = y_logical_witness(p);
      } else {
        throw UsageError("--type must be X or Y");
      }
      json j{{"type", std::string(1, pauli_char(t))}, {"a", p.a},          {"b", p.b},
             {"N", p.n()},                         {"weight", weight(w)}, {"label", w.label()},
             {"is_logical", is_logical(build_code(p), w)}};
      Sink sink(out_path, out);
      sink.get() << j.dump(2) << '\n';
    } else if (table1->parsed()) {
      if (trials == 0) throw UsageError("--trials must be at least 1");
      SearchOptions opts;
      opts.screen_trials = screen;
      opts.distance.prior_p = prior_p;
      opts.distance.threads = threads;
      const DecoderConfig cfg = tflags.config();
      Sink sink(out_path, out);
      sink.get() << "# xyzcyclic table1 schema v1\nb,a,n,d_x,d_z,d_y\n";
      for (std::size_t bi = b_min; bi <= b_max; ++bi) {
        err << "table1: searching b=" << bi << '\n';
        const auto hit = search_optimal(bi, a_max, trials, cfg, seed, opts);
        if (!hit) {
          err << "table1: no optimal code for b=" << bi << " with a <= " << a_max << '\n';
          continue;
        }
        const DistanceReport& r = hit->second;
        sink.get() << bi << ',' << hit->first << ',' << r.n << ',' << r.d_x_up << ',' << r.d_z_up << ','
                   << r.d_y_up << '\n';
        sink.get().flush();
      }
    } else if (sweep->parsed()) {
      const CampaignConfig c = load_campaign(config_path);
      SimulationOptions opts;
      opts.threads = threads;
      opts.pure_on_circulant = c.pure_on_circulant;
      const NoiseModel kind = parse_noise(c.noise, c.p_grid.front(), c.eta);
      std::vector<RateEstimate> rows;
      for (const auto& code : c.codes) {
        for (double p : c.p_grid) {
          err << "sweep: C(" << code.a << "," << code.b << ") p=" << format_double(p) << '\n';
          NoiseModel m = kind;
          m.p = p;
          rows.push_back(logical_error_rate(code, m, c.trials, c.decoder, c.seed, opts));
        }
      }
      Sink sink(out_path.empty() ? c.out : out_path, out);
      write_sweep_csv(sink.get(), rows);
    } else if (overhead->parsed()) {
      std::vector<OverheadRow> rows;
      for (const auto& d : d_list) rows.push_back(overhead_row(parse_number<std::size_t>("--d", d)));
      Sink sink(out_path, out);
      sink.get() << "# xyzcyclic overhead schema v1\nd,xyz_n,xzzx_n\n";
      for (const auto& r : rows) sink.get() << r.d << ',' << r.xyz_n << ',' << r.xzzx_n << '\n';
    } else if (orc->parsed()) {
      const XYZParams p{a, b};
      const StabilizerCode code = build_code(p);
      oracle::EnumerationBudget budget;
      budget.max_candidates = max_candidates;
      json j{{"a", a}, {"b", b}, {"N", p.n()}, {"w_max", w_max}};
      if (list) {
        json items = json::array();
        for (const auto& l : oracle::enumerate_logicals(code, w_max, budget)) {
          items.push_back({{"label", l.op.label()}, {"weight", weight(l.op)}, {"class", class_name(l.cls)}});
        }
        j["logicals"] = items;
      } else {
        const auto hit = oracle::find_min_weight_logical(code, w_max, budget);
        j["min_weight"] = hit ? json(weight(*hit)) : json(nullptr);
        j["witness"] = hit ? json(hit->label()) : json(nullptr);
      }
      Sink sink(out_path, out);
      sink.get() << j.dump(2) << '\n';
    }
  } catch (const UsageError& e) {
    write_error(err, "usage", e.what());
    return 2;
  } catch (const PreconditionError& e) {
    write_error(err, "precondition", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    write_error(err, "invalid_argument", e.what());
    return 2;
  } catch (const BudgetExceeded& e) {
    write_error(err, "budget", e.what());
    return 4;
  } catch (const std::exception& e) {
    write_error(err, "failure", e.what());
    return 1;
  }
  return 0;
}

}  // namespace xyz::cli
