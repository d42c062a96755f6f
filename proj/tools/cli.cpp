#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "extropy/analysis.hpp"
#include "extropy/characterize.hpp"
#include "extropy/error.hpp"
#include "extropy/estimators.hpp"
#include "extropy/measures.hpp"
#include "extropy/orderstats.hpp"
#include "extropy/spec_io.hpp"

namespace extropy::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  double tol = 1e-7;
  std::uint64_t seed = 42;
  std::string output = "-";
  std::string format;
};

struct DistArgs {
  std::string dist;
  int order_min = 0;
  int order_max = 0;
  std::string order;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A value starting with '{' is an inline spec; anything else is a path.
DistributionModel load_dist(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return parse_spec(arg);
  return parse_spec(slurp(arg));
}

void add_dist_options(CLI::App* cmd, DistArgs& a, bool required) {
  auto* opt = cmd->add_option("--dist", a.dist,
                              "distribution spec: JSON file or inline JSON");
  if (required) opt->required();
  auto* mn = cmd->add_option("--order-min", a.order_min,
                             "use X_{1:N} of the distribution")
                 ->check(CLI::Range(1, 60));
  auto* mx = cmd->add_option("--order-max", a.order_max,
                             "use X_{N:N} of the distribution")
                 ->check(CLI::Range(1, 60));
  auto* kn = cmd->add_option("--order", a.order, "use X_{k:n}, given as k:n");
  mn->excludes(mx)->excludes(kn);
  mx->excludes(kn);
}

DistributionModel resolve(const DistArgs& a) {
  DistributionModel d = load_dist(a.dist);
  if (a.order_min > 0) return min_order(d, a.order_min);
  if (a.order_max > 0) return max_order(d, a.order_max);
  if (!a.order.empty()) return kth_order(d, OrderSpec::parse(a.order));
  return d;
}

std::string resolve_format(const Globals& g, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
  const std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("--format " + f + " is not supported by this command");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void emit(const Globals& g, const std::string& content, std::ostream& out) {
  if (g.output.empty() || g.output == "-") {
    out << content;
    out.flush();
  } else {
    write_atomic(g.output, content);
  }
}

MeasureKind make_kind(const std::string& label, int n, std::optional<double> t) {
  const auto type = MeasureKind::parse_type(label);
  if (!type) throw UsageError("unknown measure " + label);
  MeasureKind k{*type, n, 0.0};
  if (k.dynamic()) {
    if (!t) throw UsageError("measure " + label + " needs --t");
    k.t = *t;
  } else if (t) {
    throw UsageError("measure " + label + " takes no --t");
  }
  return k;
}

std::vector<std::string> measure_labels() {
  return {"extropy", "cren",     "cpen",  "crex",      "cpex",     "crex-min",
          "cpex-max", "dcrex", "dcrex-min", "dcpex", "dcpex-max"};
}

std::vector<double> make_grid(double lo, double hi, int steps, bool closed) {
  if (!(hi > lo)) throw UsageError("--t-max must exceed --t-min");
  if (steps < 1) throw UsageError("--steps must be positive");
  return closed ? closed_grid(lo, hi, steps) : open_grid(lo, hi, steps);
}

std::string curve_json(const Curve& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) {
    pts.push_back({{"t", round12(p.t)}, {"value", round12(p.value)}});
  }
  Json rej = Json::array();
  for (double t : c.rejected) rej.push_back(round12(t));
  return dump({{"points", pts}, {"rejected", rej}});
}

std::string curve_output(const Globals& g, const Curve& c) {
  return resolve_format(g, "csv", {"csv", "json"}) == "csv" ? curve_to_csv(c)
                                                             : curve_json(c);
}

std::string reports_text(const std::vector<CheckReport>& rs) {
  std::string out;
  for (const auto& r : rs) {
    out += "[" + to_string(r.verdict) + "] " + r.check_id +
           " worst_margin=" + format_number(r.worst_margin) +
           " points=" + std::to_string(r.points_tested);
    if (r.degenerate) out += " degenerate=" + std::to_string(r.degenerate);
    if (!r.note.empty()) out += " (" + r.note + ")";
    out += "\n";
  }
  return out;
}

}  // namespace

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path dir =
      target.has_parent_path() ? target.parent_path() : fs::path(".");
  std::string tmpl = (dir / ("." + target.filename().string() + ".XXXXXX")).string();
  std::vector<char> name(tmpl.begin(), tmpl.end());
  name.push_back('\0');
  const int fd = ::mkstemp(name.data());
  if (fd < 0) {
    throw Error(ErrorCode::Io, "cannot create temporary file next to " + path +
                                   ": " + std::strerror(errno));
  }
  const std::string tmp(name.data());
  std::size_t done = 0;
  bool ok = true;
  while (done < content.size()) {
    const ssize_t w = ::write(fd, content.data() + done, content.size() - done);
    if (w <= 0) {
      ok = false;
      break;
    }
    done += static_cast<std::size_t>(w);
  }
  ok = (::close(fd) == 0) && ok;
  if (ok) {
    std::error_code ec;
    fs::permissions(tmp,
                    fs::perms::owner_read | fs::perms::owner_write |
                        fs::perms::group_read | fs::perms::others_read,
                    ec);
    fs::rename(tmp, target, ec);
    ok = !ec;
  }
  if (!ok) {
    std::remove(tmp.c_str());
    throw Error(ErrorCode::Io, "cannot write " + path);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Extropy measures for lifetime distributions and their order "
               "statistics"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("EXTROPY_TOL")) {
    char* end = nullptr;
    g.tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(g.tol >= 0.0)) {
      err << "usage error: EXTROPY_TOL must be a nonnegative number\n";
      return 2;
    }
  }
  app.add_option("--tol", g.tol, "inequality tolerance (env EXTROPY_TOL)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--output,-o", g.output, "output path, '-' for stdout");
  app.add_option("--format", g.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  // measure
  auto* measure = app.add_subcommand("measure", "evaluate one measure");
  DistArgs m_dist;
  std::string m_label;
  int m_n = 1;
  std::optional<double> m_t;
  bool m_quad = false;
  add_dist_options(measure, m_dist, true);
  measure->add_option("--measure", m_label, "measure name")
      ->required()
      ->check(CLI::IsMember(measure_labels()));
  measure->add_option("--n", m_n, "order-statistic size")->check(CLI::PositiveNumber);
  measure->add_option("--t", m_t, "age for dynamic measures");
  measure->add_flag("--quadrature", m_quad, "skip closed forms");

  // curve
  auto* curve_cmd = app.add_subcommand("curve", "evaluate a dynamic measure on a grid");
  DistArgs c_dist;
  std::string c_label;
  int c_n = 1, c_steps = 100;
  double c_tmin = 0.0, c_tmax = 0.0;
  std::string c_abscissa = "age";
  bool c_closed = false;
  unsigned c_threads = 1;
  add_dist_options(curve_cmd, c_dist, true);
  curve_cmd->add_option("--measure", c_label, "dcrex, dcrex-min, dcpex or dcpex-max")
      ->required()
      ->check(CLI::IsMember({"dcrex", "dcrex-min", "dcpex", "dcpex-max"}));
  curve_cmd->add_option("--n", c_n)->check(CLI::PositiveNumber);
  curve_cmd->add_option("--t-min", c_tmin)->required();
  curve_cmd->add_option("--t-max", c_tmax)->required();
  curve_cmd->add_option("--steps", c_steps)->capture_default_str();
  curve_cmd->add_option("--abscissa", c_abscissa, "age or log-survival")
      ->check(CLI::IsMember({"age", "log-survival"}));
  curve_cmd->add_flag("--closed", c_closed, "include both grid endpoints");
  curve_cmd->add_option("--threads", c_threads)->check(CLI::Range(1u, 256u));

  // check
  auto* check = app.add_subcommand("check", "run a property-check suite");
  DistArgs k_dist, k_dist2;
  std::string k_suite;
  std::optional<int> k_n;
  bool k_json = false;
  add_dist_options(check, k_dist, true);
  check->add_option("--dist2", k_dist2.dist, "second distribution spec");
  check->add_option("--suite", k_suite)
      ->required()
      ->check(CLI::IsMember({"bounds", "orderings", "inequalities", "all"}));
  check->add_option("--n", k_n)->check(CLI::Range(1, 60));
  check->add_flag("--json", k_json, "same as --format json");

  // characterize
  auto* charz = app.add_subcommand("characterize", "identify GPD or power structure");
  DistArgs z_dist;
  std::string z_curve, z_model;
  int z_n = 1, z_steps = 40;
  std::optional<double> z_tmin, z_tmax;
  add_dist_options(charz, z_dist, false);
  charz->add_option("--curve", z_curve, "CSV curve of DCRExMin (gpd only)");
  charz->add_option("--model", z_model)->required()->check(CLI::IsMember({"gpd", "power"}));
  charz->add_option("--n", z_n)->check(CLI::PositiveNumber);
  charz->add_option("--t-min", z_tmin);
  charz->add_option("--t-max", z_tmax);
  charz->add_option("--steps", z_steps)->capture_default_str();

  // estimate
  auto* est = app.add_subcommand("estimate", "plug-in estimate from a sample");
  std::string e_samples, e_label, e_dist;
  int e_n = 1;
  std::optional<double> e_bound, e_t;
  std::size_t e_draws = 0;
  est->add_option("--samples", e_samples, "sample file, one value per line");
  est->add_option("--dist", e_dist, "draw the sample from this spec instead");
  est->add_option("--draws", e_draws, "sample size when drawing")->check(CLI::PositiveNumber);
  est->add_option("--measure", e_label)->required()->check(
      CLI::IsMember({"crex", "cpex", "dcrex"}));
  est->add_option("--n", e_n)->check(CLI::PositiveNumber);
  est->add_option("--bound", e_bound, "known upper support bound");
  est->add_option("--t", e_t, "age for dcrex");

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "emit a figure curve as CSV");
  std::string r_figure;
  int r_points = 200;
  unsigned r_threads = 1;
  repro->add_option("--figure", r_figure)->required()->check(CLI::IsMember({"2.1", "3.1"}));
  repro->add_option("--points", r_points)->capture_default_str()->check(CLI::Range(3, 1000000));
  repro->add_option("--threads", r_threads)->check(CLI::Range(1u, 256u));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (measure->parsed()) {
      const DistributionModel d = resolve(m_dist);
      const MeasureKind kind = make_kind(m_label, m_n, m_t);
      const MeasureValue v = evaluate(d, kind, EvalOptions{!m_quad});
      const std::string f = resolve_format(g, "json", {"json", "text", "csv"});
      if (f == "json") {
        emit(g, dump(to_json(v)), out);
      } else if (f == "csv") {
        emit(g, "value,method,abs_error_estimate\n" + format_number(v.value) +
                    "," + std::string(to_string(v.method)) + "," +
                    format_number(v.abs_error_estimate) + "\n",
             out);
      } else {
        emit(g, format_number(v.value) + " (" + std::string(to_string(v.method)) +
                    ", error <= " + format_number(v.abs_error_estimate) + ")\n",
             out);
      }
    } else if (curve_cmd->parsed()) {
      const DistributionModel d = resolve(c_dist);
      const MeasureKind kind = make_kind(c_label, c_n, 0.0);
      const std::vector<double> grid = make_grid(c_tmin, c_tmax, c_steps, c_closed);
      const Curve c = curve(d, kind, grid,
                            c_abscissa == "age" ? Abscissa::Age
                                                : Abscissa::LogSurvival,
                            c_threads);
      emit(g, curve_output(g, c), out);
    } else if (check->parsed()) {
      SuiteRequest req;
      req.suite = *parse_suite(k_suite);
      req.n = k_n;
      req.options.tolerance = g.tol;
      if (!k_dist2.dist.empty()) req.second = load_dist(k_dist2.dist);
      const std::vector<CheckReport> reports = run_suite(resolve(k_dist), req);
      const std::string f =
          k_json ? "json" : resolve_format(g, "text", {"text", "json"});
      if (f == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        emit(g, dump(arr), out);
      } else {
        emit(g, reports_text(reports), out);
      }
    } else if (charz->parsed()) {
      resolve_format(g, "json", {"json"});
      CharacterizationResult res;
      if (!z_curve.empty()) {
        if (!z_dist.dist.empty()) throw UsageError("give either --dist or --curve");
        if (z_model != "gpd") throw UsageError("--curve works with --model gpd only");
        res = gpd_slope_test(curve_from_csv(slurp(z_curve)), z_n);
      } else {
        if (z_dist.dist.empty()) throw UsageError("characterize needs --dist or --curve");
        const DistributionModel d = resolve(z_dist);
        std::vector<double> grid;
        if (z_tmin || z_tmax) {
          if (!(z_tmin && z_tmax)) throw UsageError("give both --t-min and --t-max");
          grid = make_grid(*z_tmin, *z_tmax, z_steps, false);
        } else {
          grid = default_grid(d, z_steps);
        }
        res = z_model == "gpd" ? gpd_ratio_test(d, z_n, grid)
                               : power_ratio_test(d, z_n, grid);
      }
      emit(g, dump(to_json(res)), out);
    } else if (est->parsed()) {
      const std::string f = resolve_format(g, "json", {"json", "text"});
      std::vector<double> values;
      if (!e_samples.empty() == !e_dist.empty()) {
        throw UsageError("give exactly one of --samples and --dist");
      }
      if (!e_samples.empty()) {
        values = read_samples(e_samples);
      } else {
        if (e_draws == 0) throw UsageError("--dist needs --draws");
        values = draw_samples(load_dist(e_dist), e_draws, g.seed);
      }
      const SampleSet s(std::move(values), e_bound);
      double v = 0.0;
      if (e_label == "dcrex") {
        if (!e_t) throw UsageError("dcrex needs --t");
        v = empirical_dcrex(s, *e_t, e_n);
      } else {
        if (e_t) throw UsageError(e_label + " takes no --t");
        v = e_label == "crex" ? empirical_crex(s, e_n) : empirical_cpex(s, e_n);
      }
      if (f == "json") {
        Json j = {{"measure", e_label},
                  {"n", e_n},
                  {"value", round12(v)},
                  {"sample_size", s.size()}};
        if (e_t) j["t"] = round12(*e_t);
        if (e_bound) j["upper_bound"] = round12(*e_bound);
        emit(g, dump(j), out);
      } else {
        emit(g, format_number(v) + "\n", out);
      }
    } else if (repro->parsed()) {
      Curve c;
      if (r_figure == "2.1") {
        const std::vector<double> u = open_grid(0.0, 1.0, r_points);
        c = curve(mixture_fig21(), MeasureKind::dcrex(0.0), u,
                  Abscissa::LogSurvival, r_threads);
      } else {
        const std::vector<double> t = open_grid(1.0, 2.0, r_points);
        c = curve(example32(), MeasureKind::dcpex(0.0), t, Abscissa::Age,
                  r_threads);
      }
      emit(g, curve_output(g, c), out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << to_string(e.code()) << ": " << msg << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << "\n";
    return 1;
  }
  return 0;
}

}  // namespace extropy::cli
