#include <array>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellsep/errors.hpp"
#include "ellsep/localization.hpp"
#include "ellsep/paver.hpp"
#include "ellsep/paving_io.hpp"
#include "ellsep/quadratic_form.hpp"
#include "ellsep/separator.hpp"

namespace {

using namespace ellsep;

Box frame_from_flat(const std::vector<double>& v) {
  try {
    return Box(Interval(v[0], v[1]), Interval(v[2], v[3]));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid frame: ") + e.what());
  }
}

std::string with_measurement_suffix(const std::string& path, size_t index) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  const std::string suffix = ".m" + std::to_string(index);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

void print_summary(const std::string& name, const Paving& p) {
  const AreaBracket areas = paving_areas(p);
  std::printf("%s: inside=%zu outside=%zu undetermined=%zu\n", name.c_str(),
              p.inside.size(), p.outside.size(), p.undetermined.size());
  std::printf("%s: area bracket [%.9g, %.9g]\n", name.c_str(), areas.inner,
              areas.inner_plus_undetermined);
  std::printf("%s: bisections=%" PRId64 " separator_calls=%" PRId64 "\n",
              name.c_str(), p.stats.bisections, p.stats.separator_calls);
}

void write_outputs(const Paving& p, const std::string& svg_path,
                   const std::string& json_path) {
  if (!json_path.empty()) {
    export_json(p, json_path);
    std::printf("wrote %s\n", json_path.c_str());
  }
  if (!svg_path.empty()) {
    export_svg(p, svg_path);
    std::printf("wrote %s\n", svg_path.c_str());
  }
}

struct PaveEllipseArgs {
  std::vector<double> q;
  std::vector<double> frame;
  double eps = 0;
  bool eps_set = false;
  std::string config_path, svg_path, json_path, baseline;
};

int do_pave_ellipse(const PaveEllipseArgs& args) {
  std::optional<QuadraticForm> q;
  std::optional<Box> frame;
  std::optional<double> eps;

  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + args.config_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(buf.str());
      if (j.contains("q")) {
        const auto v = j["q"].get<std::vector<double>>();
        if (v.size() != 6) throw ConfigError("config: q must have 6 coefficients");
        q = QuadraticForm{v[0], v[1], v[2], v[3], v[4], v[5]};
      }
      if (j.contains("frame")) {
        const auto f = j["frame"].get<std::array<std::array<double, 2>, 2>>();
        frame = frame_from_flat({f[0][0], f[0][1], f[1][0], f[1][1]});
      }
      if (j.contains("eps")) eps = j["eps"].get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }

  if (!args.q.empty())
    q = QuadraticForm{args.q[0], args.q[1], args.q[2],
                      args.q[3], args.q[4], args.q[5]};
  if (!args.frame.empty()) frame = frame_from_flat(args.frame);
  if (args.eps_set) eps = args.eps;

  if (!q) throw ConfigError("missing coefficients: pass --q or a config file");
  if (!frame) throw ConfigError("missing frame: pass --frame or a config file");
  if (!eps || !(*eps > 0)) throw ConfigError("missing or non-positive eps");

  if (!is_ellipse(*q))
    throw NotAnEllipseError(q->q3 > 0
                                ? "not an ellipse: predicate 4*q3*q5 - q4^2 > 0 failed"
                                : "not an ellipse: predicate q3 > 0 failed");
  const SeparatorPtr sep = args.baseline == "fwdbwd"
                               ? make_fwdbwd_separator(*q)
                               : make_ellipse_separator(*q);

  const Paving p = pave(*sep, *frame, *eps);
  print_summary("paving", p);
  write_outputs(p, args.svg_path, args.json_path);
  return 0;
}

struct LocalizeArgs {
  std::string config_path;
  std::vector<double> frame;
  double eps = 0;
  bool eps_set = false;
  std::string svg_path, json_path, baseline;
};

int do_localize(const LocalizeArgs& args) {
  LocalizationConfig cfg = load_localization_config(args.config_path);
  if (!args.frame.empty()) cfg.frame = frame_from_flat(args.frame);
  if (args.eps_set) cfg.eps = args.eps;
  if (!cfg.frame) throw ConfigError("missing frame: pass --frame or set it in the config");
  if (!cfg.eps || !(*cfg.eps > 0)) throw ConfigError("missing or non-positive eps");

  const SeparatorKind kind = args.baseline == "fwdbwd" ? SeparatorKind::fwdbwd
                                                       : SeparatorKind::minimal;
  const LocalizationSeparators seps = build_separators(cfg, kind);

  for (size_t i = 0; i < seps.per_measurement.size(); ++i) {
    const Measurement& m = cfg.measurements[i];
    const Paving p = pave(*seps.per_measurement[i], *cfg.frame, *cfg.eps);
    const std::string name =
        "measurement " + std::to_string(i + 1) + " (" + m.emitter + "-" + m.receiver + ")";
    print_summary(name, p);
    write_outputs(p,
                  args.svg_path.empty() ? ""
                                        : with_measurement_suffix(args.svg_path, i + 1),
                  args.json_path.empty()
                      ? ""
                      : with_measurement_suffix(args.json_path, i + 1));
  }

  const Paving combined = pave(*seps.combined, *cfg.frame, *cfg.eps);
  print_summary("combined", combined);
  write_outputs(combined, args.svg_path, args.json_path);
  return 0;
}

template <typename F>
int run_guarded(F&& f) {
  try {
    return f();
  } catch (const NotAnEllipseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const EmptyEllipseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const DegenerateEllipseError& e) {
    std::fprintf(stderr, "error: degenerate measurement: %s\n", e.what());
    return 2;
  } catch (const InfeasibleOrdinateError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guaranteed paving of filled ellipses and sum-of-distance sonar localization"};
  app.require_subcommand(1);

  PaveEllipseArgs pe;
  auto* pave_cmd = app.add_subcommand(
      "pave-ellipse", "Pave the sublevel set of a quadratic form");
  pave_cmd->add_option("--q", pe.q, "coefficients q0,q1,q2,q3,q4,q5")
      ->delimiter(',')
      ->expected(6);
  pave_cmd->add_option("--frame", pe.frame, "frame box x1lo,x1hi,x2lo,x2hi")
      ->delimiter(',')
      ->expected(4);
  auto* pe_eps = pave_cmd->add_option("--eps", pe.eps, "paving width threshold");
  pave_cmd->add_option("--config", pe.config_path, "JSON config file");
  pave_cmd->add_option("--svg", pe.svg_path, "SVG output path");
  pave_cmd->add_option("--json", pe.json_path, "JSON output path");
  pave_cmd->add_option("--baseline", pe.baseline, "use a baseline separator")
      ->check(CLI::IsMember({"fwdbwd"}));

  LocalizeArgs loc;
  auto* loc_cmd = app.add_subcommand(
      "localize", "Characterize positions consistent with sonar measurements");
  loc_cmd->add_option("--config", loc.config_path, "JSON config file")->required();
  loc_cmd->add_option("--frame", loc.frame, "frame box x1lo,x1hi,x2lo,x2hi")
      ->delimiter(',')
      ->expected(4);
  auto* loc_eps = loc_cmd->add_option("--eps", loc.eps, "paving width threshold");
  loc_cmd->add_option("--svg", loc.svg_path, "SVG output path");
  loc_cmd->add_option("--json", loc.json_path, "JSON output path");
  loc_cmd->add_option("--baseline", loc.baseline, "use a baseline separator")
      ->check(CLI::IsMember({"fwdbwd"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  pe.eps_set = pe_eps->count() > 0;
  loc.eps_set = loc_eps->count() > 0;

  if (pave_cmd->parsed()) return run_guarded([&] { return do_pave_ellipse(pe); });
  return run_guarded([&] { return do_localize(loc); });
}
