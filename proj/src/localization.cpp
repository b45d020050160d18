#include "ellsep/localization.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ellsep/errors.hpp"
#include "ellsep/quadratic_form.hpp"

namespace ellsep {

namespace {

Point point_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError("config: " + what + " must be a [x1,x2] number pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Box frame_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ConfigError("config: frame must be [[x1lo,x1hi],[x2lo,x2hi]]");
  const Point r1 = point_from_json(j[0], "frame component");
  const Point r2 = point_from_json(j[1], "frame component");
  try {
    return Box(Interval(r1[0], r1[1]), Interval(r2[0], r2[1]));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: invalid frame: ") + e.what());
  }
}

}  // namespace

LocalizationConfig parse_localization_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  LocalizationConfig cfg;
  if (!j.contains("sonars") || !j["sonars"].is_object())
    throw ConfigError("config: missing 'sonars' object");
  for (const auto& [name, pos] : j["sonars"].items())
    cfg.sonars[name] = point_from_json(pos, "sonar '" + name + "'");

  if (!j.contains("measurements") || !j["measurements"].is_array() ||
      j["measurements"].empty())
    throw ConfigError("config: missing non-empty 'measurements' array");
  for (const auto& m : j["measurements"]) {
    Measurement meas;
    try {
      meas.emitter = m.at("emitter").get<std::string>();
      meas.receiver = m.at("receiver").get<std::string>();
      const auto& iv = m.at("interval");
      if (!iv.is_array() || iv.size() != 2)
        throw ConfigError("config: measurement interval must be [lo,hi]");
      meas.lo = iv[0].get<double>();
      meas.hi = iv[1].get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("config: bad measurement: ") + e.what());
    }
    if (!cfg.sonars.count(meas.emitter))
      throw ConfigError("config: unknown sonar name '" + meas.emitter + "'");
    if (!cfg.sonars.count(meas.receiver))
      throw ConfigError("config: unknown sonar name '" + meas.receiver + "'");
    if (!(meas.lo <= meas.hi))
      throw ConfigError("config: measurement interval lo > hi");
    cfg.measurements.push_back(std::move(meas));
  }

  if (j.contains("frame")) cfg.frame = frame_from_json(j["frame"]);
  if (j.contains("eps")) {
    if (!j["eps"].is_number() || !(j["eps"].get<double>() > 0))
      throw ConfigError("config: eps must be > 0");
    cfg.eps = j["eps"].get<double>();
  }
  return cfg;
}

LocalizationConfig load_localization_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_localization_config(buf.str());
}

LocalizationSeparators build_separators(const LocalizationConfig& cfg,
                                        SeparatorKind kind) {
  const auto make_sep = [kind](const QuadraticForm& q) {
    return kind == SeparatorKind::minimal ? make_ellipse_separator(q)
                                          : make_fwdbwd_separator(q);
  };

  LocalizationSeparators out;
  std::vector<SeparatorPtr> all_parts;
  for (size_t i = 0; i < cfg.measurements.size(); ++i) {
    const Measurement& m = cfg.measurements[i];
    const Point a = cfg.sonars.at(m.emitter);
    const Point b = cfg.sonars.at(m.receiver);
    const double focal = std::hypot(a[0] - b[0], a[1] - b[1]);
    if (!(m.hi > focal)) {
      std::ostringstream os;
      os << "measurement " << i + 1 << " (" << m.emitter << "-" << m.receiver
         << "): upper bound " << m.hi
         << " does not exceed the focal distance " << focal;
      throw DegenerateEllipseError(os.str());
    }

    std::vector<SeparatorPtr> parts;
    parts.push_back(make_sep(from_foci({a, b, m.hi})));
    // distance_sum >= lo cuts nothing unless lo exceeds the focal distance.
    if (m.lo > focal)
      parts.push_back(make_complement(make_sep(from_foci({a, b, m.lo}))));

    out.per_measurement.push_back(
        parts.size() == 1 ? parts[0] : make_intersection(parts));
    for (auto& p : parts) all_parts.push_back(std::move(p));
  }
  out.combined = all_parts.size() == 1 ? all_parts[0]
                                       : make_intersection(std::move(all_parts));
  return out;
}

}  // namespace ellsep
