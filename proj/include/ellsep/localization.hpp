#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellsep/box.hpp"
#include "ellsep/separator.hpp"

namespace ellsep {

// One sum-of-distances measurement: the sound emitted at `emitter`, bounced
// off the target and received at `receiver` travelled a total length within
// [lo, hi] meters.
struct Measurement {
  std::string emitter;
  std::string receiver;
  double lo = 0;
  double hi = 0;
};

struct LocalizationConfig {
  std::map<std::string, Point> sonars;  // name -> position (meters)
  std::vector<Measurement> measurements;
  std::optional<Box> frame;  // may instead come from command-line flags
  std::optional<double> eps;
};

// Parses and validates a config document:
//   {"sonars": {"a": [-2,1], ...},
//    "measurements": [{"emitter":"a","receiver":"b","interval":[4,6]}, ...],
//    "frame": [[-7,7],[-7,7]],   // optional
//    "eps": 0.1}                 // optional
// Throws ConfigError on malformed input, unknown sonar names, interval
// lo > hi, or eps <= 0; IoError when the file cannot be read.
LocalizationConfig parse_localization_config(const std::string& json_text);
LocalizationConfig load_localization_config(const std::string& path);

enum class SeparatorKind { minimal, fwdbwd };

struct LocalizationSeparators {
  // One separator per measurement (the elliptical annulus of consistent
  // positions), in measurement order.
  std::vector<SeparatorPtr> per_measurement;
  // Conjunction of all measurement constraints.
  SeparatorPtr combined;
};

// Each measurement contributes the constraint pair
//   distance_sum <= hi  (filled ellipse with ell = hi)
//   distance_sum >= lo  (complement of the filled ellipse with ell = lo).
// A lo that does not exceed the focal distance is satisfied everywhere and
// contributes nothing; a hi that does not exceed it is an error
// (DegenerateEllipseError).
LocalizationSeparators build_separators(const LocalizationConfig& cfg,
                                        SeparatorKind kind);

}  // namespace ellsep
