#pragma once

#include <string>

#include "ellsep/paver.hpp"

namespace ellsep {

// JSON schema:
//   {"frame": [[lo,hi],[lo,hi]], "eps": e,
//    "boxes": [{"x": [[lo,hi],[lo,hi]], "class": "inside"|"outside"|"undetermined"}, ...],
//    "stats": {"bisections": n, "separator_calls": m}}
// Numbers carry 17 significant digits so values round-trip exactly and
// identical pavings serialize to identical bytes. Boxes appear in the
// paver's canonical order: inside, then outside, then undetermined.
std::string paving_to_json(const Paving& p);
Paving paving_from_json(const std::string& text);

void export_json(const Paving& p, const std::string& path);
Paving import_json(const std::string& path);

// Standalone SVG 1.1, one rectangle per box (inside #d94f4f, outside
// #4f6fd9, undetermined #f2d94f), world mapped linearly to the viewport
// with the x2 axis pointing up.
std::string paving_to_svg(const Paving& p);
void export_svg(const Paving& p, const std::string& path);

bool operator==(const Paving& a, const Paving& b);

}  // namespace ellsep
