#include "ellsep/paving_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ellsep/errors.hpp"

namespace ellsep {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void append_box(std::string& out, const Box& b) {
  out += '[';
  for (int i = 0; i < b.dim(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    out += num(b[i].lo());
    out += ',';
    out += num(b[i].hi());
    out += ']';
  }
  out += ']';
}

void append_class(std::string& out, const std::vector<Box>& boxes,
                  const char* cls, bool& first) {
  for (const Box& b : boxes) {
    if (!first) out += ',';
    first = false;
    out += "{\"x\":";
    append_box(out, b);
    out += ",\"class\":\"";
    out += cls;
    out += "\"}";
  }
}

Interval interval_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw IoError("paving json: interval must be a [lo,hi] pair");
  return Interval(j[0].get<double>(), j[1].get<double>());
}

Box box_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw IoError("paving json: box must be a non-empty array of intervals");
  std::vector<Interval> comps;
  comps.reserve(j.size());
  for (const auto& c : j) comps.push_back(interval_from_json(c));
  return Box(std::move(comps));
}

}  // namespace

std::string paving_to_json(const Paving& p) {
  std::string out = "{\"frame\":";
  append_box(out, p.frame);
  out += ",\"eps\":";
  out += num(p.eps);
  out += ",\"boxes\":[";
  bool first = true;
  append_class(out, p.inside, "inside", first);
  append_class(out, p.outside, "outside", first);
  append_class(out, p.undetermined, "undetermined", first);
  out += "],\"stats\":{\"bisections\":";
  out += std::to_string(p.stats.bisections);
  out += ",\"separator_calls\":";
  out += std::to_string(p.stats.separator_calls);
  out += "}}";
  return out;
}

Paving paving_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("paving json: ") + e.what());
  }
  try {
    Paving p{box_from_json(j.at("frame")), j.at("eps").get<double>(), {}, {}, {}, {}};
    for (const auto& entry : j.at("boxes")) {
      const std::string cls = entry.at("class").get<std::string>();
      Box b = box_from_json(entry.at("x"));
      if (cls == "inside")
        p.inside.push_back(std::move(b));
      else if (cls == "outside")
        p.outside.push_back(std::move(b));
      else if (cls == "undetermined")
        p.undetermined.push_back(std::move(b));
      else
        throw IoError("paving json: unknown box class '" + cls + "'");
    }
    const auto& stats = j.at("stats");
    p.stats.bisections = stats.at("bisections").get<std::int64_t>();
    p.stats.separator_calls = stats.at("separator_calls").get<std::int64_t>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("paving json: ") + e.what());
  }
}

void export_json(const Paving& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << paving_to_json(p);
  if (!out.flush()) throw IoError("write failed: " + path);
}

Paving import_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return paving_from_json(buf.str());
}

namespace {

constexpr int kViewSize = 800;

const char* fill_color(const char* cls) {
  if (cls[0] == 'i') return "#d94f4f";
  if (cls[0] == 'o') return "#4f6fd9";
  return "#f2d94f";
}

void append_rects(std::string& out, const std::vector<Box>& boxes,
                  const char* cls, const Box& frame) {
  const double w1 = std::max(frame[0].width(), 1e-300);
  const double w2 = std::max(frame[1].width(), 1e-300);
  const double sx = kViewSize / w1;
  const double sy = kViewSize / w2;
  char buf[256];
  for (const Box& b : boxes) {
    const double x = (b[0].lo() - frame[0].lo()) * sx;
    const double y = (frame[1].hi() - b[1].hi()) * sy;  // x2 axis points up
    const double w = b[0].width() * sx;
    const double h = b[1].width() * sy;
    std::snprintf(buf, sizeof(buf),
                  "<rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\" "
                  "fill=\"%s\" stroke=\"#000000\" stroke-width=\"1\"/>\n",
                  x, y, w, h, fill_color(cls));
    out += buf;
  }
}

}  // namespace

std::string paving_to_svg(const Paving& p) {
  if (p.frame.dim() != 2) throw std::invalid_argument("svg export: paving must be 2-dimensional");
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  append_rects(out, p.inside, "inside", p.frame);
  append_rects(out, p.outside, "outside", p.frame);
  append_rects(out, p.undetermined, "undetermined", p.frame);
  out += "</svg>\n";
  return out;
}

void export_svg(const Paving& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << paving_to_svg(p);
  if (!out.flush()) throw IoError("write failed: " + path);
}

bool operator==(const Paving& a, const Paving& b) {
  return a.frame == b.frame && a.eps == b.eps && a.inside == b.inside &&
         a.outside == b.outside && a.undetermined == b.undetermined &&
         a.stats == b.stats;
}

}  // namespace ellsep
