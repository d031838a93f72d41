#include "wordrep/svg.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordrep {

namespace {

constexpr double kSize = 480.0;
constexpr double kCx = 240.0;
constexpr double kCy = 240.0;
constexpr double kRing = 200.0;   // chord endpoints sit on this circle
constexpr double kLabel = 218.0;  // label anchors sit just outside it
constexpr double kPi = 3.14159265358979323846;

// Two decimals is enough at this scale and keeps the output stable
// across platforms (no locale-dependent formatting).
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // normalize -0.00
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Point {
  double x, y;
};

// Position i of 2n sits at angle i * 2*pi / (2n) measured clockwise from
// the top of the circle.
Point on_circle(std::size_t i, std::size_t total, double radius) {
  double a = static_cast<double>(i) * 2.0 * kPi / static_cast<double>(total);
  return {kCx + radius * std::sin(a), kCy - radius * std::cos(a)};
}

}  // namespace

std::string emit_svg(const Word& w) {
  if (!is_k_uniform(w, 2))
    throw std::invalid_argument("emit_svg: word is not 2-uniform");
  const std::size_t len = w.length();
  const auto pairs = position_pairs(w);
  const auto& alphabet = w.alphabet();

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
         "viewBox=\"0 0 480 480\">\n";
  out += "<!-- circle diagram: " + std::to_string(len) +
         " positions clockwise from the top; center (240, 240), point radius 200, "
         "label radius 218 -->\n";
  out += "<style>\n"
         ".ring { fill: none; stroke: #cccccc; stroke-width: 1; }\n"
         ".chord { stroke: #1f6f8b; stroke-width: 2; }\n"
         ".pt { fill: #222222; }\n"
         ".lbl { font: 14px sans-serif; fill: #222222; text-anchor: middle; "
         "dominant-baseline: middle; }\n"
         "</style>\n";
  out += "<circle class=\"ring\" cx=\"" + fmt(kCx) + "\" cy=\"" + fmt(kCy) +
         "\" r=\"" + fmt(kRing) + "\"/>\n";

  // Chords, one per letter in alphabet (first occurrence) order.
  for (std::size_t id = 0; id < alphabet.size(); ++id) {
    Point a = on_circle(pairs[id].first, len, kRing);
    Point b = on_circle(pairs[id].second, len, kRing);
    out += "<line class=\"chord\" x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) +
           "\" x2=\"" + fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\"/>\n";
  }

  // Points and labels in position order.
  for (std::size_t i = 0; i < len; ++i) {
    Point p = on_circle(i, len, kRing);
    out += "<circle class=\"pt\" cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) +
           "\" r=\"3\"/>\n";
  }
  for (std::size_t i = 0; i < len; ++i) {
    Point p = on_circle(i, len, kLabel);
    out += "<text class=\"lbl\" x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) + "\">" +
           xml_escape(w.letter_at(i)) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace wordrep
