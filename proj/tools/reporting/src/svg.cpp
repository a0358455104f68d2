#include "lvar/reporting/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "lvar/reporting/io.hpp"

namespace lvar::svg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 760.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 540.0;

struct Frame {
  double x_min;
  double x_max;

  double sx(double x) const { return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft); }
  static double sy(double y) { return kBottom - y * (kBottom - kTop); }
};

std::string fmt(double v) { return io::format_double(std::round(v * 100.0) / 100.0); }

// Graph of a right-continuous function; a jump is drawn as a vertical segment.
std::string path_of(const PiecewiseLinear& f, const Frame& frame) {
  std::ostringstream d;
  d << "M" << fmt(frame.sx(frame.x_min)) << "," << fmt(Frame::sy(f(frame.x_min)));
  for (const Breakpoint& b : f.breakpoints()) {
    if (b.x <= frame.x_min || b.x >= frame.x_max) continue;
    d << " L" << fmt(frame.sx(b.x)) << "," << fmt(Frame::sy(b.left));
    if (b.value != b.left) d << " L" << fmt(frame.sx(b.x)) << "," << fmt(Frame::sy(b.value));
  }
  d << " L" << fmt(frame.sx(frame.x_max)) << "," << fmt(Frame::sy(f(frame.x_max)));
  return d.str();
}

Frame frame_for(const Cdf& p, const LossProfile& profile, std::optional<double> marker) {
  std::vector<double> xs;
  for (const Breakpoint& b : p.function().breakpoints()) xs.push_back(b.x);
  for (const Breakpoint& b : profile.function().breakpoints()) xs.push_back(b.x);
  if (marker) xs.push_back(*marker);
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  double a = xs.empty() ? -1.0 : *lo;
  double b = xs.empty() ? 1.0 : *hi;
  const double pad = std::max(0.1 * (b - a), 0.5);
  return {a - pad, b + pad};
}

}  // namespace

std::string render(const Cdf& p, const LossProfile& profile, std::optional<double> violation_point) {
  const Frame frame = frame_for(p, profile, violation_point);
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << " " << kHeight
    << "\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
  s << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  s << "  <g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
    << "    <line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\"" << kBottom << "\"/>\n"
    << "    <line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kLeft << "\" y2=\"" << kTop << "\"/>\n"
    << "  </g>\n";
  s << "  <g class=\"ticks\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = 0.25 * i;
    s << "    <text x=\"" << kLeft - 8 << "\" y=\"" << fmt(Frame::sy(y) + 4) << "\" text-anchor=\"end\">"
      << io::format_double(y) << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double x = frame.x_min + 0.25 * i * (frame.x_max - frame.x_min);
    s << "    <text x=\"" << fmt(frame.sx(x)) << "\" y=\"" << kBottom + 18 << "\" text-anchor=\"middle\">"
      << fmt(x) << "</text>\n";
  }
  s << "  </g>\n";
  s << "  <text class=\"axis-label\" x=\"420\" y=\"585\" text-anchor=\"middle\" font-family=\"sans-serif\">"
       "outcome x</text>\n";
  s << "  <text class=\"axis-label\" x=\"20\" y=\"290\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "transform=\"rotate(-90 20 290)\">probability</text>\n";
  s << "  <path class=\"cdf\" d=\"" << path_of(p.function(), frame)
    << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
  s << "  <path class=\"profile\" d=\"" << path_of(profile.function(), frame)
    << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
  if (violation_point) {
    const double x = *violation_point;
    s << "  <circle class=\"violation-marker\" data-x=\"" << io::format_double(x) << "\" cx=\""
      << fmt(frame.sx(x)) << "\" cy=\"" << fmt(Frame::sy(p(x))) << "\" r=\"5\" fill=\"black\"/>\n";
  }
  s << "  <g class=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n"
    << "    <text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 5 << "\" fill=\"#1f77b4\">F_P</text>\n"
    << "    <text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 22 << "\" fill=\"#d62728\">Lambda</text>\n"
    << "  </g>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace lvar::svg
