#include "geostat/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace geostat::io {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string horizon_cross_section_svg(const RadialSurface& surface, const HoleSet& holes) {
  const SphereGrid& g = *surface.grid;
  // Collect the phi = 0 and phi = pi meridians into one closed curve in the
  // (x, z) half-planes.
  std::vector<std::pair<double, double>> pts;
  const int k_pi = g.nphi() / 2;
  for (int j = 0; j < g.ntheta(); ++j) {
    const double r = surface.r[g.idx(j, 0)];
    pts.push_back({surface.center.x + r * g.sin_theta(j), surface.center.z + r * g.cos_theta(j)});
  }
  for (int j = g.ntheta() - 1; j >= 0; --j) {
    const double r = surface.r[g.idx(j, k_pi)];
    pts.push_back({surface.center.x - r * g.sin_theta(j), surface.center.z + r * g.cos_theta(j)});
  }

  double xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
  for (auto& p : pts) {
    xmin = std::min(xmin, p.first);
    xmax = std::max(xmax, p.first);
    ymin = std::min(ymin, p.second);
    ymax = std::max(ymax, p.second);
  }
  for (const Hole& h : holes.holes) {
    xmin = std::min(xmin, h.p.x);
    xmax = std::max(xmax, h.p.x);
    ymin = std::min(ymin, h.p.z);
    ymax = std::max(ymax, h.p.z);
  }
  const double span = std::max(xmax - xmin, ymax - ymin) * 1.2 + 1e-300;
  const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
  const double size = 480.0;
  auto X = [&](double x) { return (x - cx) / span * size + size / 2; };
  auto Y = [&](double z) { return size / 2 - (z - cy) / span * size; };

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << size << "' height='" << size
      << "' viewBox='0 0 " << size << " " << size << "'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n<polygon points='";
  for (auto& p : pts) svg << fmt(X(p.first)) << "," << fmt(Y(p.second)) << " ";
  svg << "' fill='none' stroke='black' stroke-width='1'/>\n";
  for (const Hole& h : holes.holes)
    svg << "<circle cx='" << fmt(X(h.p.x)) << "' cy='" << fmt(Y(h.p.z))
        << "' r='2.5' fill='crimson'/>\n";
  svg << "<text x='6' y='16' font-size='12' font-family='monospace'>phi=0 cross-section"
      << "</text>\n</svg>\n";
  return svg.str();
}

std::string loglog_svg(const std::vector<double>& x, const std::vector<double>& y,
                       const std::string& x_label, const std::string& y_label) {
  std::ostringstream svg;
  const double W = 560, H = 420, L = 70, B = 50;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  if (x.size() < 2) {
    svg << "</svg>\n";
    return svg.str();
  }
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    lx[i] = std::log10(x[i]);
    ly[i] = std::log10(y[i]);
  }
  const auto [lxmin, lxmax] = std::minmax_element(lx.begin(), lx.end());
  const auto [lymin, lymax] = std::minmax_element(ly.begin(), ly.end());
  const double dx = std::max(*lxmax - *lxmin, 1e-12), dy = std::max(*lymax - *lymin, 1e-12);
  auto X = [&](double v) { return L + (v - *lxmin) / dx * (W - L - 20); };
  auto Y = [&](double v) { return (H - B) - (v - *lymin) / dy * (H - B - 20); };

  svg << "<line x1='" << L << "' y1='" << H - B << "' x2='" << W - 20 << "' y2='" << H - B
      << "' stroke='black'/>\n";
  svg << "<line x1='" << L << "' y1='" << H - B << "' x2='" << L << "' y2='20' stroke='black'/>\n";
  svg << "<polyline fill='none' stroke='steelblue' stroke-width='1.5' points='";
  for (std::size_t i = 0; i < lx.size(); ++i) svg << fmt(X(lx[i])) << "," << fmt(Y(ly[i])) << " ";
  svg << "'/>\n";
  for (std::size_t i = 0; i < lx.size(); ++i)
    svg << "<circle cx='" << fmt(X(lx[i])) << "' cy='" << fmt(Y(ly[i]))
        << "' r='3' fill='steelblue'/>\n";
  svg << "<text x='" << (W / 2) << "' y='" << (H - 12)
      << "' font-size='12' font-family='monospace' text-anchor='middle'>log10 " << x_label
      << "</text>\n";
  svg << "<text x='14' y='" << (H / 2)
      << "' font-size='12' font-family='monospace' transform='rotate(-90 14 " << (H / 2)
      << ")' text-anchor='middle'>log10 " << y_label << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace geostat::io
