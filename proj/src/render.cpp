#include "braidcat/render.hpp"

#include <cstdio>
#include <sstream>

namespace braidcat {

namespace {

// Two-decimal fixed-point formatting keeps the output byte-stable.
std::string fp(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // normalize -0
  return buf;
}

std::string svg_open(double w, double h) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fp(w) << "\" height=\""
     << fp(h) << "\" viewBox=\"0 0 " << fp(w) << " " << fp(h) << "\">\n";
  return os.str();
}

void emit_dot(std::ostringstream& os, double x, double y, const std::string& label) {
  os << "<circle cx=\"" << fp(x) << "\" cy=\"" << fp(y) << "\" r=\"1.50\" fill=\"black\"/>\n";
  if (!label.empty()) {
    os << "<text x=\"" << fp(x + 2.5) << "\" y=\"" << fp(y - 2.0)
       << "\" font-size=\"6\" font-family=\"monospace\">" << label << "</text>\n";
  }
}

}  // namespace

std::string render_config_svg(const Configuration& X) {
  std::ostringstream os;
  os << svg_open(100, 100);
  os << "<rect x=\"0.50\" y=\"0.50\" width=\"99.00\" height=\"99.00\" fill=\"none\" "
        "stroke=\"black\"/>\n";
  for (const LPoint& p : X.points()) {
    emit_dot(os, 100.0 * p.x.to_double(), 100.0 * (1.0 - p.y.to_double()),
             print_word(p.label));
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_braid_svg(const BraidWord& w) {
  const int n = w.strands();
  const int steps = static_cast<int>(w.gens().size());
  const double col = 30.0;
  const double width = 40.0 + col * steps;
  const double height = 20.0 * (n + 1);

  std::ostringstream os;
  os << svg_open(width, height);

  auto ypos = [&](int strand_pos) { return 20.0 * strand_pos; };

  double x = 20.0;
  for (int s = 0; s <= steps; ++s) {
    double x2 = (s == steps) ? x + 20.0 : x + col;
    if (s == steps) {
      for (int i = 1; i <= n; ++i) {
        os << "<line x1=\"" << fp(x) << "\" y1=\"" << fp(ypos(i)) << "\" x2=\"" << fp(x2)
           << "\" y2=\"" << fp(ypos(i)) << "\" stroke=\"black\"/>\n";
      }
      break;
    }
    const BraidGen& g = w.gens()[s];
    for (int i = 1; i <= n; ++i) {
      if (i == g.index || i == g.index + 1) continue;
      os << "<line x1=\"" << fp(x) << "\" y1=\"" << fp(ypos(i)) << "\" x2=\"" << fp(x2)
         << "\" y2=\"" << fp(ypos(i)) << "\" stroke=\"black\"/>\n";
    }
    double yu = ypos(g.index), yl = ypos(g.index + 1);
    double xm = x + col / 2.0;
    // Positive crossing: the lower strand passes in front; the strand behind
    // is drawn in two pieces around the midpoint.
    bool lower_in_front = g.sign > 0;
    auto full = [&](double ya, double yb) {
      os << "<path d=\"M " << fp(x) << " " << fp(ya) << " C " << fp(xm) << " " << fp(ya)
         << " " << fp(xm) << " " << fp(yb) << " " << fp(x2) << " " << fp(yb)
         << "\" fill=\"none\" stroke=\"black\"/>\n";
    };
    auto broken = [&](double ya, double yb) {
      double ym = (ya + yb) / 2.0;
      double dx = 4.0, dy = (yb > ya ? 2.5 : -2.5);
      os << "<path d=\"M " << fp(x) << " " << fp(ya) << " C " << fp(x + col / 4.0) << " "
         << fp(ya) << " " << fp(xm - dx) << " " << fp(ym - dy) << " " << fp(xm - dx / 2.0)
         << " " << fp(ym - dy / 2.0) << "\" fill=\"none\" stroke=\"black\"/>\n";
      os << "<path d=\"M " << fp(xm + dx / 2.0) << " " << fp(ym + dy / 2.0) << " C "
         << fp(xm + dx) << " " << fp(ym + dy) << " " << fp(x2 - col / 4.0) << " " << fp(yb)
         << " " << fp(x2) << " " << fp(yb) << "\" fill=\"none\" stroke=\"black\"/>\n";
    };
    if (lower_in_front) {
      broken(yu, yl);  // upper strand dips behind
      full(yl, yu);
    } else {
      broken(yl, yu);
      full(yu, yl);
    }
    x = x2;
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_linearisation_svg(const Configuration& X) {
  std::ostringstream os;
  os << svg_open(220, 100);
  os << "<rect x=\"0.50\" y=\"0.50\" width=\"99.00\" height=\"99.00\" fill=\"none\" "
        "stroke=\"black\"/>\n";
  os << "<line x1=\"200.00\" y1=\"0.50\" x2=\"200.00\" y2=\"99.50\" stroke=\"black\"/>\n";

  const auto& pts = X.points();
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    double px = 100.0 * pts[i].x.to_double();
    double py = 100.0 * (1.0 - pts[i].y.to_double());
    double ly = 100.0 * (i + 1) / (n + 1);
    emit_dot(os, px, py, print_word(pts[i].label));
    os << "<path d=\"M " << fp(px) << " " << fp(py) << " C " << fp(140.0) << " " << fp(py)
       << " " << fp(160.0) << " " << fp(ly) << " " << fp(200.0) << " " << fp(ly)
       << "\" fill=\"none\" stroke=\"gray\"/>\n";
    emit_dot(os, 200.0, ly, print_word(pts[i].label));
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace braidcat
