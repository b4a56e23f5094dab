#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "abn/io.hpp"

namespace abn {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kMargin = 50;

double to_double(const Rational& q) { return q.convert_to<double>(); }

// Maps (beta, alpha) to pixels; beta runs left to right, alpha bottom to top.
struct Frame {
  double beta_lo, beta_hi, alpha_hi;

  double x(double beta) const { return kMargin + (beta - beta_lo) / (beta_hi - beta_lo) * (kWidth - 2 * kMargin); }
  double y(double alpha) const { return kHeight - kMargin - alpha / alpha_hi * (kHeight - 2 * kMargin); }
  double sx() const { return (kWidth - 2 * kMargin) / (beta_hi - beta_lo); }
  double sy() const { return (kHeight - 2 * kMargin) / alpha_hi; }
};

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

void wall_path(std::ostream& out, const Wall& w, const Frame& f, const char* style) {
  if (w.is_vertical()) {
    if (w.b() == 0) {
      return;
    }
    const double x = f.x(to_double(w.vertical_beta()));
    out << "<line x1=\"" << x << "\" y1=\"" << f.y(0) << "\" x2=\"" << x << "\" y2=\"" << f.y(f.alpha_hi)
        << "\" " << style << "/>\n";
    return;
  }
  const double c = to_double(w.center());
  const double rho = std::sqrt(to_double(w.radius_sq()));
  out << "<path d=\"M " << f.x(c - rho) << ' ' << f.y(0) << " A " << rho * f.sx() << ' ' << rho * f.sy()
      << " 0 0 1 " << f.x(c + rho) << ' ' << f.y(0) << "\" " << style << "/>\n";
}

}  // namespace

std::string walls_to_svg(const std::vector<WallRecord>& walls, const WallPlotOptions& options) {
  const Region& reg = options.region;
  const Frame f{to_double(reg.beta_lo()), to_double(reg.beta_hi()), to_double(reg.alpha_hi())};
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<defs><clipPath id=\"plot\"><rect x=\"" << f.x(f.beta_lo) << "\" y=\"" << f.y(f.alpha_hi)
      << "\" width=\"" << f.x(f.beta_hi) - f.x(f.beta_lo) << "\" height=\"" << f.y(0) - f.y(f.alpha_hi)
      << "\"/></clipPath></defs>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << escape(options.title) << "</text>\n";
  }

  // Axes: beta along the bottom, alpha up the left edge.
  out << "<line x1=\"" << f.x(f.beta_lo) << "\" y1=\"" << f.y(0) << "\" x2=\"" << f.x(f.beta_hi) << "\" y2=\""
      << f.y(0) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << f.x(f.beta_lo) << "\" y1=\"" << f.y(0) << "\" x2=\"" << f.x(f.beta_lo) << "\" y2=\""
      << f.y(f.alpha_hi) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kWidth - kMargin << "\" y=\"" << f.y(0) + 30
      << "\" font-family=\"serif\" font-style=\"italic\">&#946;</text>\n";
  out << "<text x=\"" << kMargin - 30 << "\" y=\"" << kMargin
      << "\" font-family=\"serif\" font-style=\"italic\">&#945;</text>\n";
  out << "<text x=\"" << f.x(f.beta_lo) << "\" y=\"" << f.y(0) + 18 << "\" font-size=\"11\" text-anchor=\"middle\">"
      << reg.beta_lo().str() << "</text>\n";
  out << "<text x=\"" << f.x(f.beta_hi) << "\" y=\"" << f.y(0) + 18 << "\" font-size=\"11\" text-anchor=\"middle\">"
      << reg.beta_hi().str() << "</text>\n";

  out << "<g clip-path=\"url(#plot)\">\n";
  if (options.gieseker_ray && f.beta_lo <= 0 && 0 <= f.beta_hi) {
    out << "<line x1=\"" << f.x(0) << "\" y1=\"" << f.y(0) << "\" x2=\"" << f.x(0) << "\" y2=\"" << f.y(f.alpha_hi)
        << "\" stroke=\"seagreen\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
  }
  for (const auto& rec : walls) {
    if (options.highlight && rec.wall.same_locus(*options.highlight)) {
      continue;
    }
    wall_path(out, rec.wall, f, "fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\"");
  }
  if (options.highlight) {
    wall_path(out, *options.highlight, f, "fill=\"none\" stroke=\"crimson\" stroke-width=\"2.5\"");
  }
  // The strip alpha < alpha_lo is outside the enumeration region.
  out << "<rect x=\"" << f.x(f.beta_lo) << "\" y=\"" << f.y(to_double(reg.alpha_lo())) << "\" width=\""
      << f.x(f.beta_hi) - f.x(f.beta_lo) << "\" height=\"" << f.y(0) - f.y(to_double(reg.alpha_lo()))
      << "\" fill=\"gray\" fill-opacity=\"0.2\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string grid_to_svg(const LabelGrid& grid) {
  static const std::map<std::string, const char*> colors = {
      {"EMPTY", "#d9d9d9"}, {"BN", "#4e79a7"}, {"KLM", "#f28e2b"}, {"NEW", "#e15759"}, {"-", "#ffffff"}};
  constexpr double cell = 56;
  constexpr double left = 60;
  constexpr double top = 60;
  const double width = left + cell * static_cast<double>(grid.ranks.size()) + 20;
  const double height = top + cell * static_cast<double>(grid.degrees.size()) + 20;

  std::ostringstream out;
  out << std::fixed << std::setprecision(1);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << left << "\" y=\"20\" font-size=\"14\">g = " << grid.g << "</text>\n";
  for (std::size_t j = 0; j < grid.ranks.size(); ++j) {
    out << "<text x=\"" << left + cell * (static_cast<double>(j) + 0.5) << "\" y=\"" << top - 8
        << "\" text-anchor=\"middle\" font-size=\"12\">r=" << grid.ranks[j] << "</text>\n";
  }
  for (std::size_t i = 0; i < grid.degrees.size(); ++i) {
    const double y = top + cell * static_cast<double>(i);
    out << "<text x=\"" << left - 8 << "\" y=\"" << y + cell / 2 + 4
        << "\" text-anchor=\"end\" font-size=\"12\">d=" << grid.degrees[i] << "</text>\n";
    for (std::size_t j = 0; j < grid.ranks.size(); ++j) {
      const std::string& label = grid.labels[i][j];
      const auto it = colors.find(label);
      const double x = left + cell * static_cast<double>(j);
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
          << "\" fill=\"" << (it == colors.end() ? "#ffffff" : it->second) << "\" stroke=\"white\"/>\n";
      out << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
          << "\" text-anchor=\"middle\" font-size=\"11\">" << escape(label) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace abn
