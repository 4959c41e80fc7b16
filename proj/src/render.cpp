#include "condagg/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace condagg::render {

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string format_coord(double v) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << v;
  return out.str();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string ascii_step(const StepFunction& f, int width) {
  width = std::max(width, 24);
  const auto& bps = f.breakpoints();
  const double last = to_double(bps.back());
  const double span = last > 0 ? last * 1.15 : 1.0;

  auto column = [&](double x) {
    int c = static_cast<int>(std::llround(x / span * (width - 1)));
    return std::clamp(c, 0, width - 1);
  };

  // one row per distinct value, tallest first
  std::vector<Rational> levels = f.values();
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::ostringstream out;
  for (const Rational& level : levels) {
    std::string row(width, ' ');
    for (std::size_t k = 0; k < f.values().size(); ++k) {
      if (f.values()[k] != level) continue;
      int from = column(to_double(bps[k]));
      int to = k + 1 < bps.size() ? column(to_double(bps[k + 1])) : width;
      for (int c = from; c < std::max(to, from + 1); ++c) row[static_cast<std::size_t>(c)] = '#';
    }
    std::string label = to_decimal_string(level, 4);
    label.resize(8, ' ');
    out << label << "|" << row << "\n";
  }

  out << std::string(8, ' ') << "+" << std::string(width, '-') << "\n";
  std::string ticks(width, ' ');
  std::string tick_labels(static_cast<std::size_t>(width) + 9, ' ');
  for (const Rational& b : bps) {
    int c = column(to_double(b));
    ticks[static_cast<std::size_t>(c)] = '^';
    std::string label = to_decimal_string(b, 4);
    std::size_t at = static_cast<std::size_t>(c) + 9;
    if (at + label.size() <= tick_labels.size()) {
      tick_labels.replace(at, label.size(), label);
    }
  }
  out << std::string(9, ' ') << ticks << "\n" << tick_labels << "\n";
  return out.str();
}

std::string svg_step(const StepFunction& f, const std::string& x_label, const std::string& y_label) {
  const int width = 640, height = 400;
  const double left = 70, right = 600, top = 40, bottom = 350;

  const auto& bps = f.breakpoints();
  const double x_max = to_double(bps.back()) > 0 ? to_double(bps.back()) * 1.15 : 1.0;
  Rational top_value = *std::max_element(f.values().begin(), f.values().end());
  const double y_max = top_value > 0 ? to_double(top_value) * 1.15 : 1.0;

  auto sx = [&](double x) { return left + x / x_max * (right - left); };
  auto sy = [&](double y) { return bottom - y / y_max * (bottom - top); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  // axes
  out << "  <line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\"" << bottom
      << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << left << "\" y2=\"" << top
      << "\" stroke=\"black\"/>\n";
  out << "  <text x=\"" << (right + 8) << "\" y=\"" << (bottom + 4) << "\" font-size=\"13\">"
      << xml_escape(x_label) << "</text>\n";
  out << "  <text x=\"" << (left - 10) << "\" y=\"" << (top - 12) << "\" font-size=\"13\">"
      << xml_escape(y_label) << "</text>\n";

  // x ticks at breakpoints
  for (const Rational& b : bps) {
    double x = sx(to_double(b));
    out << "  <line x1=\"" << format_coord(x) << "\" y1=\"" << bottom << "\" x2=\"" << format_coord(x)
        << "\" y2=\"" << (bottom + 5) << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << format_coord(x) << "\" y=\"" << (bottom + 20)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << xml_escape(to_decimal_string(b, 4))
        << "</text>\n";
  }
  // y ticks at distinct values
  std::vector<Rational> levels = f.values();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (const Rational& level : levels) {
    double y = sy(to_double(level));
    out << "  <line x1=\"" << (left - 5) << "\" y1=\"" << format_coord(y) << "\" x2=\"" << left
        << "\" y2=\"" << format_coord(y) << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << (left - 9) << "\" y=\"" << format_coord(y + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << xml_escape(to_decimal_string(level, 4))
        << "</text>\n";
  }

  // pieces: horizontal segment, closed dot left, open dot right
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    double y = sy(to_double(f.values()[k]));
    double x0 = sx(to_double(bps[k]));
    double x1 = k + 1 < bps.size() ? sx(to_double(bps[k + 1])) : right;
    out << "  <line x1=\"" << format_coord(x0) << "\" y1=\"" << format_coord(y) << "\" x2=\""
        << format_coord(x1) << "\" y2=\"" << format_coord(y)
        << "\" stroke=\"steelblue\" stroke-width=\"2.5\"/>\n";
    out << "  <circle cx=\"" << format_coord(x0) << "\" cy=\"" << format_coord(y)
        << "\" r=\"3.5\" fill=\"steelblue\"/>\n";
    if (k + 1 < bps.size()) {
      out << "  <circle cx=\"" << format_coord(x1) << "\" cy=\"" << format_coord(y)
          << "\" r=\"3.5\" fill=\"white\" stroke=\"steelblue\"/>\n";
      // dashed drop to the next piece
      double y_next = sy(to_double(f.values()[k + 1]));
      out << "  <line x1=\"" << format_coord(x1) << "\" y1=\"" << format_coord(y) << "\" x2=\""
          << format_coord(x1) << "\" y2=\"" << format_coord(y_next)
          << "\" stroke=\"steelblue\" stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n";
    } else {
      out << "  <text x=\"" << format_coord(x1 + 4) << "\" y=\"" << format_coord(y + 4)
          << "\" font-size=\"11\" fill=\"steelblue\">...</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string ascii_permutation(const PermutationTables& pt) {
  const std::size_t kappa = pt.kappa();
  std::ostringstream out;
  out << "measure idx  :";
  for (std::size_t j = 0; j < kappa; ++j) out << " " << j;
  out << "\n";
  out << "aggregation  :";
  for (std::size_t i = 0; i < kappa; ++i) out << " " << i;
  out << "\n";
  for (std::size_t i = 0; i < kappa; ++i) {
    out << "(" << i << ") = " << pt.pi[i] << "   i(" << i << ") = " << pt.i_map[i] << "   <" << i
        << "> = " << pt.pi_inv[i] << "   j(" << i << ") = " << pt.j_map[i] << "\n";
  }
  return out.str();
}

std::string svg_permutation(const PermutationTables& pt) {
  const std::size_t kappa = pt.kappa();
  const double left = 50, step = kappa > 1 ? 520.0 / static_cast<double>(kappa - 1) : 0;
  const double y_top = 80, y_bottom = 280;
  const int width = 640, height = 360;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "  <text x=\"" << left << "\" y=\"" << (y_top - 40)
      << "\" font-size=\"13\">measure indices</text>\n";
  out << "  <text x=\"" << left << "\" y=\"" << (y_bottom + 45)
      << "\" font-size=\"13\">aggregation indices</text>\n";

  for (std::size_t i = 0; i < kappa; ++i) {
    const double x = left + step * static_cast<double>(i);
    out << "  <circle cx=\"" << format_coord(x) << "\" cy=\"" << y_top << "\" r=\"4\" fill=\"black\"/>\n";
    out << "  <circle cx=\"" << format_coord(x) << "\" cy=\"" << y_bottom
        << "\" r=\"4\" fill=\"black\"/>\n";
    out << "  <text x=\"" << format_coord(x) << "\" y=\"" << (y_top - 12)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << i << "</text>\n";
    out << "  <text x=\"" << format_coord(x) << "\" y=\"" << (y_bottom + 22)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << i << "</text>\n";
  }
  for (std::size_t i = 0; i < kappa; ++i) {
    const double x0 = left + step * static_cast<double>(i);
    const double x1 = left + step * static_cast<double>(pt.pi[i]);
    out << "  <line x1=\"" << format_coord(x0) << "\" y1=\"" << y_bottom << "\" x2=\""
        << format_coord(x1) << "\" y2=\"" << y_top << "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace condagg::render
