#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "thetakit/errors.hpp"
#include "thetakit_cli/cli.hpp"

namespace thetakit::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void render_table(const Table& t, std::ostream& os) {
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < width.size(); ++i) {
      const std::string cell = i < cells.size() ? cells[i] : "";
      s += cell;
      if (i + 1 < width.size()) s += std::string(width[i] - cell.size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << '\n';
  };
  line(t.columns);
  std::size_t total = 0;
  for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i + 1 < width.size() ? 2 : 0);
  os << std::string(total, '-') << '\n';
  for (const auto& row : t.rows) line(row);
}

}  // namespace

void render(const Output& output, Format format, std::ostream& os) {
  switch (format) {
    case Format::json:
      os << output.json.dump(2) << '\n';
      return;
    case Format::csv:
      for (std::size_t k = 0; k < output.tables.size(); ++k) {
        if (k > 0) os << '\n';
        const auto& t = output.tables[k];
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
        os << '\n';
        for (const auto& row : t.rows) {
          for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
          os << '\n';
        }
      }
      for (const auto& n : output.notes) os << "# " << n << '\n';
      return;
    case Format::table:
      for (std::size_t k = 0; k < output.tables.size(); ++k) {
        if (k > 0) os << '\n';
        render_table(output.tables[k], os);
      }
      if (!output.tables.empty() && !output.notes.empty()) os << '\n';
      for (const auto& n : output.notes) os << n << '\n';
      return;
  }
}

void emit_plot(const std::vector<PlotSeries>& series, const std::string& path, const std::string& title) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      if (!any) {
        xmin = xmax = x;
        ymin = ymax = y;
        any = true;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!any) throw DomainError("emit_plot: nothing to plot");
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  const double W = 640, H = 400, left = 60, right = 20, top = 40, bottom = 40;
  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (W - left - right); };
  auto py = [&](double y) { return H - bottom - (y - ymin) / (ymax - ymin) * (H - top - bottom); };
  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  std::ostringstream svg;
  svg << std::setprecision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
      << ' ' << H << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
      << title << "</text>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom
      << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << left - 6 << "\" y=\"" << py(ymax) + 4 << "\" text-anchor=\"end\" font-size=\"10\">" << ymax
      << "</text>\n";
  svg << "<text x=\"" << left - 6 << "\" y=\"" << py(ymin) + 4 << "\" text-anchor=\"end\" font-size=\"10\">" << ymin
      << "</text>\n";
  svg << "<text x=\"" << px(xmin) << "\" y=\"" << H - bottom + 14 << "\" text-anchor=\"middle\" font-size=\"10\">"
      << xmin << "</text>\n";
  svg << "<text x=\"" << px(xmax) << "\" y=\"" << H - bottom + 14 << "\" text-anchor=\"middle\" font-size=\"10\">"
      << xmax << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* colour = colours[k % 4];
    const auto& s = series[k];
    if (k == 0) {
      for (const auto& [x, y] : s.points)
        svg << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"none\" stroke=\"" << colour
            << "\"/>\n";
    } else {
      svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" points=\"";
      for (const auto& [x, y] : s.points) svg << px(x) << ',' << py(y) << ' ';
      svg << "\"/>\n";
    }
    svg << "<text x=\"" << W - right - 4 << "\" y=\"" << top + 14 * static_cast<double>(k) << "\" text-anchor=\"end\" "
        << "font-size=\"11\" fill=\"" << colour << "\">" << s.name << "</text>\n";
  }
  svg << "</svg>\n";

  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << svg.str();
  if (!f) throw IoError("write failed for " + path);
}

}  // namespace thetakit::cli
