#include "fg/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace fg::lab {

namespace {

using SeriesKey = std::pair<std::size_t, std::string>;  // (N, method)

std::map<SeriesKey, std::vector<const cover::ProfileRow*>> series_of(const cover::CoverageProfile& profile) {
  std::map<SeriesKey, std::vector<const cover::ProfileRow*>> out;
  for (const auto& r : profile.rows) {
    out[{r.N, cover::to_string(r.method)}].push_back(&r);
  }
  for (auto& [key, rows] : out) {
    std::stable_sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->n < b->n; });
  }
  return out;
}

std::string num(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

}  // namespace

std::string summary_table(const cover::CoverageProfile& profile) {
  std::ostringstream os;
  os << "series (N, method)      points  min_frac  max_frac  last_frac\n";
  for (const auto& [key, rows] : series_of(profile)) {
    double lo = 1.0;
    double hi = 0.0;
    for (const auto* r : rows) {
      lo = std::min(lo, r->fraction());
      hi = std::max(hi, r->fraction());
    }
    char line[160];
    std::snprintf(line, sizeof line, "N=%-3zu %-16s %6zu  %8s  %8s  %9s\n", key.first, key.second.c_str(),
                  rows.size(), num(lo).c_str(), num(hi).c_str(), num(rows.back()->fraction()).c_str());
    os << line;
  }
  os << '\n' << "     n  length    N  method         uncovered  fraction\n";
  for (const auto& r : profile.rows) {
    std::string method = cover::to_string(r.method);
    if (r.optimality == cover::Optimality::BudgetExhausted) {
      method += "-budget";
    }
    char line[160];
    std::snprintf(line, sizeof line, "%6lld  %6zu  %3zu  %-13s  %9zu  %8s\n", r.n, r.length, r.N, method.c_str(),
                  r.uncovered, num(r.fraction(), 6).c_str());
    os << line;
  }
  return os.str();
}

std::string render_svg(const cover::CoverageProfile& profile, const std::string& title) {
  if (profile.rows.empty()) {
    throw std::invalid_argument("cannot plot an empty profile");
  }
  constexpr double kWidth = 640;
  constexpr double kHeight = 400;
  constexpr double kLeft = 60;
  constexpr double kRight = 150;
  constexpr double kTop = 40;
  constexpr double kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  long long n_lo = profile.rows.front().n;
  long long n_hi = n_lo;
  for (const auto& r : profile.rows) {
    n_lo = std::min(n_lo, r.n);
    n_hi = std::max(n_hi, r.n);
  }
  const double span = n_hi > n_lo ? static_cast<double>(n_hi - n_lo) : 1.0;
  auto x_of = [&](long long n) {
    return n_hi > n_lo ? kLeft + plot_w * static_cast<double>(n - n_lo) / span : kLeft + plot_w / 2;
  };
  auto y_of = [&](double f) { return kTop + plot_h * (1.0 - f); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"14\">" << xml_escape(title) << "</text>\n";

  // Axes, y ticks at 0, 0.25, ..., 1 and x ticks at each distinct n (thinned).
  os << "<g stroke=\"black\" fill=\"none\">\n"
     << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
     << kTop + plot_h << "\"/>\n"
     << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
     << "\"/>\n</g>\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = i / 4.0;
    os << "<line x1=\"" << kLeft - 4 << "\" y1=\"" << num(y_of(f), 2) << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
       << num(y_of(f), 2) << "\" stroke=\"#dddddd\"/>\n"
       << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(y_of(f) + 4, 2) << "\" text-anchor=\"end\">" << num(f, 2)
       << "</text>\n";
  }
  std::vector<long long> ticks;
  for (const auto& r : profile.rows) {
    ticks.push_back(r.n);
  }
  std::sort(ticks.begin(), ticks.end());
  ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
  const std::size_t stride = std::max<std::size_t>(1, ticks.size() / 10);
  for (std::size_t i = 0; i < ticks.size(); i += stride) {
    os << "<text x=\"" << num(x_of(ticks[i]), 2) << "\" y=\"" << kTop + plot_h + 18 << "\" text-anchor=\"middle\">"
       << ticks[i] << "</text>\n";
  }
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">n</text>\n"
     << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << kTop + plot_h / 2 << ")\">uncovered fraction</text>\n";

  std::size_t index = 0;
  for (const auto& [key, rows] : series_of(profile)) {
    const char* colour = kPalette[index % std::size(kPalette)];
    std::string points;
    for (const auto* r : rows) {
      points += num(x_of(r->n), 2) + "," + num(y_of(r->fraction()), 2) + " ";
    }
    if (rows.size() > 1) {
      os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"" << points
         << "\"/>\n";
    }
    for (const auto* r : rows) {
      os << "<circle cx=\"" << num(x_of(r->n), 2) << "\" cy=\"" << num(y_of(r->fraction()), 2)
         << "\" r=\"3\" fill=\"" << colour << "\"><title>n=" << r->n << " |w|=" << r->length
         << " uncovered=" << r->uncovered << "</title></circle>\n";
    }
    const double ly = kTop + 16.0 * static_cast<double>(index);
    os << "<rect x=\"" << kLeft + plot_w + 14 << "\" y=\"" << ly << "\" width=\"10\" height=\"10\" fill=\"" << colour
       << "\"/>\n"
       << "<text x=\"" << kLeft + plot_w + 30 << "\" y=\"" << ly + 9 << "\">N=" << key.first << ' ' << key.second
       << "</text>\n";
    ++index;
  }
  os << "</svg>\n";
  return os.str();
}

void render_report(const cover::CoverageProfile& profile, const std::filesystem::path& svg_path) {
  std::string title = "uncovered fraction";
  if (!profile.rows.empty()) {
    title += " - " + profile.rows.front().family + " " + profile.rows.front().params;
  }
  const std::string svg = render_svg(profile, title);
  if (svg_path.has_parent_path()) {
    std::filesystem::create_directories(svg_path.parent_path());
  }
  std::ofstream(svg_path, std::ios::binary | std::ios::trunc) << svg;
  auto txt = svg_path;
  txt.replace_extension(".txt");
  std::ofstream(txt, std::ios::binary | std::ios::trunc) << summary_table(profile);
}

}  // namespace fg::lab
