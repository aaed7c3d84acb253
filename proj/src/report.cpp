#include "zlocus/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>
#include <sstream>

namespace zlocus {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string integer_json(const Integer& v) {
  static const Integer lo(std::numeric_limits<long long>::min());
  static const Integer hi(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return v.str();
  return "\"" + v.str() + "\"";
}

std::string complex_json(const Complex& z) { return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]"; }

template <typename T, typename Fn>
std::string json_array(const std::vector<T>& items, Fn&& item) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += item(items[i]);
  }
  return out + "]";
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

double parse_double_field(std::string_view field) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw Error(ErrorCode::InvalidArgument, "bad number in CSV: '" + std::string(field) + "'");
  return value;
}

std::string fixed(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string rational_json(const Rational& x) {
  return "[" + integer_json(numerator(x)) + "," + integer_json(denominator(x)) + "]";
}

std::string roots_csv(const std::vector<LabelledRoots>& sets) {
  std::string out = "m,re,im,residual\n";
  for (const auto& set : sets)
    for (std::size_t i = 0; i < set.roots.roots.size(); ++i) {
      const Complex& z = set.roots.roots[i];
      const double residual = i < set.roots.residuals.size() ? set.roots.residuals[i] : 0.0;
      out += std::to_string(set.m) + "," + format_double(z.real()) + "," + format_double(z.imag()) + "," +
             format_double(residual) + "\n";
    }
  return out;
}

std::vector<RootRow> parse_roots_csv(std::string_view text) {
  std::vector<RootRow> rows;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (header) {
      if (line != "m,re,im,residual") throw Error(ErrorCode::InvalidArgument, "unexpected CSV header");
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::string_view fields[4];
    std::size_t start = 0;
    for (int f = 0; f < 4; ++f) {
      const std::size_t comma = f < 3 ? line.find(',', start) : line.size();
      if (comma == std::string_view::npos) throw Error(ErrorCode::InvalidArgument, "short CSV row");
      fields[f] = line.substr(start, comma - start);
      start = comma + 1;
    }
    RootRow row;
    const auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), row.m);
    if (ec != std::errc() || ptr != fields[0].data() + fields[0].size())
      throw Error(ErrorCode::InvalidArgument, "bad m in CSV");
    row.re = parse_double_field(fields[1]);
    row.im = parse_double_field(fields[2]);
    row.residual = parse_double_field(fields[3]);
    rows.push_back(row);
  }
  if (header) throw Error(ErrorCode::InvalidArgument, "missing CSV header");
  return rows;
}

std::string roots_json(const std::vector<LabelledRoots>& sets) {
  return json_array(sets, [](const LabelledRoots& s) {
    return "{\"m\":" + std::to_string(s.m) + ",\"converged\":" + bool_json(s.roots.converged) +
           ",\"roots\":" + json_array(s.roots.roots, complex_json) +
           ",\"residuals\":" + json_array(s.roots.residuals, format_double) + "}";
  });
}

std::string coefficients_json(const std::vector<Polynomial<Rational>>& polys) {
  return json_array(polys, [](const Polynomial<Rational>& p) {
    std::string out = "[";
    for (Eigen::Index k = 0; k < p.size(); ++k) out += (k ? "," : "") + rational_json(p[k]);
    return out + "]";
  });
}

std::string coefficients_json(const std::vector<Polynomial<Complex>>& polys) {
  return json_array(polys, [](const Polynomial<Complex>& p) {
    std::string out = "[";
    for (Eigen::Index k = 0; k < p.size(); ++k) out += (k ? "," : "") + complex_json(p[k]);
    return out + "]";
  });
}

std::string verdicts_json(const std::vector<DiskVerdict>& verdicts) {
  return json_array(verdicts, [](const DiskVerdict& v) {
    return "{\"m\":" + std::to_string(v.m) + ",\"radius\":" + format_double(v.radius) +
           ",\"min_modulus\":" + format_double(v.min_modulus) + ",\"max_modulus\":" + format_double(v.max_modulus) +
           ",\"satisfied\":" + bool_json(v.satisfied) + ",\"margin\":" + format_double(v.margin) +
           ",\"excludes_open_ball\":" + bool_json(v.excludes_open_ball) +
           ",\"excludes_closed_disk\":" + bool_json(v.excludes_closed_disk) + "}";
  });
}

std::string exploration_json(const std::vector<ExplorationEntry>& entries) {
  return json_array(entries, [](const ExplorationEntry& e) {
    return "{\"m\":" + std::to_string(e.m) + ",\"radius\":" + format_double(e.radius) +
           ",\"min_modulus\":" + format_double(e.min_modulus) + ",\"max_modulus\":" + format_double(e.max_modulus) +
           ",\"inside\":" + std::to_string(e.inside) + ",\"outside\":" + std::to_string(e.outside) + "}";
  });
}

std::string midpoint_json(const MidpointReport& report) {
  return "{\"exclusion_radius\":" + format_double(report.exclusion_radius) +
         ",\"n_observed\":" + std::to_string(report.n_observed) + ",\"verdicts\":" +
         json_array(report.verdicts, [](const ExclusionVerdict& v) {
           return "{\"m\":" + std::to_string(v.m) + ",\"min_modulus\":" + format_double(v.min_modulus) +
                  ",\"satisfied\":" + bool_json(v.satisfied) + "}";
         }) +
         "}";
}

std::string limit_report_json(const LimitReport& report) {
  return "{\"radius\":" + format_double(report.radius) + ",\"entries\":" +
         json_array(report.entries, [](const LimitEntry& e) {
           return "{\"m\":" + std::to_string(e.m) + ",\"hausdorff\":" + format_double(e.hausdorff) +
                  ",\"radial_spread\":" + format_double(e.radial_spread) + "}";
         }) +
         "}";
}

std::string annulus_json(const Annulus& annulus) {
  return "{\"r_min\":" + format_double(annulus.r_min) + ",\"r_max\":" + format_double(annulus.r_max) + "}";
}

std::string render_svg(const std::vector<SvgPanel>& panels) {
  constexpr double kPanel = 400.0;
  constexpr double kGap = 20.0;
  constexpr double kHalf = kPanel / 2.0;
  const double width = panels.empty() ? kPanel : panels.size() * kPanel + (panels.size() - 1) * kGap;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\"" << fixed(kPanel + 30)
      << "\" viewBox=\"0 0 " << fixed(width) << " " << fixed(kPanel + 30) << "\">\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const SvgPanel& panel = panels[i];
    double extent = std::max(panel.circle_radius, 0.0);
    for (const auto& z : panel.data.roots.roots) extent = std::max(extent, std::abs(z));
    if (!(extent > 0.0)) extent = 1.0;
    extent *= 1.1;
    const double scale = kHalf / extent;
    const double x0 = i * (kPanel + kGap);
    const double cx = x0 + kHalf;
    const double cy = 30 + kHalf;

    out << "<g class=\"panel\" data-m=\"" << panel.data.m << "\">\n";
    out << "<text x=\"" << fixed(cx) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
        << escape_xml(panel.title) << "</text>\n";
    out << "<rect x=\"" << fixed(x0) << "\" y=\"30\" width=\"" << fixed(kPanel) << "\" height=\"" << fixed(kPanel)
        << "\" fill=\"white\" stroke=\"#999\"/>\n";
    out << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(cy) << "\" x2=\"" << fixed(x0 + kPanel) << "\" y2=\""
        << fixed(cy) << "\" stroke=\"#ddd\"/>\n";
    out << "<line x1=\"" << fixed(cx) << "\" y1=\"30\" x2=\"" << fixed(cx) << "\" y2=\"" << fixed(30 + kPanel)
        << "\" stroke=\"#ddd\"/>\n";
    if (panel.circle_radius > 0.0)
      out << "<circle class=\"limit\" data-radius=\"" << format_double(panel.circle_radius) << "\" cx=\"" << fixed(cx)
          << "\" cy=\"" << fixed(cy) << "\" r=\"" << fixed(panel.circle_radius * scale)
          << "\" fill=\"none\" stroke=\"#c33\"/>\n";
    for (const auto& z : panel.data.roots.roots)
      out << "<circle class=\"root\" data-m=\"" << panel.data.m << "\" data-re=\"" << format_double(z.real())
          << "\" data-im=\"" << format_double(z.imag()) << "\" cx=\"" << fixed(cx + z.real() * scale) << "\" cy=\""
          << fixed(cy - z.imag() * scale) << "\" r=\"2\" fill=\"#236\"/>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace zlocus
