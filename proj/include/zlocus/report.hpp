#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zlocus/limitset.hpp"
#include "zlocus/rootfind.hpp"
#include "zlocus/theorems.hpp"

namespace zlocus {

/// 17 significant digits (%.17g), round-trip safe.
std::string format_double(double x);

/// Exact rational as a JSON [num, den] pair. Components outside the int64
/// range are written as decimal strings.
std::string rational_json(const Rational& x);

struct LabelledRoots {
  int m = 0;
  RootSet roots;
};

/// Header `m,re,im,residual`, one LF-terminated row per root in stored order.
std::string roots_csv(const std::vector<LabelledRoots>& sets);

struct RootRow {
  int m = 0;
  double re = 0.0;
  double im = 0.0;
  double residual = 0.0;
};

/// Inverse of roots_csv. Throws InvalidArgument on malformed input.
std::vector<RootRow> parse_roots_csv(std::string_view text);

std::string roots_json(const std::vector<LabelledRoots>& sets);

/// Coefficient lists, lowest index first: [num, den] pairs or [re, im] pairs.
std::string coefficients_json(const std::vector<Polynomial<Rational>>& polys);
std::string coefficients_json(const std::vector<Polynomial<Complex>>& polys);

std::string verdicts_json(const std::vector<DiskVerdict>& verdicts);
std::string exploration_json(const std::vector<ExplorationEntry>& entries);
std::string midpoint_json(const MidpointReport& report);
std::string limit_report_json(const LimitReport& report);
std::string annulus_json(const Annulus& annulus);

struct SvgPanel {
  std::string title;
  LabelledRoots data;
  double circle_radius = 0.0;  ///< overlay drawn when positive
};

/// One square panel per entry, laid out left to right. Every root becomes a
/// <circle class="root"> carrying data-m, data-re and data-im attributes with
/// the same text as the CSV fields.
std::string render_svg(const std::vector<SvgPanel>& panels);

}  // namespace zlocus
