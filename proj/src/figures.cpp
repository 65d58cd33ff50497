#include "critlab/figures.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <ostream>
#include <string>

#include "critlab/eigen.hpp"
#include "critlab/ensembles.hpp"
#include "critlab/errors.hpp"
#include "critlab/format.hpp"
#include "critlab/polynomials.hpp"
#include "critlab/rng.hpp"

namespace critlab {

namespace {

constexpr std::uint64_t kFig1Tag = 0x66696731ULL;
constexpr std::uint64_t kFig2Tag = 0x66696732ULL;

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::optional<FigureKind> parse_figure_kind(std::string_view text) noexcept {
  if (text == "fig1" || text == "Fig1") return FigureKind::Fig1;
  if (text == "fig2" || text == "Fig2") return FigureKind::Fig2;
  return std::nullopt;
}

std::size_t default_figure_size(FigureKind kind) noexcept {
  return kind == FigureKind::Fig1 ? 50 : 300;
}

FigureData figure_data(FigureKind kind, std::size_t n, std::uint64_t seed) {
  if (n < 2) throw InvalidDimension("figure size must be >= 2");
  FigureData data;
  if (kind == FigureKind::Fig1) {
    RngStream rng(seed, kFig1Tag);
    data.zeros = eigenvalues(haar_sample(GroupKind::Orthogonal, n, rng)).values;
  } else {
    RngStream rng(seed, kFig2Tag);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (const auto& z : eigenvalues(sample_ginibre_real(n, rng)).values) {
      data.zeros.push_back(z * scale);
    }
  }
  data.critical = critical_points_from_roots(RootForm{data.zeros}).points;
  return data;
}

void write_figure_csv(std::ostream& out, const FigureData& data) {
  out << "re,im,series\n";
  for (const auto& z : data.zeros) {
    out << format_double(z.real()) << ',' << format_double(z.imag()) << ",zeros\n";
  }
  for (const auto& z : data.critical) {
    out << format_double(z.real()) << ',' << format_double(z.imag()) << ",critical\n";
  }
}

void write_figure_svg(std::ostream& out, const FigureData& data, std::string_view title) {
  constexpr double size = 600.0;
  double extent = 1.0;
  for (const auto* series : {&data.zeros, &data.critical}) {
    for (const auto& z : *series) extent = std::max({extent, std::abs(z.real()), std::abs(z.imag())});
  }
  extent *= 1.1;
  const double scale = 0.5 * size / extent;
  const auto px = [&](double x) { return fixed(0.5 * size + x * scale); };
  const auto py = [&](double y) { return fixed(0.5 * size - y * scale); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  out << "<title>" << title << "</title>\n";
  out << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  out << "<line x1=\"0\" y1=\"300.00\" x2=\"600\" y2=\"300.00\" stroke=\"#ccc\"/>\n";
  out << "<line x1=\"300.00\" y1=\"0\" x2=\"300.00\" y2=\"600\" stroke=\"#ccc\"/>\n";
  out << "<path id=\"unit-circle\" d=\"M " << px(1.0) << ' ' << py(0.0) << " A " << fixed(scale)
      << ' ' << fixed(scale) << " 0 1 0 " << px(-1.0) << ' ' << py(0.0) << " A " << fixed(scale)
      << ' ' << fixed(scale) << " 0 1 0 " << px(1.0) << ' ' << py(0.0)
      << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  const auto series = [&](const std::vector<cplx>& pts, const char* id, const char* color) {
    out << "<g id=\"" << id << "\" fill=\"" << color << "\">\n";
    for (const auto& z : pts) {
      out << "<circle cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag()) << "\" r=\"3\"/>\n";
    }
    out << "</g>\n";
  };
  series(data.zeros, "zeros", "#1f77b4");
  series(data.critical, "critical", "#d62728");
  out << "<text x=\"10\" y=\"20\" font-size=\"14\" fill=\"#1f77b4\">zeros</text>\n";
  out << "<text x=\"10\" y=\"40\" font-size=\"14\" fill=\"#d62728\">critical points</text>\n";
  out << "</svg>\n";
}

}  // namespace critlab
