#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "critlab/matrix.hpp"

namespace critlab {

enum class FigureKind { Fig1, Fig2 };

std::optional<FigureKind> parse_figure_kind(std::string_view text) noexcept;

/// Default size: 50 for the Haar orthogonal figure, 300 for real Ginibre.
std::size_t default_figure_size(FigureKind kind) noexcept;

struct FigureData {
  std::vector<cplx> zeros;
  std::vector<cplx> critical;
};

/// Fig1: eigenvalues of a Haar O(n) sample and the critical points of its
/// characteristic polynomial. Fig2: the same for real Ginibre, both series
/// scaled by 1/sqrt(n).
FigureData figure_data(FigureKind kind, std::size_t n, std::uint64_t seed);

/// "re,im,series" rows, series "zeros" then "critical".
void write_figure_csv(std::ostream& out, const FigureData& data);

/// 600x600 scatter with a unit-circle guide and 3px markers.
void write_figure_svg(std::ostream& out, const FigureData& data, std::string_view title);

}  // namespace critlab
