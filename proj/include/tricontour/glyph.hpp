#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tricontour/operators.hpp"
#include "tricontour/svg.hpp"

namespace tricontour {

// A glyph is a bag of closed contours (outer boundary plus counters),
// each processed independently by the pipelines below.
struct GlyphDocument {
  std::vector<Contour> contours;
  std::string source_name;
};

// Parse "x,y" lines into a closed contour. Blank lines and lines starting
// with '#' are skipped; anything else that fails to parse reports its
// 1-based line number. At least 3 points required.
Contour parse_points_csv(const std::string& text);

// Center at the vertex centroid, scale to max |z| = 1, and orient
// counterclockwise (reversal keeps vertex 0 first). Contours enclosing no
// area are rejected.
Contour normalize(const Contour& contour);

// Load .svg (all path elements, all subpaths) or .csv (single contour).
GlyphDocument load_glyph(const std::string& path);

// Per contour: resample_arclength(N) -> analyze(m) -> synthesize(N).
// Bandlimits each contour to |k| <= max_mode.
std::vector<SampledLoop> truncate_glyph(const GlyphDocument& doc, int max_mode,
                                        int sample_count);

// Per contour: resample_arclength(N) -> analyze(m) -> triangle_transform(a)
// -> truncated_inverse(a, n) -> synthesize(N). Requires
// sample_count >= minimal_transform_samples(n, max_mode).
std::vector<SampledLoop> transform_glyph(const GlyphDocument& doc, WidthParam a,
                                         int n, int max_mode, int sample_count);

// Smallest legal sample count for transform_glyph: 2 * 2^n * 4 * max_mode + 1
// (indices grow by the factor 2^n * 4 through the operator chain).
std::int64_t minimal_transform_samples(int n, int max_mode);

// "a{%.6g}_n{%d}.svg", shared by the sweep CLI and its tests.
std::string sweep_filename(double a, int n);

}  // namespace tricontour
