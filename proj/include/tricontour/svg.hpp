#pragma once

#include <string>
#include <vector>

#include "tricontour/spectral.hpp"

namespace tricontour {

// Parse SVG path data into one Contour per closed subpath.
// Supported commands: M/m L/l H/h V/v C/c Q/q Z/z, with implicit command
// repetition. Curves are flattened by uniform subdivision into 16 chords.
// Every subpath must end with Z; anything else (including A/S/T and
// malformed numbers) raises an Error carrying the byte offset.
std::vector<Contour> parse_svg_path(const std::string& path_data);

// Pull the d="..." attributes of every <path> element, in document order.
std::vector<std::string> extract_path_data(const std::string& svg_document);

struct RenderOptions {
  double stroke_width = 1.5;
  double canvas_width = 800.0;
  double canvas_height = 800.0;
  double margin = 40.0;
  int samples_out = 1024;

  void validate() const;  // positive canvas, 2*margin < canvas, samples_out >= 64
};

// Shared similarity transform that fits a batch of loops into the canvas:
// z -> (z - src_center) * scale + dst_center, aspect ratio preserved.
struct FitTransform {
  double scale = 1.0;
  cplx src_center;
  cplx dst_center;

  cplx apply(cplx z) const { return (z - src_center) * scale + dst_center; }
};

FitTransform compute_fit(const std::vector<SampledLoop>& loops,
                         const RenderOptions& opts);

// Render loops as stroked paths, one <path> per loop, all under a single
// group that flips y so path data stays in mathematical orientation.
// Coordinates are written with 6 decimals; equal inputs give equal bytes.
// closed=false leaves the Z off (used for function graphs).
std::string emit_svg(const std::vector<SampledLoop>& loops,
                     const RenderOptions& opts, bool closed = true);

}  // namespace tricontour
