#pragma once

#include <string>

#include "tricontour/spectral.hpp"

namespace tricontour {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Loop CSV: one "re,im" row per sample, full double precision.
SampledLoop parse_loop_csv(const std::string& text);
std::string loop_to_csv(const SampledLoop& loop);

// Spectrum JSON: array of [k, re, im] triples sorted by k ascending.
// Values round-trip exactly (shortest-representation doubles).
std::string spectrum_to_json(const SpectralSeries& series);
SpectralSeries spectrum_from_json(const std::string& text);

}  // namespace tricontour
