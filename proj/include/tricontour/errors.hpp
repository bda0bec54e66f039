#pragma once

#include <stdexcept>
#include <string>

namespace tricontour {

enum class errc {
  invalid_parameter,
  degenerate_parameter,
  divergent_tail,
  insufficient_samples,
  insufficient_terms,
  zero_dilation,
  degenerate_contour,
  unsupported_command,
  unclosed_subpath,
  empty_path,
  malformed_row,
  too_few_points,
  empty_input,
  io_error,
};

// Single exception type for the whole library; code() tells callers (and the
// CLI exit-code mapping) which failure class they hit.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

const char* errc_name(errc code);

// Parse-class failures come from reading input files (SVG path data, CSV
// rows, spectrum JSON); everything else is a precondition violation.
bool is_parse_error(errc code);

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace tricontour
