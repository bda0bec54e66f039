#include "tricontour/errors.hpp"

namespace tricontour {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_parameter: return "invalid_parameter";
    case errc::degenerate_parameter: return "degenerate_parameter";
    case errc::divergent_tail: return "divergent_tail";
    case errc::insufficient_samples: return "insufficient_samples";
    case errc::insufficient_terms: return "insufficient_terms";
    case errc::zero_dilation: return "zero_dilation";
    case errc::degenerate_contour: return "degenerate_contour";
    case errc::unsupported_command: return "unsupported_command";
    case errc::unclosed_subpath: return "unclosed_subpath";
    case errc::empty_path: return "empty_path";
    case errc::malformed_row: return "malformed_row";
    case errc::too_few_points: return "too_few_points";
    case errc::empty_input: return "empty_input";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

bool is_parse_error(errc code) {
  switch (code) {
    case errc::unsupported_command:
    case errc::unclosed_subpath:
    case errc::empty_path:
    case errc::malformed_row:
    case errc::too_few_points:
    case errc::io_error:
      return true;
    default:
      return false;
  }
}

void fail(errc code, const std::string& message) {
  throw Error(code, std::string(errc_name(code)) + ": " + message);
}

}  // namespace tricontour
