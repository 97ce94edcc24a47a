#include "ctxlab/error.hpp"

#include <sstream>

namespace ctxlab {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::empty_context: return "empty_context";
    case Errc::duplicate_atom_in_context: return "duplicate_atom_in_context";
    case Errc::duplicate_context: return "duplicate_context";
    case Errc::unknown_catalog_name: return "unknown_catalog_name";
    case Errc::bad_params: return "bad_params";
    case Errc::syntax_error: return "syntax_error";
    case Errc::unknown_atom: return "unknown_atom";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::missing_atom: return "missing_atom";
    case Errc::empty_state_set: return "empty_state_set";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::invalid_weights: return "invalid_weights";
    case Errc::missing_vector: return "missing_vector";
    case Errc::not_unit_vector: return "not_unit_vector";
    case Errc::empty_targets: return "empty_targets";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

std::string ParseError::format(int line, int column, const std::string& message) {
  std::ostringstream out;
  out << "line " << line << ", col " << column << ": " << message;
  return out.str();
}

}  // namespace ctxlab
