#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctxlab {

// Error codes for everything a caller may want to branch on.
enum class Errc {
  empty_context,
  duplicate_atom_in_context,
  duplicate_context,
  unknown_catalog_name,
  bad_params,
  syntax_error,
  unknown_atom,
  dimension_mismatch,
  missing_atom,
  empty_state_set,
  length_mismatch,
  invalid_weights,
  missing_vector,
  not_unit_vector,
  empty_targets,
  io_error,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(Errc::syntax_error, format(line, column, message)),
        line_(line),
        column_(column) {}

  ParseError(Errc code, int line, int column, const std::string& message)
      : Error(code, format(line, column, message)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(int line, int column, const std::string& message);

  int line_;
  int column_;
};

}  // namespace ctxlab
