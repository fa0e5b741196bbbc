#pragma once

// Matrix Market reader and writer for dense real matrices.

#include <string>

#include "pencilkit/errors.hpp"
#include "pencilkit/linalg.hpp"

namespace pencilkit::cli {

class ParseError : public Error {
 public:
  ParseError(const std::string& path, int line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class NotReal : public Error {
 public:
  using Error::Error;
};

enum class MmFormat { array, coordinate };

/// Any real or integer matrix, array or coordinate, general, symmetric or
/// skew-symmetric storage. Throws ParseError, NotReal.
Matrix read_matrix_market(const std::string& path);

/// read_matrix_market restricted to square input, symmetrized. Throws
/// NotSquare in addition.
SymMatrix ingest_matrix(const std::string& path);

/// Symmetric storage (lower triangle), values printed with %.17g so that
/// reading the file back reproduces every entry exactly.
void write_matrix_market(const std::string& path, const SymMatrix& m, MmFormat format = MmFormat::array);

/// General storage for an arbitrary matrix.
void write_matrix_market(const std::string& path, const Matrix& m, MmFormat format = MmFormat::array);

}  // namespace pencilkit::cli
