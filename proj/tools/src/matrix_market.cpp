#include "pencilkit/cli/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace pencilkit::cli {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

enum class Symmetry { general, symmetric, skew };

struct Reader {
  const std::string& path;
  std::ifstream in;
  int line_no = 0;

  // Next non-comment, non-blank line; false at end of file.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '%') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(path, line_no, what); }
};

double parse_double(const Reader& r, const std::string& tok) {
  double v = 0.0;
  const char* b = tok.data() + (tok.size() > 1 && tok[0] == '+' ? 1 : 0);
  const char* e = tok.data() + tok.size();
  const auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e) r.fail("bad numeric value '" + tok + "'");
  return v;
}

long parse_index(const Reader& r, const std::string& tok) {
  long v = 0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  const auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e) r.fail("bad integer '" + tok + "'");
  return v;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

void write_value(std::FILE* f, double v) { std::fprintf(f, "%.17g\n", v); }

void write_impl(const std::string& path, const Matrix& m, MmFormat format, bool symmetric) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw InvalidArgument("cannot open '" + path + "' for writing");
  const long rows = m.rows(), cols = m.cols();
  const char* storage = symmetric ? "symmetric" : "general";
  if (format == MmFormat::array) {
    std::fprintf(f, "%%%%MatrixMarket matrix array real %s\n%ld %ld\n", storage, rows, cols);
    for (long j = 0; j < cols; ++j)
      for (long i = symmetric ? j : 0; i < rows; ++i) write_value(f, m(i, j));
  } else {
    long nnz = 0;
    for (long j = 0; j < cols; ++j)
      for (long i = symmetric ? j : 0; i < rows; ++i)
        if (m(i, j) != 0.0) ++nnz;
    std::fprintf(f, "%%%%MatrixMarket matrix coordinate real %s\n%ld %ld %ld\n", storage, rows, cols, nnz);
    for (long j = 0; j < cols; ++j)
      for (long i = symmetric ? j : 0; i < rows; ++i)
        if (m(i, j) != 0.0) std::fprintf(f, "%ld %ld %.17g\n", i + 1, j + 1, m(i, j));
  }
  if (std::fclose(f) != 0) throw InvalidArgument("error writing '" + path + "'");
}

}  // namespace

Matrix read_matrix_market(const std::string& path) {
  Reader r{path, std::ifstream(path), 0};
  if (!r.in) throw InvalidArgument("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(r.in, line)) r.fail("empty file");
  ++r.line_no;
  const auto head = tokens(line);
  if (head.size() != 5 || lower(head[0]) != "%%matrixmarket" || lower(head[1]) != "matrix")
    r.fail("missing '%%MatrixMarket matrix' banner");
  const std::string layout = lower(head[2]), field = lower(head[3]), sym = lower(head[4]);
  if (layout != "array" && layout != "coordinate") r.fail("unknown format '" + head[2] + "'");
  if (field == "complex") throw NotReal(path + ": complex matrices are not supported");
  if (field == "pattern") throw NotReal(path + ": pattern matrices carry no values");
  if (field != "real" && field != "integer" && field != "double") r.fail("unknown field '" + head[3] + "'");
  Symmetry symmetry = Symmetry::general;
  if (sym == "symmetric")
    symmetry = Symmetry::symmetric;
  else if (sym == "skew-symmetric")
    symmetry = Symmetry::skew;
  else if (sym == "hermitian")
    throw NotReal(path + ": hermitian storage implies complex values");
  else if (sym != "general")
    r.fail("unknown symmetry '" + head[4] + "'");

  if (!r.next(line)) r.fail("missing size line");
  const auto size = tokens(line);
  const bool coordinate = layout == "coordinate";
  if (size.size() != (coordinate ? 3u : 2u)) r.fail("malformed size line");
  const long rows = parse_index(r, size[0]), cols = parse_index(r, size[1]);
  if (rows <= 0 || cols <= 0) r.fail("dimensions must be positive");
  if (symmetry != Symmetry::general && rows != cols)
    throw NotSquare(path + ": symmetric storage requires a square matrix");
  Matrix m = Matrix::Zero(rows, cols);
  const double mirror = symmetry == Symmetry::skew ? -1.0 : 1.0;

  if (coordinate) {
    const long nnz = parse_index(r, size[2]);
    if (nnz < 0) r.fail("negative entry count");
    for (long k = 0; k < nnz; ++k) {
      if (!r.next(line)) r.fail("expected " + std::to_string(nnz) + " entries, found " + std::to_string(k));
      const auto t = tokens(line);
      if (t.size() != 3) r.fail(t.size() == 4 ? "complex entry in a real file" : "malformed entry");
      const long i = parse_index(r, t[0]) - 1, j = parse_index(r, t[1]) - 1;
      if (i < 0 || i >= rows || j < 0 || j >= cols) r.fail("index out of range");
      if (symmetry != Symmetry::general && j > i) r.fail("upper-triangle entry in symmetric storage");
      const double v = parse_double(r, t[2]);
      m(i, j) += v;
      if (symmetry != Symmetry::general && i != j) m(j, i) += mirror * v;
    }
  } else {
    for (long j = 0; j < cols; ++j) {
      for (long i = symmetry == Symmetry::general ? 0 : (symmetry == Symmetry::skew ? j + 1 : j); i < rows; ++i) {
        if (!r.next(line)) r.fail("too few array entries");
        const auto t = tokens(line);
        if (t.size() != 1) r.fail(t.size() == 2 ? "complex entry in a real file" : "malformed array entry");
        const double v = parse_double(r, t[0]);
        m(i, j) = v;
        if (symmetry != Symmetry::general) m(j, i) = mirror * v;
      }
    }
  }
  if (r.next(line)) r.fail("unexpected trailing data");
  return m;
}

SymMatrix ingest_matrix(const std::string& path) {
  const Matrix m = read_matrix_market(path);
  if (m.rows() != m.cols())
    throw NotSquare(path + ": matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return SymMatrix(m);
}

void write_matrix_market(const std::string& path, const SymMatrix& m, MmFormat format) {
  write_impl(path, m.matrix(), format, true);
}

void write_matrix_market(const std::string& path, const Matrix& m, MmFormat format) {
  write_impl(path, m, format, false);
}

}  // namespace pencilkit::cli
