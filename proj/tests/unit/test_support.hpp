#pragma once

#include <algorithm>
#include <vector>

#include "pencilkit/linalg.hpp"

namespace pktest {

inline pencilkit::SymMatrix diag(std::initializer_list<double> d) {
  pencilkit::Vector v(static_cast<int>(d.size()));
  int i = 0;
  for (double x : d) v(i++) = x;
  return pencilkit::SymMatrix::diagonal(v);
}

inline pencilkit::SymMatrix sym(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  pencilkit::Matrix m(n, n);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double x : r) m(i, j++) = x;
    ++i;
  }
  return pencilkit::SymMatrix(m);
}

inline pencilkit::Vector vec(std::initializer_list<double> d) {
  pencilkit::Vector v(static_cast<int>(d.size()));
  int i = 0;
  for (double x : d) v(i++) = x;
  return v;
}

inline std::vector<double> sorted_real(const std::vector<pencilkit::Complex>& z) {
  std::vector<double> r;
  for (const auto& c : z) r.push_back(c.real());
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace pktest
