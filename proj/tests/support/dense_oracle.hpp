#pragma once

// Test-only dense linear algebra. Builds full 2^q x 2^q operators from their
// mathematical definition (no gate application) so results of the simulator
// can be checked against an independent route.

#include <complex>
#include <cstdint>
#include <vector>

namespace qaco::testing {

using Complex = std::complex<double>;

class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{}) {}

  static DenseMatrix identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::vector<Complex> apply(const std::vector<Complex>& v) const {
    std::vector<Complex> out(dim_, Complex{});
    for (std::size_t r = 0; r < dim_; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
      out[r] = acc;
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// (2|s><s| - I) on the low `path_bits` bits, identity on the rest.
inline DenseMatrix path_diffusion(std::size_t qubits, std::size_t path_bits) {
  const std::size_t dim = std::size_t{1} << qubits;
  const std::size_t paths = std::size_t{1} << path_bits;
  const std::size_t mask = paths - 1;
  DenseMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      m(r, c) = 2.0 / static_cast<double>(paths) - (r == c ? 1.0 : 0.0);
    }
  }
  return m;
}

/// Diagonal -1 on basis states where `qubit` is 1.
inline DenseMatrix phase_flag(std::size_t qubits, std::size_t qubit) {
  const std::size_t dim = std::size_t{1} << qubits;
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = ((i >> qubit) & 1U) ? -1.0 : 1.0;
  return m;
}

/// Permutation matrix of a multi-controlled NOT.
inline DenseMatrix mct_permutation(std::size_t qubits, const std::vector<std::size_t>& controls,
                                   std::size_t target) {
  const std::size_t dim = std::size_t{1} << qubits;
  std::size_t cmask = 0;
  for (auto c : controls) cmask |= std::size_t{1} << c;
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t j = (i & cmask) == cmask ? i ^ (std::size_t{1} << target) : i;
    m(j, i) = 1.0;
  }
  return m;
}

}  // namespace qaco::testing
