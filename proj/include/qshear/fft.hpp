// Thin FFTW3 wrapper for in-place 2D transforms on row-major complex grids.
#pragma once

#include <fftw3.h>

#include "qshear/common.hpp"

namespace qshear {

// Unnormalized forward DFT: X[k] = sum_n x[n] exp(-2 pi i k.n / N).
inline void fft2(std::vector<cplx>& a, int rows, int cols) {
  if ((size_t)rows * cols != a.size()) throw std::invalid_argument("fft2 size");
  fftw_plan plan = fftw_plan_dft_2d(
      rows, cols, reinterpret_cast<fftw_complex*>(a.data()),
      reinterpret_cast<fftw_complex*>(a.data()), FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

// Unnormalized inverse DFT (no 1/N^2).
inline void ifft2_raw(std::vector<cplx>& a, int rows, int cols) {
  if ((size_t)rows * cols != a.size()) throw std::invalid_argument("fft2 size");
  fftw_plan plan = fftw_plan_dft_2d(
      rows, cols, reinterpret_cast<fftw_complex*>(a.data()),
      reinterpret_cast<fftw_complex*>(a.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

// Normalized inverse DFT: x[n] = (1/N^2) sum_k X[k] exp(+2 pi i k.n / N).
inline void ifft2(std::vector<cplx>& a, int rows, int cols) {
  ifft2_raw(a, rows, cols);
  double s = 1.0 / (double(rows) * double(cols));
  for (auto& v : a) v *= s;
}

}  // namespace qshear
