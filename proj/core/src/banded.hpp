#pragma once
// Compact banded matrices and an LU solve on top of LAPACK's general banded
// factorization. Partial pivoting matters here: the step operators have
// off-diagonal entries of order dt/h that dominate the unit diagonal.

#include <lapacke.h>

#include <stdexcept>
#include <vector>

namespace wavelab {

struct BandMat {
  int n = 0, kl = 0, ku = 0, ld = 0;
  std::vector<double> a;  // column-major bands, entry (i,j) at a[j*ld + ku + i - j]

  BandMat(int n_, int kl_, int ku_)
      : n(n_), kl(kl_), ku(ku_), ld(kl_ + ku_ + 1), a(static_cast<std::size_t>(n_) * ld, 0.0) {}

  bool in_band(int i, int j) const {
    int d = i - j;
    return d >= -ku && d <= kl;
  }
  double& at(int i, int j) { return a[static_cast<std::size_t>(j) * ld + ku + i - j]; }
  double get(int i, int j) const {
    return a[static_cast<std::size_t>(j) * ld + ku + i - j];
  }
  void add(int i, int j, double v) { at(i, j) += v; }

  void clear_row(int i) {
    int jlo = i - kl < 0 ? 0 : i - kl;
    int jhi = i + ku >= n ? n - 1 : i + ku;
    for (int j = jlo; j <= jhi; ++j) at(i, j) = 0.0;
  }

  void matvec(const std::vector<double>& x, std::vector<double>& y) const {
    y.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
      int ilo = j - ku < 0 ? 0 : j - ku;
      int ihi = j + kl >= n ? n - 1 : j + kl;
      const double xj = x[j];
      const double* col = a.data() + static_cast<std::size_t>(j) * ld;
      for (int i = ilo; i <= ihi; ++i) y[i] += col[ku + i - j] * xj;
    }
  }
};

class BandLU {
 public:
  void factor(const BandMat& m) {
    n_ = m.n;
    kl_ = m.kl;
    ku_ = m.ku;
    ldab_ = 2 * kl_ + ku_ + 1;
    ab_.assign(static_cast<std::size_t>(n_) * ldab_, 0.0);
    for (int j = 0; j < n_; ++j) {
      int ilo = j - ku_ < 0 ? 0 : j - ku_;
      int ihi = j + kl_ >= n_ ? n_ - 1 : j + kl_;
      for (int i = ilo; i <= ihi; ++i)
        ab_[static_cast<std::size_t>(j) * ldab_ + kl_ + ku_ + i - j] = m.get(i, j);
    }
    ipiv_.assign(n_, 0);
    lapack_int info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n_, n_, kl_, ku_, ab_.data(), ldab_,
                                     ipiv_.data());
    if (info != 0)
      throw std::runtime_error("banded factorization failed (info=" + std::to_string(info) + ")");
  }

  void solve(std::vector<double>& rhs) const {
    if (static_cast<int>(rhs.size()) != n_)
      throw std::invalid_argument("BandLU::solve: size mismatch");
    lapack_int info = LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n_, kl_, ku_, 1, ab_.data(), ldab_,
                                     ipiv_.data(), rhs.data(), n_);
    if (info != 0)
      throw std::runtime_error("banded solve failed (info=" + std::to_string(info) + ")");
  }

 private:
  int n_ = 0, kl_ = 0, ku_ = 0, ldab_ = 0;
  std::vector<double> ab_;
  std::vector<lapack_int> ipiv_;
};

}  // namespace wavelab
