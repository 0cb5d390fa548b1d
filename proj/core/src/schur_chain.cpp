#include "schur_chain.hpp"

namespace mrig::detail {

SchurChain::SchurChain(const WeightMatrix& w)
    : n_(w.size()), w_(&w.dense()), lower_(n_, n_), u_(n_, n_), uu_(n_, 0.0), x_(n_, 0.0) {}

double SchurChain::prepare(std::size_t m) {
  const Matrix& w = *w_;
  double uu = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double s = w(i, m);
    for (std::size_t r = 0; r < i; ++r) s -= lower_(i, r) * u_(m, r);
    s /= lower_(i, i);
    u_(m, i) = s;
    uu += s * s;
  }
  uu_[m] = uu;
  return uu;
}

double SchurChain::fix(std::size_t m, double t) {
  for (std::size_t i = 0; i < m; ++i) lower_(m, i) = -u_(m, i);
  lower_(m, m) = t;
  x_[m] = 0.5 * (t * t + uu_[m]);
  return x_[m];
}

}  // namespace mrig::detail
