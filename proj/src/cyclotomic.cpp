#include "expsumlab/cyclotomic.hpp"

#include <utility>

namespace expsumlab {

CyclotomicRat inverse(const CyclotomicRat& x) {
  if (x.is_zero()) throw DomainError("inverse of zero in Q(zeta)");
  const std::uint32_t p = x.p();
  const std::size_t w = x.coords().size();
  if (x.is_rational()) {
    std::vector<mpq_class> c(w);
    c[0] = 1 / x.coords()[0];
    return CyclotomicRat(p, std::move(c));
  }
  // Column j of the matrix is x * zeta^j; solve M y = e_0.
  std::vector<std::vector<mpq_class>> m(w, std::vector<mpq_class>(w + 1));
  for (std::size_t j = 0; j < w; ++j) {
    CyclotomicRat col = x * CyclotomicRat(CyclotomicInt::zeta_power(p, std::int64_t(j)));
    for (std::size_t i = 0; i < w; ++i) m[i][j] = col.coords()[i];
  }
  m[0][w] = 1;
  for (std::size_t col = 0; col < w; ++col) {
    std::size_t pivot = col;
    while (pivot < w && m[pivot][col] == 0) ++pivot;
    if (pivot == w) throw DomainError("singular multiplication matrix");
    std::swap(m[col], m[pivot]);
    const mpq_class inv = 1 / m[col][col];
    for (std::size_t k = col; k <= w; ++k) m[col][k] *= inv;
    for (std::size_t r = 0; r < w; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t k = col; k <= w; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<mpq_class> y(w);
  for (std::size_t i = 0; i < w; ++i) y[i] = m[i][w];
  return CyclotomicRat(p, std::move(y));
}

}  // namespace expsumlab
