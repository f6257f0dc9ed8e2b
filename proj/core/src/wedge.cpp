#include "zpd/wedge.hpp"

namespace zpd {

Vec wedge_coords(const Vec& x, const Vec& y, const WedgeIndex& w) {
  if (x.size() != w.n || y.size() != w.n)
    fail(errc::input, "wedge_coords: dimension mismatch");
  if (w.n == 0) return {};
  const Field& f = x[0].field();
  require_same_field(f, y[0].field(), "wedge_coords");
  Vec out(w.dim(), Scalar::zero(f));
  std::size_t k = 0;
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = i + 1; j < w.n; ++j, ++k)
      out[k] = x[i] * y[j] - x[j] * y[i];
  return out;
}

}  // namespace zpd
