#include <cstddef>

#include "hs2/kernels.hpp"

namespace hs2::kernels::omp {

void trig_eval(TrigSeries s, std::span<const double> points, std::span<cplx> out) {
  const auto m = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    out[static_cast<std::size_t>(i)] = detail::trig_point(s, points[static_cast<std::size_t>(i)]);
  }
}

void trig_eval_with_derivative(TrigSeries s, std::span<const double> points, std::span<cplx> value,
                               std::span<cplx> deriv) {
  const auto m = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const auto k = static_cast<std::size_t>(i);
    detail::trig_point_with_derivative(s, points[k], value[k], deriv[k]);
  }
}

void invert_lift(TrigSeries shift, std::span<const double> node_lift, std::span<const double> targets,
                 std::span<double> out) {
  const auto m = static_cast<std::ptrdiff_t>(targets.size());
  // Newton iteration counts vary per target, so hand out work dynamically.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = detail::invert_point(shift, node_lift, targets[k]);
  }
}

}  // namespace hs2::kernels::omp
