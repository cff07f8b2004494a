#include "tetra/angle_search.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tetra {

CircleMaximum golden_section_maximize(const std::function<double(double)>& objective, double lo,
                                      double hi, int steps) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = objective(c);
  double fd = objective(d);
  CircleMaximum best = fc >= fd ? CircleMaximum{c, fc} : CircleMaximum{d, fd};
  for (int i = 0; i < steps; ++i) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = objective(c);
      if (fc > best.value) best = {c, fc};
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = objective(d);
      if (fd > best.value) best = {d, fd};
    }
  }
  return best;
}

CircleMaximum maximize_on_circle(const std::function<double(double)>& objective, AngleGrid grid) {
  if (grid.samples < 3) throw std::invalid_argument("angle grid needs at least 3 samples");
  const double step = 2.0 * std::numbers::pi / grid.samples;
  CircleMaximum best{0.0, objective(0.0)};
  for (int k = 1; k < grid.samples; ++k) {
    const double angle = k * step;
    const double value = objective(angle);
    if (value > best.value) best = {angle, value};
  }
  if (grid.refinement_steps <= 0) return best;
  const CircleMaximum refined =
      golden_section_maximize(objective, best.angle - step, best.angle + step, grid.refinement_steps);
  return refined.value > best.value ? refined : best;
}

}  // namespace tetra
