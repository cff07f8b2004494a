#pragma once

#include <functional>

namespace tetra {

/// Resolution of a maximization over the unit circle: a uniform grid of
/// `samples` angles followed by `refinement_steps` golden-section steps on the
/// bracket around the best grid angle.
struct AngleGrid {
  int samples = 1024;
  int refinement_steps = 60;
};

struct CircleMaximum {
  double angle = 0.0;
  double value = 0.0;
};

/// Maximizes a 2*pi-periodic function of the angle. Deterministic.
CircleMaximum maximize_on_circle(const std::function<double(double)>& objective,
                                 AngleGrid grid = {});

/// Golden-section maximization of a unimodal function on [lo, hi].
CircleMaximum golden_section_maximize(const std::function<double(double)>& objective, double lo,
                                      double hi, int steps);

}  // namespace tetra
