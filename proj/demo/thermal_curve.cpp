// Prints C_s(T) for the two-spin axial model next to the Wootters value, and
// the line model's ground-level crossing along J2.

#include "symcon/symcon.hpp"

#include <cstdio>

int main() {
  using namespace symcon;
  const ModelSpec axial = ModelSpec::make(ModelKind::TwoSpinAxial, {1.0, 1.0, 0.0, 0.0});
  std::printf("axial2 J1=J2=1\n%8s %12s %12s\n", "T", "C_s", "wootters");
  for (double t : {0.1, 0.3, 0.5, 0.7, 0.9, 0.91, 1.0, 1.5}) {
    const PointResult p = evaluate_point(axial, t);
    std::printf("%8.3f %12.8f %12.8f\n", t, p.result.c_s, concurrence_wootters(p.ensemble.rho));
  }

  std::printf("\nline3 J1=-1 J3=0.5 T=0.01\n%8s %12s\n", "J2", "C_s");
  for (double j2 = 0.0; j2 <= 1.2001; j2 += 0.1)
    std::printf("%8.2f %12.8f\n", j2, compute_cs(ModelSpec::make(ModelKind::LineThree, {-1.0, j2, 0.5, 0.0}), 0.01));
  return 0;
}
