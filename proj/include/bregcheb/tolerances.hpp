#ifndef BREGCHEB_TOLERANCES_HPP
#define BREGCHEB_TOLERANCES_HPP

namespace bregcheb {

/// Every numeric threshold used by the library and its test suites.
struct Tolerances {
  double identity_residual = 1e-9;   // three/four-point identities, Fenchel-Young
  double nonneg_slack = 1e-12;       // D(x, y) >= -slack
  double argmax_rel = 1e-9;          // Q_C(x): D >= value * (1 - rel) - abs
  double argmax_abs = 1e-12;
  double vertex_dedup = 1e-10;       // subdifferential vertex merging
  double simplex = 1e-10;            // weights on the simplex
  double projection_inequality = 1e-8;
  double gap = 1e-6;                 // certificate membership gap
  double symmetry_rel = 1e-12;       // quadratic matrix symmetry
};

inline constexpr Tolerances kTolerances{};

}  // namespace bregcheb

#endif  // BREGCHEB_TOLERANCES_HPP
