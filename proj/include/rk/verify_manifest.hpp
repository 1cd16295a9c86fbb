#pragma once

#include <array>
#include <stdexcept>
#include <string_view>

namespace rk {

/// Single source of truth for the verification-suite tolerances. Each check
/// looks its tolerance up here by name; no call site carries its own number.
struct CheckSpec {
  std::string_view name;
  double tolerance;
  std::string_view anchor;  // the claim the check exercises
};

inline constexpr std::array<CheckSpec, 15> kVerifyManifest = {{
    {"table1.cameron_martin_min", 0.0, "indicator-family kernel equals min(x,y)"},
    {"table1.polynomial_affine", 1e-12, "affine-basis kernel equals x.y + 1"},
    {"table1.gaussian_quadrature", 1e-8, "gaussian-family kernel equals exp(-(x-y)^2/4)"},
    {"basis_roundtrip.carleman_agrees", 1e-10,
     "basis-sum and carleman recipes agree on an orthonormal family"},
    {"basis_roundtrip.constant_kernel", 0.0, "single constant basis function gives K == 1"},
    {"positivity.min", 1e-10, "min kernel Gram is PSD on samples"},
    {"positivity.gaussian", 1e-10, "gaussian kernel Gram is PSD on samples"},
    {"positivity.polynomial", 1e-10, "linear-plus-one kernel Gram is PSD on samples"},
    {"positivity.constant", 1e-10, "constant kernel Gram is rank-one PSD"},
    {"positivity.indicator_equal", 1e-10, "indicator-equal kernel Gram is the identity"},
    {"positivity.tanh_violation", 1e-6,
     "tanh kernel admits a negative-eigenvalue witness"},
    {"subduality.pairing_kernel_consistency", 0.0,
     "derivative pairing of min sections reproduces min(x,y)"},
    {"subduality.p2_hilbert_collapse", 1e-12,
     "p = 2 pairing matches the RKHS inner product"},
    {"subduality.holder_bounds", 0.0, "|f(x)| <= x^{1/q} ||f'||_p for all sampled f, x, p"},
    {"subduality.roundtrip", 1e-12,
     "expansion <-> derivative interconversion preserves evaluation"},
}};

inline const CheckSpec& check_spec(std::string_view name) {
  for (const auto& c : kVerifyManifest)
    if (c.name == name) return c;
  throw std::logic_error("no manifest entry for check: " + std::string(name));
}

}  // namespace rk
