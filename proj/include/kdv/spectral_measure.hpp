#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kdv/quadrature.hpp"

namespace kdv {

/// One atom of the spectral measure: mass `weight` at wavenumber `kappa`.
struct MeasureAtom {
    double kappa;
    double weight;
};

/// Absolutely continuous part of the measure: a nonnegative density on a
/// compact support [lo, hi] inside (0, inf), integrated by a fixed rule.
/// Named families keep the measure serializable; `custom` densities are
/// construction-only.
struct MeasureDensity {
    std::function<double(double)> density;
    double lo = 0.0;
    double hi = 0.0;
    QuadratureRule rule;
    std::string family = "custom";  // "uniform" | "cauchy-window" | "custom"
    double param = 0.0;             // height (uniform) or gamma (cauchy-window)
};

/// Positive measure on (0, inf) generating F(x,t); no mass at 0 by
/// construction (atoms require kappa > 0, densities require lo > 0).
struct SpectralMeasure {
    std::vector<MeasureAtom> atoms;
    std::optional<MeasureDensity> density;

    [[nodiscard]] bool empty() const { return atoms.empty() && !density.has_value(); }
    void validate() const;
};

SpectralMeasure measure_from_atoms(std::vector<MeasureAtom> atoms);

/// Uniform density of the given height on [lo, hi], discretized by `nodes`
/// Gauss points; optional atoms on top.
SpectralMeasure measure_with_uniform_density(double lo, double hi, double height, int nodes,
                                             std::vector<MeasureAtom> atoms = {});

/// Truncated Cauchy window d(kappa) = gamma / (pi (kappa^2 + gamma^2)) on [lo, hi].
SpectralMeasure measure_with_cauchy_window(double lo, double hi, double gamma, int nodes,
                                           std::vector<MeasureAtom> atoms = {});

/// Atoms plus the density collapsed onto its quadrature nodes, as one list of
/// (kappa, weight) pairs. Atoms come first, in input order.
std::vector<MeasureAtom> discretize_measure(const SpectralMeasure& mu);

/// JSON round trip of the structured-text form:
///   {"atoms":[{"kappa":..,"m":..},...],
///    "density":{"family":"uniform","support":[lo,hi],"height":h,"nodes":n}}
/// cauchy-window densities use "gamma" instead of "height". Custom densities
/// are not serializable.
SpectralMeasure measure_from_json_text(const std::string& text);
std::string measure_to_json_text(const SpectralMeasure& mu);

}  // namespace kdv
