#pragma once

#include <functional>
#include <string>
#include <vector>

namespace kdv {

/// Scalar samples on a rectangular (x, t) lattice, row-major over x.
struct GridField {
    double x0 = 0.0;
    double dx = 0.0;
    int nx = 0;
    double t0 = 0.0;
    double dt = 0.0;
    int nt = 0;
    std::vector<double> values;  // values[ix * nt + it]

    [[nodiscard]] double x(int ix) const { return x0 + ix * dx; }
    [[nodiscard]] double t(int it) const { return t0 + it * dt; }
    [[nodiscard]] double at(int ix, int it) const { return values[ix * nt + it]; }
    double& at(int ix, int it) { return values[ix * nt + it]; }

    /// Maximum |value| over the field.
    [[nodiscard]] double max_abs() const;

    /// Every other point in both directions (spacings doubled); nx and nt
    /// must be odd so the endpoints are kept.
    [[nodiscard]] GridField coarsen() const;

    static GridField zeros(double x0, double dx, int nx, double t0, double dt, int nt);
    static GridField sample(double x0, double dx, int nx, double t0, double dt, int nt,
                            const std::function<double(double, double)>& f);
};

/// CSV layout: one metadata row `x0,dx,nx,t0,dt,nt`, then nx rows of nt
/// values, all printed with 17 significant digits.
void write_grid_csv(const GridField& field, const std::string& path);
GridField read_grid_csv(const std::string& path);

/// JSON mirror of the same fields with a flat row-major `values` array.
std::string grid_to_json_text(const GridField& field);
GridField grid_from_json_text(const std::string& text);

}  // namespace kdv
