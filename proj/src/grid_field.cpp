#include "kdv/grid_field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kdv {

namespace {

void validate_shape(double dx, int nx, double dt, int nt) {
    if (!(dx > 0.0) || !(dt > 0.0)) {
        throw std::invalid_argument("GridField: spacings must be positive");
    }
    if (nx < 1 || nt < 1) {
        throw std::invalid_argument("GridField: grid must be nonempty");
    }
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

double GridField::max_abs() const {
    double m = 0.0;
    for (const double v : values) m = std::max(m, std::abs(v));
    return m;
}

GridField GridField::coarsen() const {
    if (nx % 2 == 0 || nt % 2 == 0) {
        throw std::invalid_argument("GridField::coarsen: nx and nt must be odd");
    }
    GridField coarse = zeros(x0, 2.0 * dx, (nx + 1) / 2, t0, 2.0 * dt, (nt + 1) / 2);
    for (int ix = 0; ix < coarse.nx; ++ix) {
        for (int it = 0; it < coarse.nt; ++it) {
            coarse.at(ix, it) = at(2 * ix, 2 * it);
        }
    }
    return coarse;
}

GridField GridField::zeros(double x0, double dx, int nx, double t0, double dt, int nt) {
    validate_shape(dx, nx, dt, nt);
    GridField field;
    field.x0 = x0;
    field.dx = dx;
    field.nx = nx;
    field.t0 = t0;
    field.dt = dt;
    field.nt = nt;
    field.values.assign(static_cast<size_t>(nx) * nt, 0.0);
    return field;
}

GridField GridField::sample(double x0, double dx, int nx, double t0, double dt, int nt,
                            const std::function<double(double, double)>& f) {
    GridField field = zeros(x0, dx, nx, t0, dt, nt);
    for (int ix = 0; ix < nx; ++ix) {
        for (int it = 0; it < nt; ++it) {
            const double v = f(field.x(ix), field.t(it));
            if (!std::isfinite(v)) {
                throw std::runtime_error("GridField::sample: non-finite value at (x=" +
                                         std::to_string(field.x(ix)) +
                                         ", t=" + std::to_string(field.t(it)) + ")");
            }
            field.at(ix, it) = v;
        }
    }
    return field;
}

void write_grid_csv(const GridField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_grid_csv: cannot open " + path);
    out << format_value(field.x0) << ',' << format_value(field.dx) << ',' << field.nx << ','
        << format_value(field.t0) << ',' << format_value(field.dt) << ',' << field.nt << '\n';
    for (int ix = 0; ix < field.nx; ++ix) {
        for (int it = 0; it < field.nt; ++it) {
            if (it > 0) out << ',';
            out << format_value(field.at(ix, it));
        }
        out << '\n';
    }
}

GridField read_grid_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_grid_csv: cannot open " + path);

    const auto next_field = [](std::stringstream& line, const std::string& context) {
        std::string cell;
        if (!std::getline(line, cell, ',')) {
            throw std::runtime_error("read_grid_csv: truncated " + context);
        }
        return std::stod(cell);
    };

    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("read_grid_csv: empty file");
    std::stringstream hs(header);
    const double x0 = next_field(hs, "header");
    const double dx = next_field(hs, "header");
    const int nx = static_cast<int>(next_field(hs, "header"));
    const double t0 = next_field(hs, "header");
    const double dt = next_field(hs, "header");
    const int nt = static_cast<int>(next_field(hs, "header"));

    GridField field = GridField::zeros(x0, dx, nx, t0, dt, nt);
    for (int ix = 0; ix < nx; ++ix) {
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("read_grid_csv: missing rows");
        std::stringstream ls(line);
        for (int it = 0; it < nt; ++it) {
            field.at(ix, it) = next_field(ls, "row " + std::to_string(ix));
        }
    }
    return field;
}

std::string grid_to_json_text(const GridField& field) {
    nlohmann::json doc;
    doc["x0"] = field.x0;
    doc["dx"] = field.dx;
    doc["nx"] = field.nx;
    doc["t0"] = field.t0;
    doc["dt"] = field.dt;
    doc["nt"] = field.nt;
    doc["values"] = field.values;
    return doc.dump();
}

GridField grid_from_json_text(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    GridField field = GridField::zeros(doc.at("x0"), doc.at("dx"), doc.at("nx"), doc.at("t0"),
                                       doc.at("dt"), doc.at("nt"));
    const auto& values = doc.at("values");
    if (values.size() != field.values.size()) {
        throw std::runtime_error("grid_from_json_text: values length mismatch");
    }
    field.values = values.get<std::vector<double>>();
    return field;
}

}  // namespace kdv
