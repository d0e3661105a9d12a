#include "kdv/spectral_measure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace kdv {

void SpectralMeasure::validate() const {
    for (const auto& atom : atoms) {
        if (!(atom.kappa > 0.0)) {
            throw std::invalid_argument("SpectralMeasure: atom wavenumbers must be positive");
        }
        if (!(atom.weight >= 0.0)) {
            throw std::invalid_argument("SpectralMeasure: atom weights must be nonnegative");
        }
    }
    if (density.has_value()) {
        if (!(density->lo > 0.0) || !(density->lo < density->hi)) {
            throw std::invalid_argument(
                "SpectralMeasure: density support must satisfy 0 < lo < hi");
        }
        if (!density->density) {
            throw std::invalid_argument("SpectralMeasure: density function missing");
        }
    }
}

SpectralMeasure measure_from_atoms(std::vector<MeasureAtom> atoms) {
    SpectralMeasure mu;
    mu.atoms = std::move(atoms);
    mu.validate();
    return mu;
}

namespace {

SpectralMeasure with_density(MeasureDensity density, std::vector<MeasureAtom> atoms,
                             int nodes) {
    density.rule = map_to_interval(gauss_rule(nodes), density.lo, density.hi);
    SpectralMeasure mu;
    mu.atoms = std::move(atoms);
    mu.density = std::move(density);
    mu.validate();
    return mu;
}

}  // namespace

SpectralMeasure measure_with_uniform_density(double lo, double hi, double height, int nodes,
                                             std::vector<MeasureAtom> atoms) {
    if (!(height >= 0.0)) {
        throw std::invalid_argument("measure_with_uniform_density: height must be nonnegative");
    }
    MeasureDensity d;
    d.density = [height](double) { return height; };
    d.lo = lo;
    d.hi = hi;
    d.family = "uniform";
    d.param = height;
    return with_density(std::move(d), std::move(atoms), nodes);
}

SpectralMeasure measure_with_cauchy_window(double lo, double hi, double gamma, int nodes,
                                           std::vector<MeasureAtom> atoms) {
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("measure_with_cauchy_window: gamma must be positive");
    }
    MeasureDensity d;
    d.density = [gamma](double kappa) {
        return gamma / (std::numbers::pi * (kappa * kappa + gamma * gamma));
    };
    d.lo = lo;
    d.hi = hi;
    d.family = "cauchy-window";
    d.param = gamma;
    return with_density(std::move(d), std::move(atoms), nodes);
}

std::vector<MeasureAtom> discretize_measure(const SpectralMeasure& mu) {
    mu.validate();
    std::vector<MeasureAtom> nodes = mu.atoms;
    if (mu.density.has_value()) {
        const auto& d = *mu.density;
        for (int i = 0; i < d.rule.size(); ++i) {
            const double kappa = d.rule.nodes[i];
            nodes.push_back({kappa, d.rule.weights[i] * d.density(kappa)});
        }
    }
    return nodes;
}

SpectralMeasure measure_from_json_text(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<MeasureAtom> atoms;
    if (doc.contains("atoms")) {
        for (const auto& entry : doc.at("atoms")) {
            atoms.push_back({entry.at("kappa").get<double>(), entry.at("m").get<double>()});
        }
    }
    if (!doc.contains("density")) {
        return measure_from_atoms(std::move(atoms));
    }

    const auto& dj = doc.at("density");
    const std::string family = dj.at("family").get<std::string>();
    const double lo = dj.at("support").at(0).get<double>();
    const double hi = dj.at("support").at(1).get<double>();
    const int nodes = dj.value("nodes", 32);
    if (family == "uniform") {
        return measure_with_uniform_density(lo, hi, dj.value("height", 1.0), nodes,
                                            std::move(atoms));
    }
    if (family == "cauchy-window") {
        return measure_with_cauchy_window(lo, hi, dj.at("gamma").get<double>(), nodes,
                                          std::move(atoms));
    }
    throw std::invalid_argument("measure_from_json_text: unknown density family '" + family +
                                "'");
}

std::string measure_to_json_text(const SpectralMeasure& mu) {
    nlohmann::json doc;
    doc["atoms"] = nlohmann::json::array();
    for (const auto& atom : mu.atoms) {
        doc["atoms"].push_back({{"kappa", atom.kappa}, {"m", atom.weight}});
    }
    if (mu.density.has_value()) {
        const auto& d = *mu.density;
        if (d.family == "custom") {
            throw std::invalid_argument("measure_to_json_text: custom densities are not serializable");
        }
        nlohmann::json dj;
        dj["family"] = d.family;
        dj["support"] = {d.lo, d.hi};
        dj["nodes"] = d.rule.size();
        if (d.family == "uniform") {
            dj["height"] = d.param;
        } else {
            dj["gamma"] = d.param;
        }
        doc["density"] = dj;
    }
    return doc.dump();
}

}  // namespace kdv
