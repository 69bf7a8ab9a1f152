#include "mubcert/region.hpp"

#include <cmath>
#include <stdexcept>

#include "mubcert/povm.hpp"

namespace mubcert {

namespace {
constexpr double kGeomTol = 1e-9;
}

const char* region_class_name(RegionClass c) {
    switch (c) {
        case RegionClass::interior: return "interior";
        case RegionClass::on_gamma_arc: return "on_gamma_arc";
        case RegionClass::vertex: return "vertex";
        case RegionClass::boundary_segment: return "boundary_segment";
        case RegionClass::outside_region: return "outside_region";
        case RegionClass::outside_box: return "outside_box";
    }
    return "outside_box";
}

double ellipse_residual(int d, double lambda, double mu) {
    if (d < 2) throw std::invalid_argument("ellipse_residual: d must be >= 2");
    if (d == 2) return lambda * lambda + mu * mu - 1.0;
    const double q = d * (lambda * lambda + mu * mu) + 2.0 * (d - 2) * lambda * mu -
                     2.0 * (d - 2) * (lambda + mu);
    return q - (4.0 - d);
}

RegionPoint region_contains(int d, double lambda, double mu) {
    if (d < 2) throw std::invalid_argument("region_contains: d must be >= 2");
    RegionPoint pt;
    pt.lambda = lambda;
    pt.mu = mu;
    pt.ellipse_residual = ellipse_residual(d, lambda, mu);

    if (d == 2) {
        pt.chord_value = 0.0;
        if (std::abs(lambda) > 1.0 + kGeomTol || std::abs(mu) > 1.0 + kGeomTol) {
            pt.cls = RegionClass::outside_box;
            return pt;
        }
        pt.inside = pt.ellipse_residual <= kGeomTol;
        if (std::abs(pt.ellipse_residual) <= kGeomTol)
            pt.cls = RegionClass::on_gamma_arc;
        else
            pt.cls = pt.inside ? RegionClass::interior : RegionClass::outside_region;
        return pt;
    }

    const double lo = 1.0 / (1.0 - d);
    const double endpoint = (d - 2.0) / (d - 1.0);
    pt.chord_value = (d - 1.0) * (lambda + mu) - (d - 3.0);

    if (lambda < lo - kGeomTol || lambda > 1.0 + kGeomTol || mu < lo - kGeomTol ||
        mu > 1.0 + kGeomTol) {
        pt.cls = RegionClass::outside_box;
        return pt;
    }
    pt.inside = pt.ellipse_residual <= kGeomTol || pt.chord_value <= kGeomTol;

    if (std::abs(lambda - lo) <= kGeomTol && std::abs(mu - lo) <= kGeomTol) {
        pt.cls = RegionClass::vertex;
        return pt;
    }
    if (std::abs(pt.ellipse_residual) <= kGeomTol && pt.chord_value >= -kGeomTol) {
        pt.cls = RegionClass::on_gamma_arc;
        return pt;
    }
    if ((std::abs(lambda - lo) <= kGeomTol && mu <= endpoint + kGeomTol) ||
        (std::abs(mu - lo) <= kGeomTol && lambda <= endpoint + kGeomTol)) {
        pt.cls = RegionClass::boundary_segment;
        return pt;
    }
    pt.cls = pt.inside ? RegionClass::interior : RegionClass::outside_region;
    return pt;
}

bool on_gamma(int d, double lambda, double mu) {
    const RegionPoint pt = region_contains(d, lambda, mu);
    return pt.cls == RegionClass::on_gamma_arc;
}

std::pair<double, double> gamma_parametrize(int d, double nu, char branch) {
    if (d < 3) throw std::invalid_argument("gamma_parametrize: requires d >= 3");
    check_noise_range(nu, d);
    const double g = gamma_nu(nu, d);
    if (branch == 'A' || branch == 'a') return {nu, g};
    if (branch == 'B' || branch == 'b') return {g, nu};
    throw std::invalid_argument("gamma_parametrize: branch must be 'A' or 'B'");
}

double symmetric_arc_point(int d) {
    if (d < 2) throw std::invalid_argument("symmetric_arc_point: d must be >= 2");
    return (d - 2.0 + std::sqrt(static_cast<double>(d))) / (2.0 * (d - 1.0));
}

}  // namespace mubcert
