#pragma once

#include <string>
#include <utility>

namespace mubcert {

/// Where a point (lambda, mu) sits relative to the compatibility region C_d.
enum class RegionClass {
    interior,
    on_gamma_arc,       ///< extreme point on the elliptical arc (the circle when d = 2)
    vertex,             ///< the exceptional extreme point (1/(1-d), 1/(1-d)), d >= 3
    boundary_segment,   ///< on one of the two straight boundary edges, d >= 3
    outside_region,
    outside_box,        ///< outside the parameter square [1/(1-d), 1]^2
};

const char* region_class_name(RegionClass c);

struct RegionPoint {
    double lambda = 0.0;
    double mu = 0.0;
    RegionClass cls = RegionClass::outside_box;
    double ellipse_residual = 0.0;  ///< Q(lambda, mu) - (4 - d), or the circle residual for d = 2
    double chord_value = 0.0;       ///< (d-1)(lambda+mu) - (d-3)
    bool inside = false;            ///< member of C_d (boundary included)
};

/// Q(lambda, mu) = d(l^2 + m^2) + 2(d-2) l m - 2(d-2)(l + m); the arc is the
/// part of Q = 4-d with (d-1)(l+m) >= d-3. For d = 2 the residual reported is
/// lambda^2 + mu^2 - 1.
double ellipse_residual(int d, double lambda, double mu);

/// Classifies a point against C_d. Membership for d >= 3 is the convex hull of
/// the arc and the vertex: inside the box and (inside the ellipse or below the
/// chord through the arc endpoints). For d = 2, the unit disk.
RegionPoint region_contains(int d, double lambda, double mu);

/// True iff (lambda, mu) lies on the arc Gamma_d within the geometric
/// tolerance (residual 1e-9, half-plane slack -1e-9).
bool on_gamma(int d, double lambda, double mu);

/// The two parametrizations of Gamma_d: branch 'A' maps nu -> (nu, gamma_nu),
/// branch 'B' maps nu -> (gamma_nu, nu). Requires d >= 3 and nu in [1/(1-d), 1].
std::pair<double, double> gamma_parametrize(int d, double nu, char branch);

/// The symmetric arc point lambda = mu = (d - 2 + sqrt(d)) / (2(d-1)); equals
/// 1/sqrt(2) at d = 2.
double symmetric_arc_point(int d);

}  // namespace mubcert
