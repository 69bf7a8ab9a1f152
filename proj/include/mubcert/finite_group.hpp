#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "mubcert/common.hpp"

namespace mubcert {

/// Finite abelian group Z_{n_1} x ... x Z_{n_k}. Elements are enumerated in
/// lexicographic order over coordinate tuples (first coordinate most
/// significant), which fixes all outcome labelings downstream.
struct AbelianGroup {
    std::vector<long long> factors;
    long long order = 1;
};

struct GroupElement {
    std::vector<long long> coords;

    bool operator==(const GroupElement& o) const { return coords == o.coords; }
};

AbelianGroup make_group(const std::vector<long long>& factors);

/// Parses a CLI group spec such as "2,4" into make_group({2,4}).
AbelianGroup parse_group_spec(const std::string& spec);
std::string group_label(const AbelianGroup& g);

GroupElement zero_element(const AbelianGroup& g);
GroupElement element_at(const AbelianGroup& g, long long index);
long long index_of(const AbelianGroup& g, const GroupElement& x);

GroupElement add(const AbelianGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement negate(const AbelianGroup& g, const GroupElement& x);
GroupElement subtract(const AbelianGroup& g, const GroupElement& x, const GroupElement& y);

/// Canonical non-degenerate symmetric bicharacter
///   <x,y> = exp(2 pi i  sum_j x_j y_j / n_j).
/// The phase is accumulated as an exact rational multiple of 2 pi before the
/// single trigonometric evaluation, so unbiasedness residuals stay near
/// machine epsilon even for products of many factors.
std::complex<double> pairing(const AbelianGroup& g, const GroupElement& x, const GroupElement& y);

using PairingFn = std::function<std::complex<double>(const AbelianGroup&, const GroupElement&,
                                                     const GroupElement&)>;

/// Exhaustively verifies (i) symmetry, (ii) biadditivity and (iii)
/// non-degeneracy of a bicharacter (the canonical one unless fn is supplied).
ValidationReport verify_bicharacter(const AbelianGroup& g, double tol, const PairingFn& fn = {});

/// Verifies the character orthogonality relations
///   sum_z <x - y, z> = d * delta_{x,y}   for all x, y.
ValidationReport orthogonality_check(const AbelianGroup& g, double tol);

}  // namespace mubcert
