#pragma once

#include <string>
#include <vector>

#include "mubcert/common.hpp"
#include "mubcert/complex_matrix.hpp"
#include "mubcert/finite_group.hpp"

namespace mubcert {

/// A pair of mutually unbiased bases, stored through the transition matrix
/// H[x][y] = <phi_x | psi_y>. By convention the first basis is the standard
/// basis, so the second basis vector psi_y has coordinates (psi_y)_x = H[x][y].
struct MubPair {
    int d = 0;
    ComplexMatrix H;
    std::string label;
};

/// Fourier-conjugate pair H[x][y] = <x,y> / sqrt(d) under the group's
/// canonical bicharacter and element enumeration.
MubPair fourier_mub(const AbelianGroup& g);

/// Wraps an explicit complex Hadamard matrix as a MUB pair, validating that it
/// is unitary with unimodular 1/sqrt(d)-scaled entries. Throws
/// std::invalid_argument with per-entry diagnostics on failure.
MubPair hadamard_to_mub(const ComplexMatrix& h, const std::string& label,
                        const Tolerances& tol = {});

/// The one-parameter d=4 complex Hadamard family, a in [0, pi) (any real a is
/// reduced into that interval).
ComplexMatrix family_f4(double a);

ComplexMatrix d6_m1(double a);      ///< d=6 one-parameter family, a in [0, 2*pi)
ComplexMatrix d6_m2(int sign);      ///< d=6, omega = (1 - sqrt(3) +- i*12^(1/4)) / 2
ComplexMatrix d6_m3();              ///< d=6, omega = exp(2*pi*i/3)
ComplexMatrix d7_m1();              ///< d=7, omega = exp(i*pi/3)
ComplexMatrix d7_m2(int sign);      ///< d=7, omega = (-3 +- i*sqrt(7)) / 4

/// Known catalog ids.
std::vector<std::string> catalog_ids();

/// Looks up a catalog matrix by id. Parametric families ("d4-f4", "d6-m1")
/// require params[0] = a; sign families ("d6-m2", "d7-m2") read an optional
/// params[0] = +-1 (default +1). Unknown ids throw std::out_of_range.
ComplexMatrix table1_matrix(const std::string& id, const std::vector<double>& params = {});

/// True if the id takes an angle parameter.
bool catalog_is_parametric(const std::string& id);

/// Reports the worst deviation of |H[x][y]| from 1/sqrt(d) and of H^dag H from
/// the identity, judged against tol.match.
ValidationReport validate_mub(const MubPair& pair, const Tolerances& tol = {});

/// JSON file schema: { "d": int, "label": string, "entries": [[[re, im], ...], ...] }
/// with the 1/sqrt(d) prefactor included and reals written with 17 significant
/// digits, so save/load round-trips bit-exactly.
ComplexMatrix load_hadamard(const std::string& path, std::string* label_out = nullptr);
void save_hadamard(const ComplexMatrix& m, const std::string& label, const std::string& path);

}  // namespace mubcert
