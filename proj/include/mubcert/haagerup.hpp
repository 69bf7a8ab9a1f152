#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mubcert/common.hpp"
#include "mubcert/finite_group.hpp"
#include "mubcert/mub_catalog.hpp"
#include "mubcert/numerics.hpp"

namespace mubcert {

struct Cluster {
    double value = 0.0;     ///< representative (mean of the clustered eigenvalues)
    int multiplicity = 0;
};

/// Eigenvalue data of the d^2 x d^2 matrix Lambda for one MUB pair.
struct HaagerupSpectrum {
    std::string label;
    int d = 0;
    std::vector<double> eigenvalues;  ///< ascending, d^2 entries
    std::vector<Cluster> clusters;
    double nearest_to_minus_one = 0.0;  ///< min_i |lambda_i + 1|
};

/// The d^2 x d^2 real symmetric matrix with entries
///   Lambda_{(x,y),(z,t)} = d * Re( conj(H[z][y]) H[z][t] conj(H[x][t]) H[x][y] ),
/// rows and columns indexed by (x,y) -> x*d + y.
RealSymmetricMatrix haagerup_matrix(const MubPair& pair);

/// Eigendecomposition of haagerup_matrix(pair) with single-linkage clustering
/// at gap tol.cluster.
HaagerupSpectrum spectrum(const MubPair& pair, const Tolerances& tol = {});

struct MinusOneTest {
    bool present = false;
    double distance = 0.0;
};

/// True iff some eigenvalue lies within tol.cluster of -1; always reports the
/// achieved distance.
MinusOneTest has_minus_one(const HaagerupSpectrum& spec, const Tolerances& tol = {});

/// For a Fourier-conjugate pair the spectrum is known in closed form:
/// the multiset { Re <r,s> : r,s in the group }. No matrix is built.
HaagerupSpectrum fourier_spectrum_closed_form(const AbelianGroup& g, const Tolerances& tol = {});

/// Single-linkage clustering of an ascending eigenvalue list: a new cluster
/// starts whenever the gap between consecutive values exceeds `gap`.
std::vector<Cluster> cluster_eigenvalues(const std::vector<double>& ascending, double gap);

nlohmann::json spectrum_to_json(const HaagerupSpectrum& spec, const Tolerances& tol = {});

/// Expected reference clusters for a catalog entry, as transcribed closed forms.
/// For "d7-m1" the list covers only the 11 closed-form clusters; the remaining
/// four 3-fold clusters are characterized by quartic_residual() instead.
struct Table1Expectation {
    std::vector<Cluster> clusters;  ///< ascending by value
    bool has_quartic_clusters = false;
};

Table1Expectation table1_expected(const std::string& id, double a = 0.0);

/// p(x) = 19208 x^4 + 15092 x^3 - 12642 x^2 - 6167 x + 3031, whose roots are
/// the four remaining 3-fold eigenvalues of the d=7 first catalog entry.
double quartic_residual(double x);

}  // namespace mubcert
