#include "mubcert/finite_group.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace mubcert {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_element(const AbelianGroup& g, const GroupElement& x, const char* who) {
    if (x.coords.size() != g.factors.size()) {
        std::ostringstream msg;
        msg << who << ": element arity " << x.coords.size() << " does not match group arity "
            << g.factors.size();
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

AbelianGroup make_group(const std::vector<long long>& factors) {
    if (factors.empty()) throw std::invalid_argument("make_group: factor list is empty");
    AbelianGroup g;
    g.factors = factors;
    g.order = 1;
    for (long long n : factors) {
        if (n < 1) throw std::invalid_argument("make_group: factors must be positive");
        g.order *= n;
    }
    return g;
}

AbelianGroup parse_group_spec(const std::string& spec) {
    std::vector<long long> factors;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long n = 0;
        try {
            n = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_group_spec: '" + item + "' is not an integer");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("parse_group_spec: trailing junk in '" + item + "'");
        factors.push_back(n);
    }
    return make_group(factors);
}

std::string group_label(const AbelianGroup& g) {
    std::string s = "Z";
    for (size_t j = 0; j < g.factors.size(); ++j) {
        s += std::to_string(g.factors[j]);
        if (j + 1 < g.factors.size()) s += "xZ";
    }
    return s;
}

GroupElement zero_element(const AbelianGroup& g) {
    return GroupElement{std::vector<long long>(g.factors.size(), 0)};
}

GroupElement element_at(const AbelianGroup& g, long long index) {
    if (index < 0 || index >= g.order) throw std::out_of_range("element_at: index out of range");
    GroupElement x = zero_element(g);
    for (size_t j = g.factors.size(); j-- > 0;) {
        x.coords[j] = index % g.factors[j];
        index /= g.factors[j];
    }
    return x;
}

long long index_of(const AbelianGroup& g, const GroupElement& x) {
    require_element(g, x, "index_of");
    long long idx = 0;
    for (size_t j = 0; j < g.factors.size(); ++j) idx = idx * g.factors[j] + x.coords[j];
    return idx;
}

GroupElement add(const AbelianGroup& g, const GroupElement& x, const GroupElement& y) {
    require_element(g, x, "add");
    require_element(g, y, "add");
    GroupElement z = zero_element(g);
    for (size_t j = 0; j < g.factors.size(); ++j)
        z.coords[j] = (x.coords[j] + y.coords[j]) % g.factors[j];
    return z;
}

GroupElement negate(const AbelianGroup& g, const GroupElement& x) {
    require_element(g, x, "negate");
    GroupElement z = zero_element(g);
    for (size_t j = 0; j < g.factors.size(); ++j)
        z.coords[j] = (g.factors[j] - x.coords[j]) % g.factors[j];
    return z;
}

GroupElement subtract(const AbelianGroup& g, const GroupElement& x, const GroupElement& y) {
    return add(g, x, negate(g, y));
}

std::complex<double> pairing(const AbelianGroup& g, const GroupElement& x, const GroupElement& y) {
    require_element(g, x, "pairing");
    require_element(g, y, "pairing");
    // Common denominator L = lcm(n_j); the phase fraction is (num mod L) / L.
    long long lcm = 1;
    for (long long n : g.factors) lcm = std::lcm(lcm, n);
    long long num = 0;
    for (size_t j = 0; j < g.factors.size(); ++j) {
        const long long term = ((x.coords[j] * y.coords[j]) % g.factors[j]) * (lcm / g.factors[j]);
        num = (num + term) % lcm;
    }
    const double angle = kTwoPi * static_cast<double>(num) / static_cast<double>(lcm);
    return {std::cos(angle), std::sin(angle)};
}

ValidationReport verify_bicharacter(const AbelianGroup& g, double tol, const PairingFn& fn) {
    const PairingFn pair_fn =
        fn ? fn
           : PairingFn([](const AbelianGroup& gg, const GroupElement& a, const GroupElement& b) {
                 return pairing(gg, a, b);
             });

    ValidationReport report;
    const long long d = g.order;

    double mod_dev = 0.0, sym_dev = 0.0;
    for (long long i = 0; i < d; ++i) {
        const GroupElement x = element_at(g, i);
        for (long long j = 0; j < d; ++j) {
            const GroupElement y = element_at(g, j);
            const auto p = pair_fn(g, x, y);
            mod_dev = std::max(mod_dev, std::abs(std::abs(p) - 1.0));
            sym_dev = std::max(sym_dev, std::abs(p - pair_fn(g, y, x)));
        }
    }
    report.checks.push_back({"unit-modulus", mod_dev <= tol, mod_dev});
    report.checks.push_back({"symmetry", sym_dev <= tol, sym_dev});

    double biadd_dev = 0.0;
    for (long long i = 0; i < d; ++i)
        for (long long j = 0; j < d; ++j)
            for (long long k = 0; k < d; ++k) {
                const GroupElement x1 = element_at(g, i);
                const GroupElement x2 = element_at(g, j);
                const GroupElement y = element_at(g, k);
                const auto lhs = pair_fn(g, add(g, x1, x2), y);
                const auto rhs = pair_fn(g, x1, y) * pair_fn(g, x2, y);
                biadd_dev = std::max(biadd_dev, std::abs(lhs - rhs));
            }
    report.checks.push_back({"biadditivity", biadd_dev <= tol, biadd_dev});

    // Non-degeneracy: x -> <x,.> is injective, i.e. no x != 0 pairs trivially
    // with every y. (For a biadditive map on a finite group, injectivity of a
    // homomorphism into the dual is equivalent to trivial kernel.)
    bool nondegenerate = true;
    double kernel_dev = 1.0;  // smallest max_y |<x,y> - 1| over x != 0
    for (long long i = 1; i < d; ++i) {
        const GroupElement x = element_at(g, i);
        double worst = 0.0;
        for (long long j = 0; j < d; ++j) {
            const GroupElement y = element_at(g, j);
            worst = std::max(worst, std::abs(pair_fn(g, x, y) - 1.0));
        }
        kernel_dev = std::min(kernel_dev, worst);
        if (worst <= tol) nondegenerate = false;
    }
    if (d == 1) kernel_dev = 1.0;  // trivial group: nothing to distinguish
    report.checks.push_back({"non-degeneracy", nondegenerate, nondegenerate ? 0.0 : kernel_dev});
    return report;
}

ValidationReport orthogonality_check(const AbelianGroup& g, double tol) {
    ValidationReport report;
    const long long d = g.order;
    double diag_dev = 0.0, off_dev = 0.0;
    for (long long i = 0; i < d; ++i)
        for (long long j = 0; j < d; ++j) {
            const GroupElement w = subtract(g, element_at(g, i), element_at(g, j));
            std::complex<double> sum = 0.0;
            for (long long k = 0; k < d; ++k) sum += pairing(g, w, element_at(g, k));
            if (i == j)
                diag_dev = std::max(diag_dev, std::abs(sum - static_cast<double>(d)));
            else
                off_dev = std::max(off_dev, std::abs(sum));
        }
    report.checks.push_back({"diagonal-sum-d", diag_dev <= tol, diag_dev});
    report.checks.push_back({"offdiagonal-sum-zero", off_dev <= tol, off_dev});
    return report;
}

}  // namespace mubcert
