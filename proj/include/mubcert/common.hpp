#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mubcert {

/// Numerical tolerances shared across the library. All matrices handled here
/// are tiny (n <= 144) and well scaled, so the defaults are deliberately tight.
struct Tolerances {
    double eig_residual = 1e-11;  ///< eigenpair residual bound, relative to ||M||
    double cluster      = 1e-7;   ///< eigenvalue clustering / -1-membership width
    double rank         = 1e-9;   ///< relative eigenvalue threshold for rank decisions
    double psd          = 1e-10;  ///< positivity slack for effect operators
    double match        = 1e-10;  ///< entrywise matrix comparison
};

/// Thrown when an iterative kernel fails to converge. Carries diagnostics in
/// the message; callers map it to a distinct exit code.
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    double deviation = 0.0;  ///< worst observed deviation for this check
};

/// Result of a report-only validation pass. Failures are recorded, not thrown.
struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    double max_deviation() const {
        double m = 0.0;
        for (const auto& c : checks) m = std::max(m, c.deviation);
        return m;
    }

    const ValidationCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace mubcert
