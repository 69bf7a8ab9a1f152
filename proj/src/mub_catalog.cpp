#include "mubcert/mub_catalog.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mubcert {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

ComplexMatrix scaled(int d, const std::vector<std::vector<cdouble>>& rows) {
    ComplexMatrix m(d, d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = s * rows[i][j];
    return m;
}

int read_sign(const std::vector<double>& params, const char* id) {
    if (params.empty()) return +1;
    if (params[0] == 1.0 || params[0] == -1.0) return static_cast<int>(params[0]);
    throw std::invalid_argument(std::string(id) + ": sign parameter must be +1 or -1");
}

}  // namespace

MubPair fourier_mub(const AbelianGroup& g) {
    const int d = static_cast<int>(g.order);
    ComplexMatrix h(d, d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int x = 0; x < d; ++x) {
        const GroupElement ex = element_at(g, x);
        for (int y = 0; y < d; ++y)
            h(x, y) = s * pairing(g, ex, element_at(g, y));
    }
    return MubPair{d, std::move(h), "fourier-" + group_label(g)};
}

MubPair hadamard_to_mub(const ComplexMatrix& h, const std::string& label, const Tolerances& tol) {
    if (!h.square()) throw std::invalid_argument("hadamard_to_mub: matrix is not square");
    MubPair pair{h.rows(), h, label};
    const ValidationReport report = validate_mub(pair, tol);
    if (!report.pass()) {
        std::ostringstream msg;
        msg << "hadamard_to_mub: '" << label << "' is not a complex Hadamard matrix:";
        const int d = h.rows();
        const double target = 1.0 / std::sqrt(static_cast<double>(d));
        for (const auto& c : report.checks)
            if (!c.pass) msg << " [" << c.name << " deviation " << c.deviation << "]";
        // Locate the worst entry for the diagnostics the caller sees.
        double worst = 0.0;
        int wi = 0, wj = 0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const double dev = std::abs(std::abs(h(i, j)) - target);
                if (dev > worst) { worst = dev; wi = i; wj = j; }
            }
        msg << " worst entry (" << wi << "," << wj << ") |H| = " << std::abs(h(wi, wj))
            << " expected " << target;
        throw std::invalid_argument(msg.str());
    }
    return pair;
}

ComplexMatrix family_f4(double a) {
    a = std::fmod(a, kPi);
    if (a < 0) a += kPi;
    const cdouble i(0.0, 1.0);
    const cdouble p = i * std::polar(1.0, a);  // i * e^{ia}
    return scaled(4, {{1, 1, 1, 1},
                      {1, p, -1, -p},
                      {1, -1, 1, -1},
                      {1, -p, -1, p}});
}

ComplexMatrix d6_m1(double a) {
    a = std::fmod(a, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    const cdouble i(0.0, 1.0);
    const cdouble e = std::polar(1.0, a);
    const cdouble eb = std::conj(e);
    return scaled(6, {{1, 1, 1, 1, 1, 1},
                      {1, -1, i, -i, -i, i},
                      {1, i, -1, i * e, -i * e, -i},
                      {1, -i, i * eb, -1, i, -i * eb},
                      {1, -i, -i * eb, i, -1, i * eb},
                      {1, i, -i, -i * e, i * e, -1}});
}

ComplexMatrix d6_m2(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("d6_m2: sign must be +1 or -1");
    const cdouble w(0.5 * (1.0 - std::sqrt(3.0)), 0.5 * sign * std::pow(12.0, 0.25));
    const cdouble wb = std::conj(w);
    const cdouble w2 = w * w, w3 = w2 * w;
    const cdouble wb2 = wb * wb, wb3 = wb2 * wb;
    return scaled(6, {{1, 1, 1, 1, 1, 1},
                      {1, -1, -w, -w2, w2, w},
                      {1, -wb, 1, w2, -w3, w2},
                      {1, -wb2, wb2, -1, w2, -w2},
                      {1, wb2, -wb3, wb2, 1, -w},
                      {1, wb, wb2, -wb2, -wb, -1}});
}

ComplexMatrix d6_m3() {
    const cdouble w = std::polar(1.0, 2.0 * kPi / 3.0);
    const cdouble w2 = w * w;
    return scaled(6, {{1, 1, 1, 1, 1, 1},
                      {1, 1, w, w, w2, w2},
                      {1, w, 1, w2, w2, w},
                      {1, w, w2, 1, w, w2},
                      {1, w2, w2, w, 1, w},
                      {1, w2, w, w2, w, 1}});
}

ComplexMatrix d7_m1() {
    const cdouble w = std::polar(1.0, kPi / 3.0);
    const cdouble w2 = w * w, w3 = w2 * w, w4 = w3 * w, w5 = w4 * w;
    return scaled(7, {{1, 1, 1, 1, 1, 1, 1},
                      {1, w, w4, w5, w3, w3, w},
                      {1, w4, w, w3, w5, w3, w},
                      {1, w5, w3, w, w4, w, w3},
                      {1, w3, w5, w4, w, w, w3},
                      {1, w3, w3, w, w, w4, w5},
                      {1, w, w, w3, w3, w5, w4}});
}

ComplexMatrix d7_m2(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("d7_m2: sign must be +1 or -1");
    const cdouble w(-0.75, 0.25 * sign * std::sqrt(7.0));
    const cdouble wb = std::conj(w);
    const cdouble w2 = w * w;
    return scaled(7, {{1, 1, 1, 1, 1, 1, 1},
                      {1, w, 1, wb, w, wb, 1},
                      {1, w, w, wb, 1, 1, wb},
                      {1, w2, w2, w, w, 1, w},
                      {1, 1, w, 1, w, wb, wb},
                      {1, w2, w, w, w2, w, 1},
                      {1, w, w2, 1, w2, w, w}});
}

std::vector<std::string> catalog_ids() {
    return {"d4-f4", "d6-m1", "d6-m2", "d6-m3", "d7-m1", "d7-m2"};
}

bool catalog_is_parametric(const std::string& id) { return id == "d4-f4" || id == "d6-m1"; }

ComplexMatrix table1_matrix(const std::string& id, const std::vector<double>& params) {
    if (id == "d4-f4") {
        if (params.empty()) throw std::invalid_argument("d4-f4 requires the angle parameter a");
        return family_f4(params[0]);
    }
    if (id == "d6-m1") {
        if (params.empty()) throw std::invalid_argument("d6-m1 requires the angle parameter a");
        return d6_m1(params[0]);
    }
    if (id == "d6-m2") return d6_m2(read_sign(params, "d6-m2"));
    if (id == "d6-m3") return d6_m3();
    if (id == "d7-m1") return d7_m1();
    if (id == "d7-m2") return d7_m2(read_sign(params, "d7-m2"));
    throw std::out_of_range("table1_matrix: unknown catalog id '" + id +
                            "' (known: d4-f4, d6-m1, d6-m2, d6-m3, d7-m1, d7-m2)");
}

ValidationReport validate_mub(const MubPair& pair, const Tolerances& tol) {
    ValidationReport report;
    const int d = pair.d;
    const double target = 1.0 / std::sqrt(static_cast<double>(d));

    double mod_dev = 0.0;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            mod_dev = std::max(mod_dev, std::abs(std::abs(pair.H(x, y)) - target));
    report.checks.push_back({"unbiasedness", mod_dev <= tol.match, mod_dev});

    const double uni_dev = (pair.H.adjoint() * pair.H - ComplexMatrix::identity(d)).max_abs();
    report.checks.push_back({"unitarity", uni_dev <= tol.match, uni_dev});
    return report;
}

ComplexMatrix load_hadamard(const std::string& path, std::string* label_out) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_hadamard: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("load_hadamard: parse error in '" + path + "': " + e.what());
    }
    if (!j.contains("d") || !j.contains("entries"))
        throw std::invalid_argument("load_hadamard: missing 'd' or 'entries' field");
    const int d = j.at("d").get<int>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
        throw std::invalid_argument("load_hadamard: matrix is not square (row count != d)");
    ComplexMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != d) {
            std::ostringstream msg;
            msg << "load_hadamard: row " << i << " has " << row.size() << " entries, expected "
                << d;
            throw std::invalid_argument(msg.str());
        }
        for (int k = 0; k < d; ++k) {
            const auto& cell = row.at(k);
            if (!cell.is_array() || cell.size() != 2) {
                std::ostringstream msg;
                msg << "load_hadamard: entry (" << i << "," << k << ") is not an [re, im] pair";
                throw std::invalid_argument(msg.str());
            }
            m(i, k) = cdouble(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
    }
    if (label_out) *label_out = j.value("label", std::string{});
    return m;
}

void save_hadamard(const ComplexMatrix& m, const std::string& label, const std::string& path) {
    if (!m.square()) throw std::invalid_argument("save_hadamard: matrix is not square");
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("save_hadamard: cannot open '" + path + "' for writing");
    // Written by hand so every real carries 17 significant digits; that is
    // enough for the load/save round trip to be bit-exact.
    char buf[64];
    out << "{\n  \"d\": " << m.rows() << ",\n  \"label\": "
        << nlohmann::json(label).dump() << ",\n  \"entries\": [\n";
    for (int i = 0; i < m.rows(); ++i) {
        out << "    [";
        for (int j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", m(i, j).real(), m(i, j).imag());
            out << buf << (j + 1 < m.cols() ? ", " : "");
        }
        out << "]" << (i + 1 < m.rows() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
}

}  // namespace mubcert
