// mubcert: spectra, certificates and region data for uniformly noisy MUB pairs.
//
// Exit codes: 0 success / extremal verdict, 1 negative verdict or comparison
// failure, 2 invalid input, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mubcert/extremality.hpp"

using namespace mubcert;

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << text;
}

struct PairSource {
    std::string catalog;
    std::optional<double> param;
    std::string sign = "+";
    std::string group_spec;
    std::string file_path;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--catalog", catalog,
                        "catalog id: d4-f4, d6-m1, d6-m2, d6-m3, d7-m1, d7-m2");
        cmd->add_option("--param", param, "angle parameter a for d4-f4 / d6-m1");
        cmd->add_option("--sign", sign, "sign branch for d6-m2 / d7-m2: + or -")
            ->check(CLI::IsMember({"+", "-"}));
        cmd->add_option("--group", group_spec,
                        "abelian group as comma-separated cyclic factors, e.g. 2,4");
        cmd->add_option("--file", file_path, "Hadamard matrix JSON file");
    }

    int sources_given() const {
        return (catalog.empty() ? 0 : 1) + (group_spec.empty() ? 0 : 1) +
               (file_path.empty() ? 0 : 1);
    }

    std::optional<AbelianGroup> group() const {
        if (group_spec.empty()) return std::nullopt;
        return parse_group_spec(group_spec);
    }

    MubPair resolve() const {
        if (sources_given() != 1)
            throw std::invalid_argument(
                "exactly one pair source required: --catalog, --group or --file");
        MubPair pair = resolve_unchecked();
        if (pair.d > 12)
            throw std::invalid_argument(
                "dimension " + std::to_string(pair.d) +
                " exceeds the supported desk scale (d <= 12; Lambda is d^2 x d^2)");
        return pair;
    }

  private:
    MubPair resolve_unchecked() const {
        if (!catalog.empty()) {
            std::vector<double> params;
            std::string label = catalog;
            if (catalog_is_parametric(catalog)) {
                if (!param)
                    throw std::invalid_argument("catalog id '" + catalog +
                                                "' requires --param");
                params.push_back(*param);
                label += "@a=" + fmt17(*param);
            } else if (catalog == "d6-m2" || catalog == "d7-m2") {
                params.push_back(sign == "-" ? -1.0 : +1.0);
                label += sign;
            }
            return hadamard_to_mub(table1_matrix(catalog, params), label);
        }
        if (!group_spec.empty()) return fourier_mub(parse_group_spec(group_spec));
        std::string label;
        const ComplexMatrix m = load_hadamard(file_path, &label);
        if (label.empty()) label = file_path;
        return hadamard_to_mub(m, label);
    }
};

std::string spectrum_csv(const HaagerupSpectrum& spec, const Tolerances& tol) {
    const auto m1 = has_minus_one(spec, tol);
    std::ostringstream out;
    out << "# label=" << spec.label << " d=" << spec.d
        << " has_minus_one=" << (m1.present ? "true" : "false")
        << " distance_to_minus_one=" << fmt17(m1.distance) << "\n";
    out << "cluster_value,multiplicity\n";
    for (const auto& c : spec.clusters)
        out << fmt17(c.value) << "," << c.multiplicity << "\n";
    return out.str();
}

std::string certificate_csv(const Certificate& cert) {
    std::ostringstream out;
    out << "field,value\n";
    out << "pair_label," << cert.pair_label << "\n";
    out << "d," << cert.d << "\n";
    out << "lambda," << fmt17(cert.lambda) << "\n";
    out << "mu," << fmt17(cert.mu) << "\n";
    out << "verdict," << verdict_name(cert.verdict) << "\n";
    out << "minus_one_distance," << fmt17(cert.minus_one_distance) << "\n";
    out << "gram_rank," << cert.gram_rank_value << "\n";
    out << "oracle_agreement," << (cert.oracle_agreement ? "true" : "false") << "\n";
    for (const auto& r : cert.reasons)
        out << "reason:" << r.code << "," << fmt17(r.value) << "\n";
    return out.str();
}

int cmd_spectrum(const PairSource& source, const Tolerances& tol, const std::string& format,
                 const std::string& out_path) {
    const MubPair pair = source.resolve();
    const HaagerupSpectrum spec = spectrum(pair, tol);
    if (format == "csv")
        write_output(spectrum_csv(spec, tol), out_path);
    else
        write_output(spectrum_to_json(spec, tol).dump(2) + "\n", out_path);
    return 0;
}

struct PointSpec {
    std::optional<double> lambda, mu, arc_param;
    std::string branch = "A";
    bool vertex = false;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--lambda", lambda, "noise parameter of the first observable");
        cmd->add_option("--mu", mu, "noise parameter of the second observable");
        cmd->add_option("--arc-param", arc_param,
                        "arc parametrization value nu in [1/(1-d), 1]");
        cmd->add_option("--branch", branch, "arc branch: A -> (nu, gamma), B -> (gamma, nu)")
            ->check(CLI::IsMember({"A", "B"}));
        cmd->add_flag("--vertex", vertex, "certify the exceptional vertex pair");
    }
};

int cmd_certify(const PairSource& source, const PointSpec& point, bool run_oracle,
                const Tolerances& tol, const std::string& format, const std::string& out_path) {
    const MubPair pair = source.resolve();
    CertifyOptions opts;
    opts.run_oracle = run_oracle;
    opts.tol = tol;

    const int point_specs =
        (point.vertex ? 1 : 0) + (point.arc_param ? 1 : 0) + (point.lambda || point.mu ? 1 : 0);
    if (point_specs != 1)
        throw std::invalid_argument(
            "exactly one point required: --lambda/--mu, --arc-param or --vertex");

    Certificate cert;
    if (point.vertex) {
        cert = certify_vertex(pair, opts);
    } else {
        double lam, mu;
        if (point.arc_param) {
            std::tie(lam, mu) = gamma_parametrize(pair.d, *point.arc_param, point.branch[0]);
        } else {
            if (!point.lambda || !point.mu)
                throw std::invalid_argument("both --lambda and --mu are required");
            lam = *point.lambda;
            mu = *point.mu;
        }

        const RegionPoint pt = region_contains(pair.d, lam, mu);
        if (pt.cls != RegionClass::on_gamma_arc) {
            std::ostringstream msg;
            msg << "point (" << lam << ", " << mu << ") is not on the arc of extreme points"
                << " for d = " << pair.d << " (classification " << region_class_name(pt.cls)
                << ", ellipse residual " << pt.ellipse_residual << ")";
            if (pt.cls == RegionClass::vertex) msg << "; use --vertex for the vertex pair";
            throw std::invalid_argument(msg.str());
        }

        if (pair.d == 2) {
            cert = certify_qubit_circle(lam, mu, opts);
            cert.pair_label = pair.label;
        } else {
            cert = certify_gamma_point(pair, lam, mu, opts);
            // For Fourier pairs, cross-check the group-parity rule.
            if (const auto g = source.group()) {
                const Certificate parity = certify_fourier(*g, lam, mu, opts);
                cert.reasons.insert(cert.reasons.end(), parity.reasons.begin(),
                                    parity.reasons.end());
                cert.oracle_agreement =
                    cert.oracle_agreement && parity.verdict == cert.verdict;
            }
        }
    }

    if (format == "csv")
        write_output(certificate_csv(cert), out_path);
    else
        write_output(certificate_to_json(cert).dump(2) + "\n", out_path);
    return cert.verdict == Verdict::extremal ? 0 : 1;
}

int cmd_region(int d, int grid, const std::string& format, const std::string& out_path) {
    if (d < 2) throw std::invalid_argument("region: --d must be >= 2");
    if (grid < 2) throw std::invalid_argument("region: --grid must be >= 2");
    const double lo = d == 2 ? -1.0 : 1.0 / (1.0 - d);

    struct Row {
        std::string kind;
        double lambda, mu;
        RegionClass cls;
    };
    std::vector<Row> rows;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const double lam = lo + (1.0 - lo) * i / (grid - 1.0);
            const double mu = lo + (1.0 - lo) * j / (grid - 1.0);
            rows.push_back({"grid", lam, mu, region_contains(d, lam, mu).cls});
        }

    // Ordered arc polyline for plotting.
    const int arc_n = std::max(grid, 21);
    if (d == 2) {
        for (int k = 0; k <= arc_n; ++k) {
            const double theta = 2.0 * kPi * k / arc_n;
            rows.push_back({"arc", std::cos(theta), std::sin(theta), RegionClass::on_gamma_arc});
        }
    } else {
        // A-branch from (1/(1-d), (d-2)/(d-1)) to (1, 0), then B-branch down to
        // ((d-2)/(d-1), 1/(1-d)).
        for (int k = 0; k <= arc_n; ++k) {
            const double nu = lo + (1.0 - lo) * k / arc_n;
            const auto [lam, mu] = gamma_parametrize(d, nu, 'A');
            rows.push_back({"arc", lam, mu, RegionClass::on_gamma_arc});
        }
        for (int k = arc_n - 1; k >= 0; --k) {
            const double nu = lo + (1.0 - lo) * k / arc_n;
            const auto [lam, mu] = gamma_parametrize(d, nu, 'B');
            rows.push_back({"arc", lam, mu, RegionClass::on_gamma_arc});
        }
        rows.push_back({"vertex", 1.0 / (1.0 - d), 1.0 / (1.0 - d), RegionClass::vertex});
    }

    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"kind", r.kind},
                           {"lambda", r.lambda},
                           {"mu", r.mu},
                           {"classification", region_class_name(r.cls)}});
        write_output(nlohmann::json{{"d", d}, {"rows", arr}}.dump(2) + "\n", out_path);
    } else {
        std::ostringstream out;
        out << "kind,lambda,mu,classification\n";
        for (const auto& r : rows)
            out << r.kind << "," << fmt17(r.lambda) << "," << fmt17(r.mu) << ","
                << region_class_name(r.cls) << "\n";
        write_output(out.str(), out_path);
    }
    return 0;
}

int cmd_table1(const Tolerances& tol, const std::string& out_path) {
    struct Entry {
        std::string id;
        std::vector<double> params;
        std::string shown;
    };
    std::vector<Entry> entries;
    for (int k = 0; k < 8; ++k) {
        const double a = (2 * k + 1) * kPi / 16.0;  // avoids the a = 0, pi/2 collisions
        entries.push_back({"d4-f4", {a}, "d4-f4 a=" + fmt17(a)});
    }
    for (int k = 0; k < 8; ++k) {
        const double a = (2 * k + 1) * kPi / 8.0;
        entries.push_back({"d6-m1", {a}, "d6-m1 a=" + fmt17(a)});
    }
    entries.push_back({"d6-m2", {+1.0}, "d6-m2 sign=+"});
    entries.push_back({"d6-m2", {-1.0}, "d6-m2 sign=-"});
    entries.push_back({"d6-m3", {}, "d6-m3"});
    entries.push_back({"d7-m1", {}, "d7-m1"});
    entries.push_back({"d7-m2", {+1.0}, "d7-m2 sign=+"});
    entries.push_back({"d7-m2", {-1.0}, "d7-m2 sign=-"});

    const double vtol = 1e-8;
    std::ostringstream out;
    out << "entry,status,max_deviation\n";
    bool all_pass = true;

    for (const auto& e : entries) {
        const auto pair = hadamard_to_mub(table1_matrix(e.id, e.params), e.shown);
        const auto spec = spectrum(pair, tol);
        const auto expect = table1_expected(e.id, e.params.empty() ? 0.0 : e.params[0]);

        double max_dev = 0.0;
        bool pass = true;
        if (e.id == "d7-m1") {
            // closed-form clusters plus four 3-fold quartic clusters
            int closed_hits = 0, quartic_hits = 0;
            for (const auto& cl : spec.clusters) {
                bool matched = false;
                for (const auto& ex : expect.clusters)
                    if (std::abs(cl.value - ex.value) <= vtol &&
                        cl.multiplicity == ex.multiplicity) {
                        matched = true;
                        max_dev = std::max(max_dev, std::abs(cl.value - ex.value));
                    }
                if (matched) {
                    ++closed_hits;
                } else if (cl.multiplicity == 3 &&
                           std::abs(quartic_residual(cl.value)) < 1e-6) {
                    ++quartic_hits;
                    max_dev = std::max(max_dev, std::abs(quartic_residual(cl.value)));
                }
            }
            pass = closed_hits == static_cast<int>(expect.clusters.size()) && quartic_hits == 4 &&
                   spec.clusters.size() == expect.clusters.size() + 4;
        } else {
            pass = spec.clusters.size() == expect.clusters.size();
            if (pass)
                for (size_t i = 0; i < spec.clusters.size(); ++i) {
                    const double dev = std::abs(spec.clusters[i].value - expect.clusters[i].value);
                    max_dev = std::max(max_dev, dev);
                    pass = pass && dev <= vtol &&
                           spec.clusters[i].multiplicity == expect.clusters[i].multiplicity;
                }
        }
        all_pass = all_pass && pass;
        out << e.shown << "," << (pass ? "pass" : "FAIL") << "," << fmt17(max_dev) << "\n";
    }

    // Collision parameter a = 0: the +-|sin a| clusters merge into one 0-cluster
    // of multiplicity 4, matching the Fourier Z4 closed form.
    {
        const auto spec = spectrum(hadamard_to_mub(family_f4(0.0), "d4-f4@a=0"), tol);
        const auto closed = fourier_spectrum_closed_form(make_group({4}), tol);
        bool pass = spec.clusters.size() == closed.clusters.size();
        double max_dev = 0.0;
        if (pass)
            for (size_t i = 0; i < spec.clusters.size(); ++i) {
                max_dev = std::max(max_dev,
                                   std::abs(spec.clusters[i].value - closed.clusters[i].value));
                pass = pass && std::abs(spec.clusters[i].value - closed.clusters[i].value) <= vtol &&
                       spec.clusters[i].multiplicity == closed.clusters[i].multiplicity;
            }
        all_pass = all_pass && pass;
        out << "d4-f4 a=0 (merged clusters vs fourier Z4)," << (pass ? "pass" : "FAIL") << ","
            << fmt17(max_dev) << "\n";
    }

    out << (all_pass ? "all entries pass" : "some entries FAILED") << "\n";
    write_output(out.str(), out_path);
    return all_pass ? 0 : 1;
}

int cmd_fourier_sweep(int max_order, bool cyclic_only, const Tolerances& tol,
                      const std::string& out_path) {
    if (max_order < 2) throw std::invalid_argument("fourier-sweep: --max-order must be >= 2");
    if (max_order > 12)
        throw std::invalid_argument(
            "fourier-sweep: --max-order capped at 12 (Lambda is order^2 x order^2)");

    // All multisets of cyclic factors >= 2 per order, non-decreasing.
    std::vector<std::vector<long long>> groups;
    for (long long order = 2; order <= max_order; ++order) {
        std::vector<long long> current;
        std::function<void(long long, long long)> expand = [&](long long rest, long long minf) {
            if (rest == 1) {
                if (!current.empty()) groups.push_back(current);
                return;
            }
            for (long long f = minf; f <= rest; ++f)
                if (rest % f == 0) {
                    current.push_back(f);
                    expand(rest / f, f);
                    current.pop_back();
                }
        };
        if (cyclic_only)
            groups.push_back({order});
        else
            expand(order, 2);
    }

    std::ostringstream out;
    out << "group,order,order_even,has_minus_one,agree\n";
    bool all_agree = true;
    for (const auto& factors : groups) {
        const auto g = make_group(factors);
        const bool even = g.order % 2 == 0;
        const auto numeric = spectrum(fourier_mub(g), tol);
        const auto closed = fourier_spectrum_closed_form(g, tol);
        const auto m1 = has_minus_one(numeric, tol);

        bool closed_match = numeric.clusters.size() == closed.clusters.size();
        if (closed_match)
            for (size_t i = 0; i < numeric.clusters.size(); ++i)
                closed_match = closed_match &&
                               numeric.clusters[i].multiplicity ==
                                   closed.clusters[i].multiplicity &&
                               std::abs(numeric.clusters[i].value - closed.clusters[i].value) <=
                                   1e-9;

        const bool agree = (m1.present == even) && closed_match;
        all_agree = all_agree && agree;
        out << group_label(g) << "," << g.order << "," << (even ? "true" : "false") << ","
            << (m1.present ? "true" : "false") << "," << (agree ? "true" : "false") << "\n";
    }
    write_output(out.str(), out_path);
    return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra and extremality certificates for uniformly noisy MUB pairs"};
    app.require_subcommand(1);

    Tolerances tol;
    std::string spectrum_format = "json", certify_format = "json", region_format = "csv";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd, std::string* format) {
        cmd->add_option("--tol-cluster", tol.cluster,
                        "eigenvalue clustering / -1-membership tolerance")
            ->envname("MUBCERT_TOL_CLUSTER");
        if (format)
            cmd->add_option("--format", *format, "output format")
                ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "output file (stdout when omitted)");
    };

    PairSource spectrum_source;
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "eigenvalues and clusters of the Haagerup matrix");
    spectrum_source.add_options(spectrum_cmd);
    add_common(spectrum_cmd, &spectrum_format);

    PairSource certify_source;
    PointSpec point;
    bool run_oracle = false;
    auto* certify_cmd =
        app.add_subcommand("certify", "certify extremality of a noisy pair (exit 0 iff extremal)");
    certify_source.add_options(certify_cmd);
    point.add_options(certify_cmd);
    certify_cmd->add_flag("--oracle", run_oracle,
                          "also run the brute-force linear-independence oracle");
    add_common(certify_cmd, &certify_format);

    int region_d = 5, region_grid = 101;
    auto* region_cmd =
        app.add_subcommand("region", "sample the compatibility region and the arc polyline");
    region_cmd->add_option("--d", region_d, "Hilbert space dimension")->required();
    region_cmd->add_option("--grid", region_grid, "grid points per axis");
    add_common(region_cmd, &region_format);

    auto* table1_cmd =
        app.add_subcommand("table1", "reproduce the full catalog of reference spectra");
    add_common(table1_cmd, nullptr);

    int sweep_max = 10;
    bool cyclic_only = false;
    auto* sweep_cmd = app.add_subcommand(
        "fourier-sweep", "parity vs numeric -1-membership across abelian groups");
    sweep_cmd->add_option("--max-order", sweep_max, "largest group order");
    sweep_cmd->add_flag("--cyclic-only", cyclic_only, "only cyclic groups Z_d");
    add_common(sweep_cmd, nullptr);

    try {
        app.parse(argc, argv);
        if (spectrum_cmd->parsed())
            return cmd_spectrum(spectrum_source, tol, spectrum_format, out_path);
        if (certify_cmd->parsed())
            return cmd_certify(certify_source, point, run_oracle, tol, certify_format, out_path);
        if (region_cmd->parsed()) return cmd_region(region_d, region_grid, region_format, out_path);
        if (table1_cmd->parsed()) return cmd_table1(tol, out_path);
        if (sweep_cmd->parsed()) return cmd_fourier_sweep(sweep_max, cyclic_only, tol, out_path);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
