#include "hsp/cli.hpp"

#include "hsp/errors.hpp"
#include "hsp/oracle.hpp"
#include "hsp/region.hpp"
#include "hsp/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace hsp::cli {

namespace {

int write_output(const std::string& text, const std::string& path, std::ostream& out,
                 std::ostream& err) {
    if (path.empty()) {
        out << text;
        return kOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << path << "'\n";
        return kUsage;
    }
    file << text;
    return kOk;
}

// Usage errors exit 2, numerical failures exit 3.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const solver_error& e) {
        err << "error: " << e.what() << " (residuals " << e.residual_a << ", " << e.residual_b
            << " after " << e.iterations << " iterations)\n";
        return kNumeric;
    } catch (const infeasibility_error& e) {
        err << "error: " << e.what() << "\n";
        return kNumeric;
    } catch (const capability_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumeric;
    }
}

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

std::string version() { return "1.0.0"; }

int run_region(const RegionArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        if (args.format != "json" && args.format != "csv" && args.format != "svg")
            throw std::domain_error("region: format must be json, csv or svg");
        RegionOptions opts;
        opts.m_beta = args.beta_samples;
        opts.quad_order = args.quad_order;
        const Region region = build_region(args.n, args.r, args.rho, opts);
        const RegionDocument doc =
            make_region_document(region, args.alpha, args.quad_order, version());
        std::string text;
        if (args.format == "json")
            text = to_json(doc);
        else if (args.format == "csv")
            text = to_csv(doc);
        else
            text = to_svg(doc);
        return write_output(text, args.out, out, err);
    });
}

int run_extremal(const ExtremalArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        if (args.samples < 2) throw std::domain_error("extremal: need at least two samples");
        SolveOptions opts;
        opts.quad_order = args.quad_order;
        const ExtremalProfile profile = build_extremal(args.n, args.r, args.a, args.b, opts);

        std::string text = "# n=" + std::to_string(args.n) + " r=" + format_g17(args.r) +
                           " a=" + format_g17(args.a) + " b=" + format_g17(args.b) + "\n";
        if (profile.is_cap()) {
            text += "# kind=cap t_a=" + format_g17(profile.cap.t_a) +
                    " d_a=" + format_g17(profile.cap.d_a) + "\n";
        } else {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "# kind=smooth lambda=%.17g mu=%.17g residual_R=%.3e "
                          "residual_I=%.3e iterations=%d\n",
                          profile.params.lambda, profile.params.mu, profile.params.residual_R,
                          profile.params.residual_I, profile.params.iterations);
            text += buf;
        }
        text += "t,u,v\n";
        for (int i = 0; i < args.samples; ++i) {
            const double t = -1.0 + 2.0 * i / (args.samples - 1);
            const double u = profile.u(t);
            const double v = profile.sign_b == 0 ? 0.0 : profile.sign_b * profile.v(t);
            text += format_g17(t) + "," + format_g17(u) + "," + format_g17(v) + "\n";
        }
        return write_output(text, args.out, out, err);
    });
}

int run_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        const double bound = classical_schwarz_bound(args.n, args.r);
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.6f\n", bound);
        out << buf;
        return kOk;
    });
}

int run_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        RegionOptions opts;
        opts.m_beta = args.beta_samples;
        opts.quad_order = args.quad_order;
        const Complex F0(args.f0_re, args.f0_im);
        const Complex w(args.w_re, args.w_im);
        const Containment c = rotated_contains(args.n, args.r, F0, w, args.tol, opts);
        const char* label = c.side == Side::Inside    ? "inside"
                            : c.side == Side::Boundary ? "boundary"
                                                       : "outside";
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%s margin=%.6g\n", label, c.margin);
        out << buf;
        return c.side == Side::Outside ? kNegative : kOk;
    });
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        if (args.trials < 1) throw std::domain_error("verify: need at least one trial");
        const TrialReport report = run_verification(args.n, args.r, args.trials, args.seed);
        const std::string text = to_json(report);
        if (args.report.empty()) {
            out << text;
        } else {
            const int rc = write_output(text, args.report, out, err);
            if (rc != kOk) return rc;
            out << (report.pass ? "verification: PASS" : "verification: FAIL") << " (trials="
                << report.trials << ", worst margin=" << report.worst_margin << ")\n";
        }
        return report.pass ? kOk : kNegative;
    });
}

} // namespace hsp::cli
