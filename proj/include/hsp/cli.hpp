#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hsp::cli {

// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1; // query answered "outside"
inline constexpr int kUsage = 2;
inline constexpr int kNumeric = 3;

struct RegionArgs {
    int n = 2;
    double r = 0.5;
    double rho = 0.0;
    double alpha = 0.0;
    int beta_samples = 256;
    int quad_order = 64;
    std::string format = "json"; // json | csv | svg
    std::string out;             // empty = stdout
};

struct ExtremalArgs {
    int n = 2;
    double r = 0.5;
    double a = 0.0;
    double b = 0.0;
    int samples = 201;
    int quad_order = 64;
    std::string out;
};

struct BoundArgs {
    int n = 2;
    double r = 0.5;
};

struct CheckArgs {
    int n = 2;
    double r = 0.5;
    double f0_re = 0.0, f0_im = 0.0;
    double w_re = 0.0, w_im = 0.0;
    double tol = 1e-6;
    int beta_samples = 256;
    int quad_order = 64;
};

struct VerifyArgs {
    int n = 2;
    double r = 0.5;
    int trials = 500;
    std::uint64_t seed = 7;
    std::string report; // empty = stdout
};

int run_region(const RegionArgs& args, std::ostream& out, std::ostream& err);
int run_extremal(const ExtremalArgs& args, std::ostream& out, std::ostream& err);
int run_bound(const BoundArgs& args, std::ostream& out, std::ostream& err);
int run_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

std::string version();

} // namespace hsp::cli
