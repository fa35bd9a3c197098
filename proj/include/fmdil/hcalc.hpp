#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fmdil/symbols.hpp"

namespace fmdil {

// A function analytic on a sector around the positive axis, with the
// polynomial decay |f(z)| <= c |z|^s / (1 + |z|)^{2s} certified for
// |arg z| <= theta_max. The decay parameters size the contour truncation.
struct SectorFunction {
    std::string name;
    std::function<cplx(cplx)> eval;
    double decay_s = 1.0;
    double decay_c = 1.0;
    double theta_max = 1.5707963267948966;  // pi/2
};

// The builtin decay family z^a / (1 + z)^{2a}.
SectorFunction power_decay_function(double a);

// The diagonal generator of the multiplier semigroup: spectrum = psi(G),
// nonnegative with 0 attained at the identity. Values within
// 1e-12 * max(1, max psi) of zero are treated as the kernel.
struct GeneratorData {
    GroupPtr group;
    std::vector<double> psi;
    std::string name;

    bool is_kernel(int s) const;
};

// Validates real nonnegative psi with psi(e) = 0.
GeneratorData make_generator(const SymbolFunction& psi);

// The multiplier with symbol (z - psi(s))^-1. Throws PoleError when z hits
// the spectrum.
SymbolFunction resolvent(const GeneratorData& gen, cplx z);

struct SectorialityEstimate {
    double lower_bound = 0.0;    // max over the grid of |z| / dist(z, spectrum)
    double analytic_upper = 0.0; // 1 / sin(min(theta, pi/2)) for psi >= 0
};

// Samples |z| * ||(z - A)^-1|| over grid points outside the closed sector of
// half-angle theta; grid points inside are rejected.
SectorialityEstimate sectoriality_constant(const GeneratorData& gen,
                                           double theta,
                                           const std::vector<cplx>& grid);

struct ContourConfig {
    double tol = 1e-8;        // refinement stopping difference
    int init_panels = 32;
    int max_panels = 8192;
    int gauss_points = 4;
    // Truncation radii; 0 means derive from the decay parameters so the
    // discarded tails stay below tol.
    double r_min = 0.0;
    double r_max = 0.0;
};

// Evaluates (1/2 pi i) times the integral of f(z) / (z - w) over the
// boundary rays of the sector of half-angle nu, oriented to wind once
// around w > 0. Doubles the composite Gauss panels until two successive
// estimates agree to cfg.tol; throws QuadratureError otherwise.
cplx contour_value(const SectorFunction& f, double w, double nu,
                   const ContourConfig& cfg = {});

// Single fixed-resolution pass (no adaptivity); used to observe the
// convergence order of the composite rule.
cplx contour_value_fixed(const SectorFunction& f, double w, double nu,
                         int panels, const ContourConfig& cfg = {});

// f(A) as a diagonal symbol through the contour integral; the kernel of A
// is assigned 0 (the decay class vanishes at the origin, so this is the
// unique continuous value on the range projection).
SymbolFunction hinfty_apply(const SectorFunction& f, const GeneratorData& gen,
                            double nu, const ContourConfig& cfg = {});

// Ground truth for diagonal generators: pointwise evaluation f(psi(s)),
// with the kernel assigned 0.
SymbolFunction hinfty_apply_direct(const SectorFunction& f,
                                   const GeneratorData& gen);

// Supremum of |f| over the boundary rays of the sector of half-angle theta,
// sampled on a log grid.
double hinf_sup_norm(const SectorFunction& f, double theta,
                     int grid_size = 2000);

struct NormEstimate {
    double p2_exact = 0.0;        // max_s |f(psi(s))|, the L^2 operator norm
    double lower_bound = 0.0;     // search over unit vectors of L^p
    double lower_bound_amp2 = 0.0; // same with 2x2 matrix coefficients
    double cb_probe = 0.0;        // max of the amplified bounds
    double hinf_norm = 0.0;       // boundary sup norm at the given angle
    double ratio = 0.0;           // cb_probe / hinf_norm
};

// L^p -> L^p norm probe for the multiplier f(A): exact at p = 2 (diagonal),
// a random/ascent lower-bound search otherwise, amplified by k x k matrix
// coefficients for k in {1, 2}.
NormEstimate calculus_norm_estimate(const SectorFunction& f,
                                    const GeneratorData& gen, double p,
                                    double theta, std::uint64_t seed = 7);

struct AnalyticityReport {
    double max_residual = 0.0;  // direction independence of the derivative
    bool pass = false;
};

// Finite-difference Cauchy-Riemann probe at the sample points.
AnalyticityReport verify_analytic(const SectorFunction& f,
                                  const std::vector<cplx>& points,
                                  double h = 1e-5, double tol = 1e-4);

}  // namespace fmdil
