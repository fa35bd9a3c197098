#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "fmdil/common.hpp"

namespace fmdil {

// A finite sum  sum_k c_k e^{i W(h_k)}  with c_k complex and h_k in R^d,
// where W is a centered Gaussian field with covariance E(W(h)W(h')) =
// <h, h'>. The span of such exponentials is dense enough to carry every
// identity verified here, and all of them evaluate exactly: the expectation
// of a single exponential is exp(-||h||^2 / 2).
//
// Terms are kept canonical: frequencies sorted lexicographically, duplicates
// merged (absolute tolerance 1e-12 per coordinate; frequencies come from sums
// of cocycle vectors, so near-duplicates are true duplicates up to float
// noise), zero coefficients dropped.
class GaussExp {
public:
    struct Term {
        cplx coeff;
        Eigen::VectorXd freq;
    };

    GaussExp() = default;
    explicit GaussExp(int dim) : dim_(dim) {}

    static GaussExp zero(int dim) { return GaussExp(dim); }
    static GaussExp constant(int dim, cplx c);
    static GaussExp exponential(int dim, cplx c, Eigen::VectorXd freq);

    int dim() const { return dim_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GaussExp adjoint() const;

    friend GaussExp operator+(const GaussExp& a, const GaussExp& b);
    friend GaussExp operator-(const GaussExp& a, const GaussExp& b);
    friend GaussExp operator*(const GaussExp& a, const GaussExp& b);
    friend GaussExp operator*(cplx c, const GaussExp& a);
    friend GaussExp second_quantization(const Eigen::MatrixXd& u,
                                        const GaussExp& a);

private:
    int dim_ = 0;
    std::vector<Term> terms_;
    void canonicalize();
};

// E(a) = sum_k c_k exp(-||h_k||^2 / 2).
cplx expectation(const GaussExp& a);

// Second quantization of an orthogonal matrix: maps e^{iW(h)} to
// e^{iW(u h)}. A *-automorphism of the algebra; preserves the expectation.
GaussExp second_quantization(const Eigen::MatrixXd& u, const GaussExp& a);

// <a, b> = E(a* b), the L^2 pairing.
cplx l2_inner(const GaussExp& a, const GaussExp& b);

// Compares canonical forms, pairing terms whose frequencies agree within
// freq_tol per coordinate; unmatched terms contribute their coefficient
// magnitude. Returns the largest deviation.
double max_term_deviation(const GaussExp& a, const GaussExp& b,
                          double freq_tol = 1e-10);

// N x dim matrix of standard normal draws, generated eagerly so that a fixed
// seed pins the whole sample. One sampler per task; not shareable
// mid-stream.
class GaussianSampler {
public:
    GaussianSampler(int dim, int n_samples, std::uint64_t seed);

    int dim() const { return dim_; }
    int n_samples() const { return n_; }
    std::uint64_t seed() const { return seed_; }
    const Eigen::MatrixXd& samples() const { return samples_; }

private:
    int dim_;
    int n_;
    std::uint64_t seed_;
    Eigen::MatrixXd samples_;
};

struct McEstimate {
    cplx estimate;
    double stderr_ = 0.0;
};

// Monte Carlo counterpart of expectation() through the concrete realization
// W(h) = sum_i gamma_i <h, e_i>: the empirical mean of
// sum_k c_k exp(i <gamma_j, h_k>) over the sampler's draws.
McEstimate mc_expectation(const GaussExp& a, const GaussianSampler& sampler);

}  // namespace fmdil
