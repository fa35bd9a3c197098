#include "fmdil/gaussalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fmdil {

namespace {

constexpr double kFreqMergeTol = 1e-12;

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (a(i) > b(i)) return false;
    }
    return false;
}

bool freq_close(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    for (int i = 0; i < a.size(); ++i)
        if (std::abs(a(i) - b(i)) > kFreqMergeTol) return false;
    return true;
}

void require_same_dim(const GaussExp& a, const GaussExp& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("Gaussian algebra dimension mismatch");
}

}  // namespace

void GaussExp::canonicalize() {
    for (auto& t : terms_)
        for (int i = 0; i < t.freq.size(); ++i)
            if (t.freq(i) == 0.0) t.freq(i) = 0.0;  // normalize -0.0
    // Pairwise merge. A sorted consecutive merge would miss duplicates: two
    // frequencies equal within tolerance in the leading coordinate can
    // interleave with a third under exact lexicographic order. Term counts
    // stay small, so the quadratic scan is fine.
    std::vector<Term> merged;
    for (auto& t : terms_) {
        bool absorbed = false;
        for (auto& m : merged)
            if (freq_close(m.freq, t.freq)) {
                m.coeff += t.coeff;
                absorbed = true;
                break;
            }
        if (!absorbed) merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) {
                                    return t.coeff == cplx(0.0, 0.0);
                                }),
                 merged.end());
    std::stable_sort(merged.begin(), merged.end(),
                     [](const Term& x, const Term& y) {
                         return lex_less(x.freq, y.freq);
                     });
    terms_ = std::move(merged);
}

GaussExp GaussExp::constant(int dim, cplx c) {
    return exponential(dim, c, Eigen::VectorXd::Zero(dim));
}

GaussExp GaussExp::exponential(int dim, cplx c, Eigen::VectorXd freq) {
    if (freq.size() != dim)
        throw std::invalid_argument("frequency size does not match dimension");
    GaussExp a(dim);
    a.terms_.push_back({c, std::move(freq)});
    a.canonicalize();
    return a;
}

GaussExp GaussExp::adjoint() const {
    GaussExp out(dim_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({std::conj(t.coeff), -t.freq});
    out.canonicalize();
    return out;
}

GaussExp operator+(const GaussExp& a, const GaussExp& b) {
    require_same_dim(a, b);
    GaussExp out(a.dim_);
    out.terms_ = a.terms_;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    out.canonicalize();
    return out;
}

GaussExp operator-(const GaussExp& a, const GaussExp& b) {
    return a + (cplx(-1.0, 0.0) * b);
}

GaussExp operator*(const GaussExp& a, const GaussExp& b) {
    require_same_dim(a, b);
    GaussExp out(a.dim_);
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            out.terms_.push_back({ta.coeff * tb.coeff, ta.freq + tb.freq});
    out.canonicalize();
    return out;
}

GaussExp operator*(cplx c, const GaussExp& a) {
    GaussExp out(a.dim_);
    out.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) out.terms_.push_back({c * t.coeff, t.freq});
    out.canonicalize();
    return out;
}

cplx expectation(const GaussExp& a) {
    cplx acc(0.0, 0.0);
    for (const auto& t : a.terms())
        acc += t.coeff * std::exp(-0.5 * t.freq.squaredNorm());
    return acc;
}

GaussExp second_quantization(const Eigen::MatrixXd& u, const GaussExp& a) {
    if (u.rows() != a.dim() || u.cols() != a.dim())
        throw std::invalid_argument(
            "second quantization matrix shape does not match dimension");
    if (u.size() > 0) {
        double ortho = (u.transpose() * u -
                        Eigen::MatrixXd::Identity(u.cols(), u.cols()))
                           .cwiseAbs()
                           .maxCoeff();
        if (ortho > 1e-10)
            throw std::invalid_argument(
                "second quantization requires an orthogonal matrix "
                "(residual " +
                fmt17(ortho) + ")");
    }
    GaussExp out(a.dim());
    out.terms_.reserve(a.terms().size());
    for (const auto& t : a.terms()) out.terms_.push_back({t.coeff, u * t.freq});
    out.canonicalize();
    return out;
}

cplx l2_inner(const GaussExp& a, const GaussExp& b) {
    require_same_dim(a, b);
    return expectation(a.adjoint() * b);
}

double max_term_deviation(const GaussExp& a, const GaussExp& b,
                          double freq_tol) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("Gaussian algebra dimension mismatch");
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::vector<char> used(tb.size(), 0);
    double dev = 0.0;
    for (const auto& x : ta) {
        int match = -1;
        for (size_t j = 0; j < tb.size(); ++j) {
            if (used[j]) continue;
            bool close = true;
            for (int i = 0; i < x.freq.size(); ++i)
                if (std::abs(x.freq(i) - tb[j].freq(i)) > freq_tol) {
                    close = false;
                    break;
                }
            if (close) {
                match = static_cast<int>(j);
                break;
            }
        }
        if (match < 0) {
            dev = std::max(dev, std::abs(x.coeff));
        } else {
            used[match] = 1;
            dev = std::max(dev, std::abs(x.coeff - tb[match].coeff));
        }
    }
    for (size_t j = 0; j < tb.size(); ++j)
        if (!used[j]) dev = std::max(dev, std::abs(tb[j].coeff));
    return dev;
}

GaussianSampler::GaussianSampler(int dim, int n_samples, std::uint64_t seed)
    : dim_(dim), n_(n_samples), seed_(seed) {
    if (n_samples < 1)
        throw std::invalid_argument("sampler needs at least one sample");
    if (dim < 0) throw std::invalid_argument("negative dimension");
    samples_.resize(n_, dim_);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < dim_; ++i) samples_(j, i) = normal(rng);
}

McEstimate mc_expectation(const GaussExp& a, const GaussianSampler& sampler) {
    if (sampler.dim() != a.dim())
        throw std::invalid_argument("sampler dimension mismatch");
    const int n = sampler.n_samples();
    Eigen::VectorXcd per_sample = Eigen::VectorXcd::Zero(n);
    for (const auto& t : a.terms()) {
        Eigen::VectorXd phase = sampler.samples() * t.freq;
        for (int j = 0; j < n; ++j)
            per_sample(j) +=
                t.coeff * cplx(std::cos(phase(j)), std::sin(phase(j)));
    }
    McEstimate out;
    // All draws identical (every frequency zero): the estimator is the
    // value itself, exactly; averaging would only accumulate rounding.
    bool constant = true;
    for (int j = 1; j < n && constant; ++j)
        constant = per_sample(j) == per_sample(0);
    if (constant) {
        out.estimate = per_sample(0);
        out.stderr_ = 0.0;
        return out;
    }
    out.estimate = per_sample.mean();
    if (n > 1) {
        double var = 0.0;
        for (int j = 0; j < n; ++j)
            var += std::norm(per_sample(j) - out.estimate);
        var /= static_cast<double>(n - 1);
        out.stderr_ = std::sqrt(var / static_cast<double>(n));
    }
    return out;
}

}  // namespace fmdil
