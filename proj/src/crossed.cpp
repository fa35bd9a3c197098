#include "fmdil/crossed.hpp"

#include <cmath>
#include <stdexcept>

namespace fmdil {

namespace {

void require_compatible(const CrossedElement& f, const CrossedElement& g) {
    if (!same_group(f.group, g.group))
        throw std::invalid_argument("group mismatch");
    if (f.cocycle.get() != g.cocycle.get() &&
        f.cocycle->dim != g.cocycle->dim)
        throw std::invalid_argument("cocycle mismatch");
}

}  // namespace

CrossedElement crossed_zero(const GroupPtr& g, const CocyclePtr& c) {
    CrossedElement f;
    f.group = g;
    f.cocycle = c;
    f.integrand.assign(g->order, GaussExp::zero(c->dim));
    return f;
}

CrossedElement crossed_unit(const GroupPtr& g, const CocyclePtr& c) {
    auto f = crossed_zero(g, c);
    f.integrand[g->identity] = GaussExp::constant(c->dim, 1.0);
    return f;
}

GaussExp alpha_action(const Cocycle& c, int s, const GaussExp& a) {
    return second_quantization(c.pi[s], a);
}

CrossedElement embed_J(const GroupAlgebraElement& x, const CocyclePtr& c) {
    if (!same_group(x.group, c->group))
        throw std::invalid_argument("group mismatch");
    auto f = crossed_zero(x.group, c);
    for (int s = 0; s < x.group->order; ++s)
        if (x.coeffs[s] != cplx(0.0, 0.0))
            f.integrand[s] = GaussExp::constant(c->dim, x.coeffs[s]);
    return f;
}

CrossedElement embed_pi(const GaussExp& a, const GroupPtr& g,
                        const CocyclePtr& c) {
    if (a.dim() != c->dim)
        throw std::invalid_argument(
            "Gaussian element dimension does not match the cocycle");
    auto f = crossed_zero(g, c);
    f.integrand[g->identity] = a;
    return f;
}

CrossedElement crossed_add(const CrossedElement& f, const CrossedElement& g) {
    require_compatible(f, g);
    CrossedElement out = f;
    for (int s = 0; s < f.group->order; ++s)
        out.integrand[s] = out.integrand[s] + g.integrand[s];
    return out;
}

CrossedElement crossed_scale(cplx c, const CrossedElement& f) {
    CrossedElement out = f;
    for (auto& a : out.integrand) a = c * a;
    return out;
}

CrossedElement crossed_mul(const CrossedElement& g, const CrossedElement& f) {
    require_compatible(g, f);
    const auto& grp = *g.group;
    auto out = crossed_zero(g.group, g.cocycle);
    for (int s = 0; s < grp.order; ++s) {
        if (g.integrand[s].is_zero()) continue;
        for (int t = 0; t < grp.order; ++t) {
            int r = grp.mul(grp.inv(s), t);
            if (f.integrand[r].is_zero()) continue;
            out.integrand[t] =
                out.integrand[t] +
                g.integrand[s] * alpha_action(*g.cocycle, s, f.integrand[r]);
        }
    }
    return out;
}

CrossedElement crossed_adjoint(const CrossedElement& f) {
    const auto& grp = *f.group;
    auto out = crossed_zero(f.group, f.cocycle);
    for (int t = 0; t < grp.order; ++t) {
        const auto& src = f.integrand[grp.inv(t)];
        if (src.is_zero()) continue;
        out.integrand[t] = alpha_action(*f.cocycle, t, src).adjoint();
    }
    return out;
}

cplx weight_pair(const CrossedElement& f, const CrossedElement& g) {
    require_compatible(f, g);
    cplx acc(0.0, 0.0);
    for (int s = 0; s < f.group->order; ++s)
        acc += expectation(f.integrand[s].adjoint() * g.integrand[s]);
    return acc;
}

cplx crossed_weight(const CrossedElement& f) {
    return expectation(f.integrand[f.group->identity]);
}

GroupAlgebraElement cond_expectation(const CrossedElement& f) {
    auto x = GroupAlgebraElement::zero(f.group);
    for (int s = 0; s < f.group->order; ++s)
        x.coeffs[s] = expectation(f.integrand[s]);
    return x;
}

CrossedElement apply_Ut(const CrossedElement& f, double t, Convention conv) {
    double scale;
    if (conv == Convention::A) {
        scale = std::sqrt(2.0) * t;
    } else {
        if (t < 0.0)
            throw std::domain_error(
                "the square-root time scaling is defined for t >= 0 only");
        scale = std::sqrt(2.0 * t);
    }
    CrossedElement out = f;
    for (int s = 0; s < f.group->order; ++s) {
        if (f.integrand[s].is_zero()) continue;
        GaussExp phase = GaussExp::exponential(f.cocycle->dim, 1.0,
                                               scale * f.cocycle->b[s]);
        out.integrand[s] = phase * f.integrand[s];
    }
    return out;
}

CrossedElement modular_flow(const CrossedElement& f, double /*t*/) {
    return f;
}

BlockMatrix block_matrix(const CrossedElement& f) {
    const auto& grp = *f.group;
    const int n = grp.order;
    BlockMatrix out(n, std::vector<GaussExp>(n, GaussExp::zero(f.cocycle->dim)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const auto& src = f.integrand[grp.mul(r, grp.inv(c))];
            if (src.is_zero()) continue;
            out[r][c] = alpha_action(*f.cocycle, grp.inv(r), src);
        }
    return out;
}

BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b) {
    const int n = static_cast<int>(a.size());
    const int dim = n ? a[0][0].dim() : 0;
    BlockMatrix out(n, std::vector<GaussExp>(n, GaussExp::zero(dim)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            GaussExp acc = GaussExp::zero(dim);
            for (int k = 0; k < n; ++k) {
                if (a[r][k].is_zero() || b[k][c].is_zero()) continue;
                acc = acc + a[r][k] * b[k][c];
            }
            out[r][c] = acc;
        }
    return out;
}

BlockMatrix block_adjoint(const BlockMatrix& a) {
    const int n = static_cast<int>(a.size());
    const int dim = n ? a[0][0].dim() : 0;
    BlockMatrix out(n, std::vector<GaussExp>(n, GaussExp::zero(dim)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out[r][c] = a[c][r].adjoint();
    return out;
}

double block_deviation(const BlockMatrix& a, const BlockMatrix& b,
                       double freq_tol) {
    double dev = 0.0;
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < a[r].size(); ++c)
            dev = std::max(dev,
                           max_term_deviation(a[r][c], b[r][c], freq_tol));
    return dev;
}

double crossed_deviation(const CrossedElement& f, const CrossedElement& g,
                         double freq_tol) {
    require_compatible(f, g);
    double dev = 0.0;
    for (int s = 0; s < f.group->order; ++s)
        dev = std::max(
            dev, max_term_deviation(f.integrand[s], g.integrand[s], freq_tol));
    return dev;
}

}  // namespace fmdil
