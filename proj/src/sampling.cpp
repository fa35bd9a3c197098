#include "fmdil/sampling.hpp"

namespace fmdil {

GroupAlgebraElement random_group_element(const GroupPtr& g,
                                         std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    auto x = GroupAlgebraElement::zero(g);
    for (auto& c : x.coeffs) c = cplx(normal(rng), normal(rng));
    return x;
}

GaussExp random_gauss_exp(int dim, std::mt19937_64& rng, int max_terms) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    GaussExp a = GaussExp::zero(dim);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Eigen::VectorXd freq(dim);
        for (int j = 0; j < dim; ++j) freq(j) = normal(rng);
        if (unit(rng) < 0.25) freq.setZero();
        a = a + GaussExp::exponential(dim, cplx(normal(rng), normal(rng)),
                                      std::move(freq));
    }
    return a;
}

CrossedElement random_crossed_element(const GroupPtr& g, const CocyclePtr& c,
                                      std::mt19937_64& rng, int max_terms) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> small(-1, 1);
    auto f = crossed_zero(g, c);
    for (int s = 0; s < g->order; ++s) {
        const int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            Eigen::VectorXd freq = Eigen::VectorXd::Zero(c->dim);
            for (int r = 0; r < g->order; ++r)
                freq += static_cast<double>(small(rng)) * c->b[r];
            f.integrand[s] =
                f.integrand[s] +
                GaussExp::exponential(c->dim, cplx(normal(rng), normal(rng)),
                                      std::move(freq));
        }
    }
    return f;
}

}  // namespace fmdil
