#include "fmdil/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numbers>
#include <sstream>

namespace fmdil {

SymbolFunction make_symbol(GroupPtr g, std::vector<cplx> values,
                           std::string name) {
    if (static_cast<int>(values.size()) != g->order)
        throw std::invalid_argument("symbol length does not match group order");
    return SymbolFunction{std::move(g), std::move(values), std::move(name)};
}

bool symbol_is_real(const SymbolFunction& s, double tol) {
    for (const auto& v : s.values)
        if (std::abs(v.imag()) > tol) return false;
    return true;
}

PositiveDefiniteReport is_positive_definite(const SymbolFunction& phi,
                                            double tol) {
    const auto& g = *phi.group;
    const int n = g.order;
    Eigen::MatrixXcd p(n, n);
    for (int s = 0; s < n; ++s)
        for (int r = 0; r < n; ++r) p(s, r) = phi.values[g.mul(g.inv(s), r)];

    PositiveDefiniteReport rep;
    const double scale = std::max(1.0, p.cwiseAbs().maxCoeff());
    rep.hermitian_residual = (p - p.adjoint()).cwiseAbs().maxCoeff();

    Eigen::MatrixXcd h = 0.5 * (p + p.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    rep.min_eigenvalue = es.eigenvalues()(0);
    rep.verdict = rep.hermitian_residual <= tol * scale &&
                  rep.min_eigenvalue >= -tol * scale;
    if (!rep.verdict) rep.witness = es.eigenvectors().col(0);
    return rep;
}

CndReport is_cond_negative_type(const SymbolFunction& psi, double tol) {
    if (!symbol_is_real(psi, tol))
        throw std::invalid_argument(
            "conditional negativity requires a real-valued symbol");
    const auto& g = *psi.group;
    const int n = g.order;

    CndReport rep;
    double scale = 1.0;
    for (const auto& v : psi.values) scale = std::max(scale, std::abs(v));

    rep.identity_residual = std::abs(psi.values[g.identity]);
    for (int s = 0; s < n; ++s)
        rep.symmetry_residual =
            std::max(rep.symmetry_residual,
                     std::abs(psi.values[g.inv(s)] - psi.values[s]));

    Eigen::MatrixXd form(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            form(i, j) = psi.values[g.mul(g.inv(i), j)].real();

    // Compress onto the sum-zero subspace. The compression annihilates the
    // constant vector, which would sit at eigenvalue 0 and mask negative
    // sum-zero spectra, so the constant direction is shifted far down; the
    // top eigenpair is then the extremal sum-zero direction.
    Eigen::MatrixXd q =
        Eigen::MatrixXd::Identity(n, n) -
        Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
    Eigen::MatrixXd m = q * (0.5 * (form + form.transpose())) * q;
    m = 0.5 * (m + m.transpose());
    const double shift = form.norm() + 1.0;
    m -= shift * Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    rep.max_eigenvalue = es.eigenvalues()(n - 1);

    Eigen::VectorXd w = es.eigenvectors().col(n - 1);
    w.array() -= w.mean();  // clean up any constant-direction leakage
    double wmax = w.cwiseAbs().maxCoeff();
    if (wmax > 0) w /= wmax;
    for (int i = 0; i < n; ++i) {
        if (std::abs(w(i)) > 1e-12) {
            if (w(i) < 0) w = -w;
            break;
        }
    }
    rep.witness = w;
    rep.witness_value = w.dot(form * w);

    if (rep.identity_residual > tol * scale)
        rep.failure = "identity-value";
    else if (rep.symmetry_residual > tol * scale)
        rep.failure = "symmetry";
    else if (rep.max_eigenvalue > tol * scale)
        rep.failure = "gram-positivity";
    rep.verdict = rep.failure.empty();
    return rep;
}

SchoenbergReport schoenberg_check(const SymbolFunction& psi,
                                  const std::vector<double>& t_grid,
                                  double tol) {
    if (!symbol_is_real(psi, tol))
        throw std::invalid_argument("schoenberg_check requires a real symbol");
    if (std::abs(psi.values[psi.group->identity]) > tol)
        throw std::invalid_argument("schoenberg_check requires psi(e) = 0");
    SchoenbergReport rep;
    if (t_grid.empty()) {
        rep.pass = true;
        rep.vacuous = true;
        rep.note = "empty grid: vacuous pass, nothing was sampled";
        return rep;
    }
    rep.pass = true;
    for (double t : t_grid) {
        auto pd = is_positive_definite(semigroup_symbol(psi, t), tol);
        rep.points.push_back({t, pd.min_eigenvalue, pd.verdict});
        rep.pass = rep.pass && pd.verdict;
    }
    rep.note =
        "finite t-grid sampler; the exact certificate is the sum-zero Gram "
        "eigenvalue test";
    return rep;
}

GroupAlgebraElement multiplier_apply(const SymbolFunction& phi,
                                     const GroupAlgebraElement& x) {
    if (!same_group(phi.group, x.group))
        throw std::invalid_argument("group mismatch");
    GroupAlgebraElement out = x;
    for (int s = 0; s < x.group->order; ++s)
        out.coeffs[s] = phi.values[s] * x.coeffs[s];
    return out;
}

SymbolFunction semigroup_symbol(const SymbolFunction& psi, double t) {
    if (t < 0.0)
        throw std::domain_error("semigroup symbol requires t >= 0");
    if (!symbol_is_real(psi, kDefaultTol))
        throw std::invalid_argument("semigroup symbol requires a real psi");
    SymbolFunction out;
    out.group = psi.group;
    out.values.reserve(psi.values.size());
    for (const auto& v : psi.values)
        out.values.push_back(std::exp(-t * v.real()));
    out.name = psi.name.empty() ? "exp(-t psi)" : "exp(-t " + psi.name + ")";
    return out;
}

std::vector<int> word_length(const FiniteGroup& g,
                             const std::vector<int>& generators) {
    std::vector<int> gens = generators;
    for (int s : generators) {
        if (s < 0 || s >= g.order)
            throw std::invalid_argument("generator index out of range");
        if (std::find(gens.begin(), gens.end(), g.inv(s)) == gens.end())
            gens.push_back(g.inv(s));
    }
    std::vector<int> dist(g.order, -1);
    dist[g.identity] = 0;
    std::deque<int> queue{g.identity};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int s : gens) {
            int y = g.mul(x, s);
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    for (int d : dist)
        if (d < 0)
            throw std::invalid_argument(
                "generators do not generate the group");
    return dist;
}

namespace {

std::vector<int> coxeter_generators(const FiniteGroup& g) {
    std::istringstream name(g.name);
    std::string family;
    int n = 0;
    name >> family >> n;
    if (family == "symmetric") {
        // Adjacent transpositions, located in the lex enumeration.
        std::vector<int> gens;
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<int> perm(n);
            for (int k = 0; k < n; ++k) perm[k] = k;
            std::swap(perm[i], perm[i + 1]);
            for (int idx = 0; idx < g.order; ++idx)
                if (symmetric_group_permutation(n, idx) == perm) {
                    gens.push_back(idx);
                    break;
                }
        }
        return gens;
    }
    if (family == "dihedral") {
        // Two reflections whose product is the basic rotation.
        return {n, n + 1};
    }
    throw std::invalid_argument(
        "coxeter length is defined for builtin symmetric/dihedral groups; "
        "use wordlength:<generators> otherwise");
}

bool is_cyclic_table(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.mul(a, b) != (a + b) % g.order) return false;
    return true;
}

}  // namespace

SymbolFunction builtin_psi(const std::string& spec, const GroupPtr& g) {
    const int n = g->order;
    std::string head = spec;
    std::string arg;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        head = spec.substr(0, pos);
        arg = spec.substr(pos + 1);
    }
    if (head == "zero")
        return make_symbol(g, std::vector<cplx>(n, 0.0), "zero");
    if (head == "delta") {
        double c = 1.0;
        if (!arg.empty()) c = std::stod(arg);
        std::vector<cplx> v(n, c);
        v[g->identity] = 0.0;
        return make_symbol(g, std::move(v), "delta");
    }
    if (head == "circle") {
        if (!is_cyclic_table(*g))
            throw std::invalid_argument(
                "circle symbol requires a cyclic group table");
        std::vector<cplx> v(n);
        for (int k = 0; k < n; ++k) {
            double sn = std::sin(std::numbers::pi * k / n);
            v[k] = 4.0 * sn * sn;
        }
        return make_symbol(g, std::move(v), "circle");
    }
    if (head == "coxeter" || head == "wordlength") {
        std::vector<int> gens;
        if (head == "coxeter") {
            gens = coxeter_generators(*g);
        } else {
            std::istringstream in(arg);
            std::string tok;
            while (std::getline(in, tok, ',')) gens.push_back(std::stoi(tok));
            if (gens.empty())
                throw std::invalid_argument(
                    "wordlength needs a comma-separated generator list");
        }
        auto len = word_length(*g, gens);
        std::vector<cplx> v(n);
        for (int s = 0; s < n; ++s) v[s] = static_cast<double>(len[s]);
        return make_symbol(g, std::move(v), head);
    }
    throw std::invalid_argument("unknown builtin symbol '" + spec + "'");
}

SymbolFunction load_symbol_file(const std::string& path, const GroupPtr& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open symbol file '" + path + "'");
    std::vector<cplx> values(g->order, 0.0);
    std::vector<char> seen(g->order, 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        int idx;
        if (!(ls >> idx)) {
            std::string probe;
            std::istringstream(line) >> probe;
            if (probe.empty() || probe[0] == '#') continue;  // blank/comment
            throw ParseError("expected 'index re [im]'", lineno);
        }
        if (idx < 0 || idx >= g->order)
            throw ParseError("element index " + std::to_string(idx) +
                                 " out of range",
                             lineno);
        if (seen[idx])
            throw ParseError("duplicate entry for element " +
                                 std::to_string(idx),
                             lineno);
        double re, im = 0.0;
        if (!(ls >> re)) throw ParseError("missing value", lineno);
        ls >> im;
        values[idx] = cplx(re, im);
        seen[idx] = 1;
    }
    for (int s = 0; s < g->order; ++s)
        if (!seen[s])
            throw ParseError("no value given for element " +
                             std::to_string(s));
    return make_symbol(g, std::move(values), "file " + path);
}

SymbolFunction load_symbol(const std::string& spec, const GroupPtr& g) {
    if (spec.rfind("list:", 0) == 0) {
        std::istringstream in(spec.substr(5));
        std::vector<cplx> values;
        std::string tok;
        while (std::getline(in, tok, ',')) values.push_back(std::stod(tok));
        return make_symbol(g, std::move(values), "list");
    }
    if (spec.rfind("file:", 0) == 0)
        return load_symbol_file(spec.substr(5), g);
    if (spec == "zero" || spec.rfind("delta", 0) == 0 || spec == "circle" ||
        spec == "coxeter" || spec.rfind("wordlength", 0) == 0)
        return builtin_psi(spec, g);
    return load_symbol_file(spec, g);
}

}  // namespace fmdil
