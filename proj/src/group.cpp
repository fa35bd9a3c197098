#include "fmdil/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace fmdil {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return a->order == b->order && a->cayley == b->cayley;
}

namespace {

void check_table(const FiniteGroup& g) {
    const int n = g.order;
    // Range.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int v = g.mul(a, b);
            if (v < 0 || v >= n)
                throw GroupValidationError(
                    "range", {a, b},
                    "cayley entry (" + std::to_string(a) + "," +
                        std::to_string(b) + ") = " + std::to_string(v) +
                        " out of range 0.." + std::to_string(n - 1));
        }
    // Two-sided identity.
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (g.mul(cand, x) != x || g.mul(x, cand) != x) {
                ok = false;
                break;
            }
        if (ok) e = cand;
    }
    if (e < 0)
        throw GroupValidationError("identity", {},
                                   "table has no two-sided identity element");
    if (e != g.identity)
        throw GroupValidationError("identity", {e},
                                   "identity is not at the expected index");
    // Inverses.
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == e && g.mul(b, a) == e) {
                found = true;
                break;
            }
        if (!found)
            throw GroupValidationError(
                "inverses", {a},
                "element " + std::to_string(a) + " has no two-sided inverse");
    }
    // Associativity, exhaustive.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = g.mul(g.mul(a, b), c);
                int rhs = g.mul(a, g.mul(b, c));
                if (lhs != rhs)
                    throw GroupValidationError(
                        "associativity", {a, b, c},
                        "associativity fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) +
                            "): (ab)c = " + std::to_string(lhs) +
                            " but a(bc) = " + std::to_string(rhs));
            }
    // Latin rows/columns. Implied by the axioms above; kept as an
    // independent restatement of the cancellation property.
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = g.mul(a, b);
            if (seen[v])
                throw GroupValidationError(
                    "row-permutation", {a, b},
                    "row " + std::to_string(a) + " repeats value " +
                        std::to_string(v));
            seen[v] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            int v = g.mul(a, b);
            if (seen[v])
                throw GroupValidationError(
                    "column-permutation", {a, b},
                    "column " + std::to_string(b) + " repeats value " +
                        std::to_string(v));
            seen[v] = 1;
        }
    }
}

int find_identity_candidate(int order, const std::vector<int>& cayley) {
    for (int cand = 0; cand < order; ++cand) {
        bool ok = true;
        for (int x = 0; x < order; ++x)
            if (cayley[cand * order + x] != x || cayley[x * order + cand] != x) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    return -1;
}

}  // namespace

GroupPtr finish_group(int order, std::vector<int> cayley, std::string name) {
    if (order <= 0)
        throw GroupValidationError("range", {},
                                   "group order must be positive");
    if (static_cast<int>(cayley.size()) != order * order)
        throw GroupValidationError("range", {},
                                   "cayley table size does not match order");

    // Relabel so the identity sits at index 0; swapping two labels keeps the
    // rest of the enumeration stable.
    int e = find_identity_candidate(order, cayley);
    if (e > 0) {
        std::vector<int> relabel(order);
        for (int i = 0; i < order; ++i) relabel[i] = i;
        relabel[0] = e;
        relabel[e] = 0;
        std::vector<int> moved(order * order);
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                moved[a * order + b] =
                    relabel[cayley[relabel[a] * order + relabel[b]]];
        cayley.swap(moved);
    }

    auto g = std::make_shared<FiniteGroup>();
    g->order = order;
    g->cayley = std::move(cayley);
    g->identity = 0;
    g->name = std::move(name);
    check_table(*g);
    g->inverse.resize(order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (g->mul(a, b) == 0 && g->mul(b, a) == 0) {
                g->inverse[a] = b;
                break;
            }
    return g;
}

GroupPtr cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return finish_group(n, std::move(t), "cyclic " + std::to_string(n));
}

GroupPtr dihedral_group(int n) {
    if (n < 1)
        throw std::invalid_argument("dihedral parameter must be >= 1");
    // Element b*n + a encodes f^b r^a with r^n = 1, f^2 = 1, f r f = r^-1.
    const int order = 2 * n;
    std::vector<int> t(order * order);
    auto idx = [n](int flip, int rot) { return flip * n + rot; };
    for (int b1 = 0; b1 < 2; ++b1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int b2 = 0; b2 < 2; ++b2)
                for (int a2 = 0; a2 < n; ++a2) {
                    int rot = ((b2 ? n - a1 : a1) % n + a2) % n;
                    t[idx(b1, a1) * order + idx(b2, a2)] =
                        idx(b1 ^ b2, rot);
                }
    return finish_group(order, std::move(t), "dihedral " + std::to_string(n));
}

namespace {

std::vector<std::vector<int>> lex_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

}  // namespace

std::vector<int> symmetric_group_permutation(int n, int index) {
    auto all = lex_permutations(n);
    if (index < 0 || index >= static_cast<int>(all.size()))
        throw std::invalid_argument("permutation index out of range");
    return all[index];
}

GroupPtr symmetric_group(int n) {
    if (n < 1 || n > 5)
        throw std::invalid_argument(
            "symmetric group supported for 1 <= n <= 5");
    auto all = lex_permutations(n);
    const int order = static_cast<int>(all.size());
    std::map<std::vector<int>, int> rank;
    for (int i = 0; i < order; ++i) rank[all[i]] = i;
    std::vector<int> t(order * order);
    std::vector<int> comp(n);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            for (int i = 0; i < n; ++i) comp[i] = all[a][all[b][i]];
            t[a * order + b] = rank[comp];
        }
    return finish_group(order, std::move(t),
                        "symmetric " + std::to_string(n));
}

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b) {
    const int na = a->order, nb = b->order, order = na * nb;
    std::vector<int> t(order * order);
    auto idx = [nb](int i, int j) { return i * nb + j; };
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    t[idx(i1, j1) * order + idx(i2, j2)] =
                        idx(a->mul(i1, i2), b->mul(j1, j2));
    return finish_group(order, std::move(t),
                        "product (" + a->name + ") (" + b->name + ")");
}

namespace {

GroupPtr parse_family(std::istringstream& in) {
    std::string head;
    if (!(in >> head)) throw ParseError("empty group spec");
    auto read_int = [&in, &head]() {
        int n;
        if (!(in >> n))
            throw ParseError("expected integer after '" + head + "'");
        return n;
    };
    if (head == "cyclic") return cyclic_group(read_int());
    if (head == "dihedral") return dihedral_group(read_int());
    if (head == "symmetric") return symmetric_group(read_int());
    if (head == "product") {
        auto a = parse_family(in);
        auto b = parse_family(in);
        return product_group(a, b);
    }
    throw ParseError("unknown group family '" + head + "'");
}

}  // namespace

GroupPtr load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file '" + path + "'");
    std::string word;
    int line = 1;
    if (!(in >> word) || word != "order")
        throw ParseError("expected leading 'order N'", line);
    int n = 0;
    if (!(in >> n) || n <= 0)
        throw ParseError("invalid order value", line);
    std::vector<int> t;
    t.reserve(n * n);
    for (int i = 0; i < n * n; ++i) {
        int v;
        if (!(in >> v))
            throw ParseError("cayley table truncated: expected " +
                                 std::to_string(n * n) + " entries, got " +
                                 std::to_string(i),
                             1 + i / n + 1);
        t.push_back(v);
    }
    return finish_group(n, std::move(t), "file " + path);
}

GroupPtr load_group(const std::string& spec) {
    std::istringstream probe(spec);
    std::string head;
    probe >> head;
    if (head == "cyclic" || head == "dihedral" || head == "symmetric" ||
        head == "product") {
        std::istringstream in(spec);
        auto g = parse_family(in);
        std::string extra;
        if (in >> extra)
            throw ParseError("trailing tokens in group spec: '" + extra + "'");
        return g;
    }
    if (head == "file") {
        std::string path;
        probe >> path;
        if (path.empty()) throw ParseError("missing path after 'file'");
        return load_group_file(path);
    }
    // Fall back to treating the whole spec as a path.
    return load_group_file(spec);
}

Eigen::MatrixXcd left_regular(const FiniteGroup& g, int s) {
    if (s < 0 || s >= g.order)
        throw std::invalid_argument("element index out of range");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(g.order, g.order);
    for (int c = 0; c < g.order; ++c) m(g.mul(s, c), c) = 1.0;
    return m;
}

GroupAlgebraElement GroupAlgebraElement::zero(GroupPtr g) {
    GroupAlgebraElement x;
    x.coeffs.assign(g->order, cplx(0.0, 0.0));
    x.group = std::move(g);
    return x;
}

GroupAlgebraElement GroupAlgebraElement::basis(GroupPtr g, int s) {
    if (s < 0 || s >= g->order)
        throw std::invalid_argument("element index out of range");
    auto x = zero(std::move(g));
    x.coeffs[s] = 1.0;
    return x;
}

namespace {

void require_same_group(const GroupAlgebraElement& x,
                        const GroupAlgebraElement& y) {
    if (!same_group(x.group, y.group))
        throw std::invalid_argument("group mismatch");
}

}  // namespace

GroupAlgebraElement ga_add(const GroupAlgebraElement& x,
                           const GroupAlgebraElement& y) {
    require_same_group(x, y);
    GroupAlgebraElement out = x;
    for (int s = 0; s < x.group->order; ++s) out.coeffs[s] += y.coeffs[s];
    return out;
}

GroupAlgebraElement ga_scale(cplx c, const GroupAlgebraElement& x) {
    GroupAlgebraElement out = x;
    for (auto& v : out.coeffs) v *= c;
    return out;
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& x,
                           const GroupAlgebraElement& y) {
    require_same_group(x, y);
    const auto& g = *x.group;
    auto out = GroupAlgebraElement::zero(x.group);
    for (int s = 0; s < g.order; ++s) {
        if (x.coeffs[s] == 0.0) continue;
        for (int r = 0; r < g.order; ++r)
            out.coeffs[g.mul(s, r)] += x.coeffs[s] * y.coeffs[r];
    }
    return out;
}

GroupAlgebraElement ga_adjoint(const GroupAlgebraElement& x) {
    const auto& g = *x.group;
    auto out = GroupAlgebraElement::zero(x.group);
    for (int s = 0; s < g.order; ++s)
        out.coeffs[s] = std::conj(x.coeffs[g.inv(s)]);
    return out;
}

Eigen::MatrixXcd to_matrix(const GroupAlgebraElement& x) {
    const auto& g = *x.group;
    Eigen::MatrixXcd m(g.order, g.order);
    for (int r = 0; r < g.order; ++r)
        for (int c = 0; c < g.order; ++c)
            m(r, c) = x.coeffs[g.mul(r, g.inv(c))];
    return m;
}

cplx plancherel_trace(const GroupAlgebraElement& x) {
    return x.coeffs[x.group->identity];
}

double lp_norm(const GroupAlgebraElement& x, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm requires p >= 1");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_matrix(x));
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv.maxCoeff() : 0.0;
    if (smax == 0.0) return 0.0;
    if (std::isinf(p)) return smax;
    double acc = 0.0;
    for (int i = 0; i < sv.size(); ++i)
        acc += std::pow(sv(i) / smax, p);
    acc /= static_cast<double>(x.group->order);
    return smax * std::pow(acc, 1.0 / p);
}

double max_coeff_deviation(const GroupAlgebraElement& x,
                           const GroupAlgebraElement& y) {
    require_same_group(x, y);
    double m = 0.0;
    for (int s = 0; s < x.group->order; ++s)
        m = std::max(m, std::abs(x.coeffs[s] - y.coeffs[s]));
    return m;
}

std::string matrix_to_csv(const Eigen::MatrixXcd& m) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += fmt17(m(r, c).real());
            out += ',';
            out += fmt17(m(r, c).imag());
        }
        out += '\n';
    }
    return out;
}

}  // namespace fmdil
