#include "fmdil/json_io.hpp"

namespace fmdil {

namespace {

ordered_json vec_json(const Eigen::VectorXd& v) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

ordered_json mat_json(const Eigen::MatrixXd& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

ordered_json cplx_json(const cplx& z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

}  // namespace

ordered_json to_json(const PositiveDefiniteReport& rep) {
    ordered_json j;
    j["verdict"] = rep.verdict;
    j["min_eigenvalue"] = rep.min_eigenvalue;
    j["hermitian_residual"] = rep.hermitian_residual;
    if (!rep.verdict && rep.witness.size() > 0) {
        ordered_json w = ordered_json::array();
        for (int i = 0; i < rep.witness.size(); ++i)
            w.push_back(cplx_json(rep.witness(i)));
        j["witness"] = w;
    }
    return j;
}

ordered_json to_json(const CndReport& rep) {
    ordered_json j;
    j["verdict"] = rep.verdict;
    j["max_constrained_eigenvalue"] = rep.max_eigenvalue;
    j["identity_residual"] = rep.identity_residual;
    j["symmetry_residual"] = rep.symmetry_residual;
    j["witness"] = vec_json(rep.witness);
    j["witness_form_value"] = rep.witness_value;
    if (!rep.failure.empty()) j["failed_check"] = rep.failure;
    return j;
}

ordered_json to_json(const SchoenbergReport& rep) {
    ordered_json j;
    j["pass"] = rep.pass;
    j["vacuous"] = rep.vacuous;
    ordered_json pts = ordered_json::array();
    for (const auto& p : rep.points)
        pts.push_back(ordered_json{{"t", p.t},
                                   {"min_eigenvalue", p.min_eigenvalue},
                                   {"pass", p.pass}});
    j["points"] = pts;
    j["note"] = rep.note;
    return j;
}

ordered_json to_json(const Cocycle& c) {
    ordered_json j;
    j["dim"] = c.dim;
    j["basis_dependent"] = true;
    ordered_json b = ordered_json::array();
    for (const auto& v : c.b) b.push_back(vec_json(v));
    j["b"] = b;
    ordered_json pi = ordered_json::array();
    for (const auto& m : c.pi) pi.push_back(mat_json(m));
    j["pi"] = pi;
    j["construction_residual"] = c.construction_residual;
    return j;
}

ordered_json to_json(const CocycleLawReport& rep) {
    ordered_json j;
    j["cocycle_residual"] = rep.cocycle_residual;
    j["homomorphism_residual"] = rep.homomorphism_residual;
    j["orthogonality_residual"] = rep.orthogonality_residual;
    j["pass"] = rep.pass;
    j["failed_invariants"] = rep.failed_invariants;
    return j;
}

ordered_json to_json(const NormIdentityReport& rep) {
    return ordered_json{{"max_residual", rep.max_residual},
                        {"pass", rep.pass}};
}

ordered_json to_json(const GaussExp& a) {
    ordered_json j;
    j["dim"] = a.dim();
    ordered_json terms = ordered_json::array();
    for (const auto& t : a.terms()) {
        ordered_json term;
        term["coeff"] = cplx_json(t.coeff);
        term["freq"] = vec_json(t.freq);
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

ordered_json to_json(const CrossedElement& f) {
    ordered_json j;
    j["group"] = f.group->name;
    j["dim"] = f.cocycle->dim;
    ordered_json integrand = ordered_json::array();
    for (const auto& a : f.integrand) integrand.push_back(to_json(a));
    j["integrand"] = integrand;
    return j;
}

ordered_json to_json(const MarkovSemigroupReport& rep) {
    ordered_json j;
    j["t_grid"] = rep.t_grid;
    j["max_unital_residual"] = rep.max_unital_residual;
    j["max_real_residual"] = rep.max_real_residual;
    j["min_psd_eigenvalue"] = rep.min_psd_eigenvalue;
    j["max_trace_residual"] = rep.max_trace_residual;
    j["max_semigroup_residual"] = rep.max_semigroup_residual;
    j["pass"] = rep.pass;
    j["failed_invariants"] = rep.failed_invariants;
    return j;
}

ordered_json to_json(const DilationReport& rep) {
    ordered_json j;
    j["schema"] = "fmdil/dilation-report/v1";
    j["group"] = rep.group_name;
    j["psi"] = rep.psi_name;
    j["cocycle_dim"] = rep.cocycle_dim;
    j["t_grid"] = rep.t_grid;
    ordered_json pts = ordered_json::array();
    for (const auto& p : rep.points)
        pts.push_back(ordered_json{
            {"t", p.t},
            {"residual_B_vs_exp_minus_t_psi", p.residual_b_vs_t},
            {"residual_A_vs_exp_minus_t2_psi", p.residual_a_vs_t2}});
    j["dilation_identity"] = pts;
    j["cocycle_law_residual"] = rep.cocycle_law_residual;
    j["norm_identity_residual"] = rep.norm_identity_residual;
    j["semigroup_symbol_residual"] = rep.semigroup_symbol_residual;
    j["u_group_law_residual"] = rep.u_group_law_residual;
    j["action_frequency_residual"] = rep.action_frequency_residual;
    j["takesaki_identity_residual"] = rep.takesaki_identity_residual;
    j["star_hom_residual"] = rep.star_hom_residual;
    j["weight_preservation_residual"] = rep.weight_preservation_residual;
    j["ej_identity_residual"] = rep.ej_identity_residual;
    j["factorization_residual"] = rep.factorization_residual;
    j["mc_cross_check"] = ordered_json{
        {"element", rep.mc.element},
        {"t", rep.mc.t},
        {"estimate_re", rep.mc.estimate_re},
        {"estimate_im", rep.mc.estimate_im},
        {"stderr", rep.mc.stderr_},
        {"predicted_exp_minus_t2_psi", rep.mc.predicted_sq},
        {"predicted_exp_minus_t_psi", rep.mc.predicted_lin},
        {"sigma_distance_t2", rep.mc.sigma_dist_sq},
        {"sigma_distance_t", rep.mc.sigma_dist_lin}};
    j["seed"] = rep.seed;
    j["tol"] = rep.tol;
    j["pass"] = rep.pass;
    j["failed_invariants"] = rep.failed_invariants;
    j["notes"] = rep.notes;
    return j;
}

ordered_json to_json(const WeightCompatReport& rep) {
    ordered_json j;
    j["embedding_weight_residual"] = rep.embedding_weight_residual;
    j["weight_preservation_residual"] = rep.weight_preservation_residual;
    j["traciality_residual"] = rep.traciality_residual;
    j["ej_identity_residual"] = rep.ej_identity_residual;
    j["modular_flow_residual"] = rep.modular_flow_residual;
    j["pass"] = rep.pass;
    j["failed_invariants"] = rep.failed_invariants;
    return j;
}

ordered_json to_json(const SectorialityEstimate& est) {
    return ordered_json{{"lower_bound", est.lower_bound},
                        {"analytic_upper", est.analytic_upper}};
}

ordered_json to_json(const NormEstimate& est) {
    ordered_json j;
    j["p2_exact"] = est.p2_exact;
    j["lower_bound"] = est.lower_bound;
    j["lower_bound_amp2"] = est.lower_bound_amp2;
    j["cb_probe"] = est.cb_probe;
    j["hinf_norm"] = est.hinf_norm;
    j["ratio"] = est.ratio;
    return j;
}

}  // namespace fmdil
