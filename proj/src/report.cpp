#include "energylab/report.hpp"

namespace energylab {

std::string z_str(const mpz_class& v) { return v.get_str(); }

std::string q_str(const mpq_class& v) { return v.get_str(); }

Json set_summary(const FiniteSet& s, std::size_t element_cap) {
    Json j;
    j["field"] = s.field().describe();
    j["size"] = s.size();
    if (s.size() <= element_cap) {
        Json elems = Json::array();
        for (const auto& e : s.elems()) elems.push_back(e.str());
        j["elems"] = std::move(elems);
    }
    return j;
}

Json certificate_json(const ExtractionCertificate& cert, bool include_pairs) {
    Json j;
    j["law"] = pair_stat_name(cert.law);
    j["t"] = cert.t;
    j["q"] = cert.q;
    j["q_prime"] = cert.q_prime;
    j["axis"] = cert.axis == ExtractionCertificate::Axis::abscissae ? "abscissae" : "ordinates";
    j["A1"] = set_summary(cert.A1);
    j["P"] = set_summary(cert.P);
    j["S_size"] = cert.S.size();
    j["d_star"] = q_str(cert.d_star);
    j["source_energy"] = z_str(cert.source_energy);
    j["q_le_a1"] = cert.q_le_a1;
    if (include_pairs) {
        Json pairs = Json::array();
        for (const auto& [i, jdx] : cert.S) {
            pairs.push_back(Json::array({cert.source[i].str(), cert.source[jdx].str()}));
        }
        j["S"] = std::move(pairs);
    }
    return j;
}

Json steps_json(const std::vector<DecompositionStep>& steps) {
    Json arr = Json::array();
    for (const auto& st : steps) {
        Json j;
        j["j"] = st.j;
        j["c_size"] = st.c_size;
        j["monitored_energy"] = z_str(st.monitored_energy);
        j["removed"] = set_summary(st.D);
        if (st.cert) j["certificate"] = certificate_json(*st.cert);
        arr.push_back(std::move(j));
    }
    return arr;
}

Json bw_json(const BwDecomposition& d) {
    Json j;
    j["M"] = q_str(d.M);
    j["stop_threshold"] = q_str(d.stop_threshold);
    j["B"] = set_summary(d.B);
    j["C"] = set_summary(d.C);
    j["e_add_B"] = z_str(d.e_add_B);
    j["e_mul_C"] = z_str(d.e_mul_C);
    j["predicted_bound"] = d.predicted_bound.str6();
    j["bound_ratio"] = d.bound_ratio.str6();
    j["steps"] = steps_json(d.steps);
    j["step_cap"] = d.step_cap;
    return j;
}

Json balanced_json(const BalancedDecomposition& d, const FiniteSet& A) {
    Json j;
    j["input_size"] = A.size();
    j["branch"] = d.branch;
    j["B"] = set_summary(d.B);
    j["C"] = set_summary(d.C);
    j["e_add_B"] = z_str(d.e_add_B);
    j["e_mul_C"] = z_str(d.e_mul_C);
    j["ratio_pow7"] = d.ratio_pow7.str6();
    j["ratio_pow11_2"] = d.ratio_pow11_2.str6();
    j["steps"] = steps_json(d.steps);
    return j;
}

Json product_json(const ProductPipelineResult& d, const FiniteSet& A) {
    Json j;
    j["input_size"] = A.size();
    j["B"] = set_summary(d.B);
    j["C"] = set_summary(d.C);
    j["e_add_B"] = z_str(d.e_add_B);
    j["e_mul_C"] = z_str(d.e_mul_C);
    j["ratio_pow28_5"] = d.ratio_pow28_5.str6();
    j["swapped_branch"] = d.swapped_branch;
    return j;
}

Json translate_json(const TranslateDecomposition& d) {
    Json j;
    j["variant"] = d.variant == TranslateVariant::mult_translate ? "mult-translate" : "reciprocal";
    j["alpha"] = d.alpha.str();
    j["M"] = q_str(d.M);
    j["B"] = set_summary(d.B);
    j["C"] = set_summary(d.C);
    j["e_B"] = z_str(d.e_B);
    j["e_C"] = z_str(d.e_C);
    j["ratio_B"] = d.ratio_B.str6();
    j["ratio_C"] = d.ratio_C.str6();
    j["steps"] = steps_json(d.steps);
    return j;
}

Json rset_json(const RsetDecomposition& d) {
    Json j;
    j["R"] = set_summary(d.R);
    j["R1"] = set_summary(d.R1);
    j["R2"] = set_summary(d.R2);
    j["e_mul_R1"] = z_str(d.e_mul_R1);
    j["e_add_R2"] = z_str(d.e_add_R2);
    j["ratio_R1"] = d.ratio_R1.str6();
    j["ratio_R2"] = d.ratio_R2.str6();
    return j;
}

Json bsg_json(const BsgCertificate& cert, const BsgVerification* ver) {
    Json j;
    j["law"] = law_name(cert.law);
    j["k"] = cert.k;
    j["K"] = q_str(cert.K);
    j["epsilon"] = q_str(cert.epsilon);
    j["s_witness"] = cert.s_witness.str();
    j["A_star"] = set_summary(cert.A_star);
    j["P"] = set_summary(cert.P);
    j["A_s_size"] = cert.A_s.size();
    j["edge_count"] = z_str(cert.edge_count);
    j["source_energy"] = z_str(cert.source_energy);
    if (ver) {
        Json v;
        v["checked_tuples"] = ver->checked_tuples;
        v["min_intersection"] = z_str(ver->min_intersection);
        v["exhaustive"] = ver->exhaustive;
        v["pass"] = ver->pass;
        if (!ver->counterexample.empty()) {
            Json tuple = Json::array();
            for (const auto& e : ver->counterexample) tuple.push_back(e.str());
            v["counterexample"] = std::move(tuple);
        }
        j["verification"] = std::move(v);
    }
    return j;
}

Json growth_json(const GrowthReport& g) {
    Json j;
    j["p"] = g.p;
    j["A"] = set_summary(g.A);
    j["truncated"] = g.truncated;
    j["B"] = set_summary(g.B);
    j["C"] = set_summary(g.C);
    j["Q"] = z_str(g.Q);
    j["coverage"] = q_str(g.coverage);
    j["e_cal"] = z_str(g.e_cal);
    j["zero_term"] = z_str(g.zero_term);
    j["energy_sum_product"] = z_str(g.energy_sum_product);
    j["term_main"] = g.term_main.str6();
    j["term_second"] = g.term_second.str6();
    j["e_cal_ratio"] = g.e_cal_ratio.str6();
    j["cs_chain_ok"] = g.cs_chain_ok;
    j["mass"] = z_str(g.counts.total_mass);
    return j;
}

Json wrap_report(const Json& config_echo, const Json& results, const std::vector<std::string>& warnings) {
    Json j;
    j["schema"] = kReportSchema;
    j["config"] = config_echo;
    j["results"] = results;
    j["warnings"] = warnings;
    return j;
}

}  // namespace energylab
