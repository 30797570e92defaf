#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "energylab/bigfloat.hpp"
#include "energylab/energy.hpp"
#include "energylab/finite_set.hpp"

namespace energylab {

/// Certificate of the constructive large-energy extraction. With
/// K = |A|^3 / E(A) and epsilon = 1/(4k):
///   - P = {s : |A_s| >= eps|A|/(2K)} over shifts/ratios, symmetric;
///   - s_witness has |A_s| >= |A|/(2K) and in-P pair mass
///     > (1-eps)|A_s|^2 (first such s in canonical order);
///   - A_star = vertices of degree >= (1-2eps)|A_s| in the P-membership
///     graph (with loops) on A_s.
/// The explicit guarantees |A_star| >= |A|/(8kK), |P| <= 8kK|A| and the
/// k-fold covering bound |A ∩ (P+a_1) ∩ ... ∩ (P+a_k)| >= |A|/(4K) are all
/// exact rational inequalities.
struct BsgCertificate {
    FiniteSet A_star;
    FiniteSet P;
    FieldElem s_witness;
    mpq_class K;
    int k = 2;
    mpq_class epsilon;
    Law law = Law::add;

    FiniteSet A_s;               // vertex set of the graph
    mpz_class edge_count;        // ordered pairs (x,y) in A_s^2 with x ~ y
    mpz_class source_energy;
};

BsgCertificate bsg_extract(const FiniteSet& A, int k, Law law);

struct BsgVerification {
    std::uint64_t checked_tuples = 0;
    mpz_class min_intersection;
    bool exhaustive = false;
    bool pass = false;
    std::vector<FieldElem> counterexample;   // first failing tuple, if any
};

struct BsgSampling {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
};

/// Checks the k-fold covering bound on every k-tuple from A_star when
/// |A_star|^k <= exhaustive_cap, otherwise on sampled tuples.
BsgVerification verify_bsg(const BsgCertificate& cert, const FiniteSet& A,
                           std::optional<BsgSampling> sampling = std::nullopt,
                           std::uint64_t exhaustive_cap = 100000);

struct SpEnergyReport {
    FiniteSet A1;
    mpz_class e_add_A1;
    mpz_class e_mul_A;
    BigFloat size_ratio;      // |A1| / (Ex(A) |A|^{-2})
    BigFloat energy_ratio;    // (E+(A1))^2 (Ex(A))^9 / |A|^{32}
};

/// Multiplicative BSG with k = 2; reports the extracted subset size against
/// Ex(A)|A|^{-2} and the combined energy ratio. Characteristic 0 only.
SpEnergyReport sp_energy_pipeline(const FiniteSet& A);

}  // namespace energylab
