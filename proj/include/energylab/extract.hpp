#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "energylab/bigfloat.hpp"
#include "energylab/energy.hpp"
#include "energylab/finite_set.hpp"

namespace energylab {

/// Which pair statistic the pigeonhole runs on: ratios a/b (lines through the
/// origin), sums a+b, or differences a-b.
enum class PairStat { ratio, sum, diff };

const char* pair_stat_name(PairStat s);

/// Output of the two-stage dyadic pigeonhole. All fields re-verifiable by
/// exact recounting from `source`:
///   - every x in P has pair count r(x) in [t, 2t)  (dyadic class convention
///     fixed as [t, 2t), t = 2^floor(log2 r); the closed-open flavor differs
///     from the half-open (t, 2t] one by reindexing only);
///   - S is exactly the set of ordered pairs of source x source whose
///     statistic lies in P, stored as index pairs into the canonical order;
///   - A1 is the dyadic class of popular abscissae of S (or, if the first
///     stage is too popular, of ordinates of S restricted to those columns),
///     with per-line count in [q, 2q).
struct ExtractionCertificate {
    enum class Axis { abscissae, ordinates };

    FiniteSet source;
    PairStat law = PairStat::ratio;
    FiniteSet A1;
    FiniteSet P;
    std::uint64_t t = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> S;
    std::uint64_t q = 0;
    Axis axis = Axis::abscissae;
    std::uint64_t q_prime = 0;                   // first-stage level
    std::vector<std::uint32_t> stage1_columns;   // populated in ordinate mode
    mpz_class source_energy;                     // sum of squared pair counts
    mpq_class d_star;                            // |A|^2 |A1|^4 / E^2
    bool q_le_a1 = false;
};

/// Weight-maximizing dyadic class selection (weight t^2 |class|, ties to the
/// smallest t), then popular abscissae / ordinates at exact class weight
/// (ties to the smallest level).
ExtractionCertificate extract_structured_subset(const FiniteSet& A, PairStat law);

/// Recounts every certificate field from scratch; throws invariant_error on
/// any mismatch. Also re-checks the weight accounting
/// |P| t^2 >= E / (8 ceil(log2(2|A|))).
void verify_certificate(const ExtractionCertificate& cert);

enum class ExtractionBound {
    add_energy_plane,   // E+(A1) vs |A1|^{11/2} |A|^{3/2} Ex(A)^{-3/2}   (ratio law)
    add_energy_line,    // E+(A1) Ex(A) vs |A1|^{9/2} |A|                 (ratio law)
    mul_energy_sums,    // Ex(A1) vs q^{-4} |P|^3 |A|^3                   (sum law)
};

const char* extraction_bound_name(ExtractionBound b);

struct ExtractionBoundReport {
    ExtractionBound target;
    mpz_class lhs;            // exact energy side
    BigFloat rhs;             // power expression, working precision
    BigFloat ratio;           // lhs / rhs
    // For the sum-law target: sizes of A1*A1 and A1/A1 against the
    // Cauchy-Schwarz consequence E+(A)^3 / (|A1|^4 |A|^3).
    mpz_class product_set_size = 0;
    mpz_class quotient_set_size = 0;
    BigFloat subset_growth_bound;
};

/// Evaluates one of the extraction quality inequalities as an exact lhs vs a
/// high-precision rhs; purely a ratio report (absolute constants and log
/// powers are not part of the claim).
ExtractionBoundReport verify_extraction_bound(const ExtractionCertificate& cert, ExtractionBound target);

}  // namespace energylab
