#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "energylab/bigfloat.hpp"
#include "energylab/decompose.hpp"
#include "energylab/finite_set.hpp"

namespace energylab {

/// Representation counts N(x) = #{(a,b,c,d) in B^2 x C^2 : a != d,
/// x = (ab - c)/(a - d)}, dense over F_p.
struct HadCounts {
    std::int64_t p = 0;
    std::vector<std::uint64_t> N;
    mpz_class total_mass;            // sum_x N(x); |B|^2 |C|^2 when B, C disjoint
    std::uint64_t skipped_a_eq_d = 0;
};

HadCounts had_representation_counts(const FiniteSet& B, const FiniteSet& C);

struct HadSolutionCount {
    mpz_class e_cal;       // sum_{x != 0} N(x)^2
    mpz_class zero_term;   // N(0)^2, reported separately
};

HadSolutionCount had_solution_count(const FiniteSet& B, const FiniteSet& C);

struct RangeReport {
    mpz_class Q;           // |{(ab - c)/(a - d) : a,b,c,d in A, a != d}|
    mpq_class coverage;    // Q / p
};

RangeReport range_set(const FiniteSet& A);

/// Which one-parameter family of pair energies to tabulate over x in F_p^*.
enum class DilateLaw {
    add_dilate,      // E+(A, xA)
    mul_translate,   // Ex(A, x+A)
};

const char* dilate_law_name(DilateLaw law);

struct DilateEnergies {
    DilateLaw law = DilateLaw::add_dilate;
    std::vector<mpz_class> per_x;   // index by x, entry 0 unused
    mpz_class total;                // sum over x != 0
    mpz_class self_energy;          // E+(A) or Ex(A)
    BigFloat total_ratio;           // total / |A|^4
    bool floor_ok = false;          // p * E(x) >= |A|^4 for every x != 0
    std::vector<std::string> warnings;
};

/// Full table of E(A, x∘A) over x in F_p^*, with the exact pointwise floor
/// check E >= |A|^4/p. Energies are raw quadruple counts (zeros in x+A are
/// counted, matching the defining equation).
DilateEnergies energy_over_dilates(const FiniteSet& A, DilateLaw law);

struct MomentReport {
    mpq_class s;
    BigFloat lhs;     // sum_{x != 0} (E(x) - |A|^4/p)^{1+s}
    BigFloat rhs;     // p^{1-s/3} E(A)^{2s/3} |A|^{2+4s/3}
    BigFloat ratio;
    std::vector<std::string> warnings;
};

MomentReport moment_sum(const FiniteSet& A, const mpq_class& s, DilateLaw law);

struct RichReport {
    FiniteSet X;                 // {x : E(x) > E(A)/K}
    BigFloat bound;              // K^4 |A|^6 / E(A)^2
    BigFloat ratio;              // |X| / bound
    // Dyadic ladder of Prop-style level sets with M^3 = p E(A) / (8 |A|^4):
    // X_i = {x : 2^i E/M < E(x) <= min(2^{i+1} E/M, E)}; cube-exact splits.
    std::vector<std::pair<int, std::uint64_t>> level_sets;
    std::uint64_t small_count = 0;   // |{x : E(x) <= E(A)/M}|
};

RichReport rich_dilate_count(const FiniteSet& A, const mpq_class& K, DilateLaw law);

struct PartialSumReport {
    mpz_class sum;               // sum_{x in X} E(A, x∘A)
    BigFloat bound_plane;        // E(A)^{1/2} |A|^{3/2} |X|^{3/4}
    BigFloat bound_alt;          // |A|^{13/4} |X|^{1/2}
    BigFloat ratio_plane, ratio_alt;
    bool size_ok = false;        // |X| <= |A|^2
    bool mass_ok = false;        // |A|^2 |X| <= p^2
    bool bkt_ok = false;         // sum_X (E - |A|^4/p) <= p |A|^2, unconditional
};

PartialSumReport partial_energy_sum(const FiniteSet& A, const FiniteSet& X, DilateLaw law);

struct GrowthReport {
    std::int64_t p = 0;
    FiniteSet A;                 // working set (canonical prefix if truncated)
    bool truncated = false;
    FiniteSet B, C;              // equation roles: a,b in B; c,d in C
    HadCounts counts;
    mpz_class Q;
    mpq_class coverage;
    mpz_class e_cal, zero_term;
    mpz_class energy_sum_product;   // sum_x Ex(B, B-x) E+(C, xC)
    BigFloat term_main;             // |A|^8 / p
    BigFloat term_second;           // p^{2/3} |A|^{10/3} [E+ Ex^{3/2}]^{4/15}
    BigFloat e_cal_ratio;           // e_cal * p / |A|^8
    bool cs_chain_ok = false;       // Q (e_cal + zero_term) >= |B|^4 |C|^4
    std::vector<std::string> warnings;
};

/// Balanced decomposition of A, representation counts on the two parts, the
/// exact Cauchy-Schwarz chain, and both terms of the final energy estimate.
GrowthReport had_pipeline(const FiniteSet& A);

namespace detail {

/// Raw pair energy over F_p (no zero preconditions): number of quadruples
/// (a,b,a',b') with a∘b = a'∘b', residue vectors already reduced.
mpz_class fp_pair_energy(const std::vector<std::int64_t>& A, const std::vector<std::int64_t>& B,
                         std::int64_t p, bool multiplicative);

}  // namespace detail

}  // namespace energylab
