#pragma once

#include <optional>
#include <string>
#include <vector>

#include "energylab/extract.hpp"

namespace energylab {

/// One pruning step: the monitored energy of the remainder before removal,
/// and the removed subset with the certificate that produced it (absent on
/// later chunks of a split extraction).
struct DecompositionStep {
    int j = 0;
    std::size_t c_size = 0;
    mpz_class monitored_energy;
    FiniteSet D;
    std::optional<ExtractionCertificate> cert;
};

/// ceil(n^{1/k}) in exact integer arithmetic.
mpz_class ceil_root(const mpz_class& n, unsigned long k);

/// Default pruning parameter: ceil(|A|^{1/4}) over the rationals,
/// ceil(|A|^{1/5}) in positive characteristic.
mpq_class default_M(const FiniteSet& A);

struct BwDecomposition {
    mpq_class M;
    mpq_class stop_threshold;   // |A|^3 / M
    std::vector<DecompositionStep> steps;
    FiniteSet B, C;
    mpz_class e_add_B;          // E+(B)
    mpz_class e_mul_C;          // Ex(C)
    BigFloat predicted_bound;   // M |A|^{5/2} (char 0) or M^{3/2} |A|^{5/2}
    BigFloat bound_ratio;       // E+(B) / predicted
    std::size_t step_cap = 0;
    std::vector<std::string> warnings;
};

/// Iterative pruning: extract mul-slope-structured subsets out of A until
/// the multiplicative energy of the remainder drops to |A|^3 / M. Exact
/// partition B ⊔ C = A.
BwDecomposition bw_decompose(const FiniteSet& A, std::optional<mpq_class> M = std::nullopt);

struct BalancedDecomposition {
    std::vector<DecompositionStep> steps;
    FiniteSet B, C;
    mpz_class e_add_B, e_mul_C;
    BigFloat ratio_pow7;      // E+(B) Ex(C)^{3/2} / |A|^7
    BigFloat ratio_pow11_2;   // E+(B) Ex(C) / |A|^{11/2}
    int branch = 0;           // 0 outset split, 1 size stop, 2 energy stop
    std::vector<std::string> warnings;
};

/// Balanced variant: both parts of size >= ceil(|A|/3); removed subsets are
/// capped at |A|/100 elements per step by chunking.
BalancedDecomposition balanced_decompose(const FiniteSet& A);

/// Orientation-swapped balanced variant (difference pigeonhole; the removed
/// parts have small multiplicative energy, the remainder small additive
/// energy). Used by the product pipeline. In the result, e_add_B holds
/// Ex(B) and e_mul_C holds E+(C) — the mirrored energy types.
BalancedDecomposition balanced_decompose_swapped(const FiniteSet& A);

struct ProductPipelineResult {
    FiniteSet B, C;              // disjoint, sizes >= |A|/9
    mpz_class e_add_B, e_mul_C;
    BigFloat ratio_pow28_5;      // E+(B) Ex(C) / |A|^{28/5}
    bool swapped_branch = false; // true when the overlapping pair was replaced
    std::vector<std::string> warnings;
};

/// Two nested balanced decompositions and a compare-and-swap, producing
/// disjoint B, C with the product of energies controlled.
ProductPipelineResult product_energy_pipeline(const FiniteSet& A);

enum class TranslateVariant { mult_translate, reciprocal };

struct TranslateDecomposition {
    TranslateVariant variant;
    FieldElem alpha;
    mpq_class M;
    mpq_class stop_threshold;
    std::vector<DecompositionStep> steps;
    FiniteSet B, C;
    mpz_class e_B;       // Ex(B) (mult-translate) or E+(B) (reciprocal)
    mpz_class e_C;       // Ex(alpha+C) resp. E+(1/C)
    BigFloat ratio_B, ratio_C;   // against |A|^{3-delta}
    std::vector<std::string> warnings;
};

/// Same iteration as bw_decompose, but the pigeonhole runs on differences
/// (P ⊆ A-A) and the monitored remainder energy is Ex(alpha + C) or E+(1/C).
/// Zero elements arising in alpha + C are dropped from the energy with a
/// warning. The reciprocal variant is restricted to characteristic 0.
TranslateDecomposition translate_decompose(const FiniteSet& A, const FieldElem& alpha, TranslateVariant variant);

struct RsetDecomposition {
    FiniteSet R;
    FiniteSet R1, R2;            // |R1|, |R2| >= ceil(|R|/2)
    mpz_class e_mul_R1, e_add_R2;
    BigFloat ratio_R1, ratio_R2; // against |R'|^{11/4}
    std::vector<std::string> warnings;
};

/// Builds R = R[A], verifies the exact identities R = 1-R and
/// (R\{0})^{-1} = R\{0}, and applies the translate machinery on both sides.
RsetDecomposition r_set_decompose(const FiniteSet& A);

}  // namespace energylab
