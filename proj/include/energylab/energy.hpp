#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "energylab/bigfloat.hpp"
#include "energylab/finite_set.hpp"

namespace energylab {

/// Exact multiplicity table x -> r_{A∘B}(x). Entries are canonically ordered
/// by value; counts sum to |A||B|.
struct RepFunction {
    Law law = Law::add;
    std::vector<std::pair<FieldElem, std::uint64_t>> table;

    mpz_class total_mass() const;
    std::uint64_t count_of(const FieldElem& x) const;
};

RepFunction rep_function(const FiniteSet& A, const FiniteSet& B, Law law);

/// E(A,B) = sum_x r_{A∘B}(x)^2, exact, O(|A||B|) table operations.
/// law must be add or mul; mul requires 0 not in A or B.
mpz_class energy(const FiniteSet& A, const FiniteSet& B, Law law);
mpz_class energy(const FiniteSet& A, Law law);

/// Literal quadruple enumeration; the independent oracle. Refuses inputs
/// with more than quad_cap quadruples.
mpz_class energy_bruteforce(const FiniteSet& A, const FiniteSet& B, Law law,
                            std::uint64_t quad_cap = 1000000);
mpz_class energy_bruteforce(const FiniteSet& A, Law law, std::uint64_t quad_cap = 1000000);

struct CauchySchwarzReport {
    mpz_class add_side;       // E+(A) * |A+A|
    mpz_class mul_side;       // Ex(A) * |A*A|
    mpz_class fourth_power;   // |A|^4
    bool pass = false;
};

/// Exact check of E+(A)|A+A| >= |A|^4 and Ex(A)|A*A| >= |A|^4.
CauchySchwarzReport cauchy_schwarz_check(const FiniteSet& A);

struct QuarterPowerReport {
    mpz_class union_energy;
    std::vector<mpz_class> part_energies;
    BigFloat lhs;   // E(union)^{1/4}, rounded down
    BigFloat rhs;   // sum E(part)^{1/4}, rounded up
    bool pass = false;
};

/// E(∪parts)^{1/4} <= sum E(part_i)^{1/4} with directed rounding at the
/// working precision; parts must be pairwise disjoint.
QuarterPowerReport quarter_power_check(const std::vector<FiniteSet>& parts, Law law);

namespace detail {

using PairTable = std::unordered_map<FieldElem, std::uint64_t, FieldElemHash>;

/// Multiplicity table of {a ∘ b}; no zero preconditions (raw counting).
PairTable pair_table(const FiniteSet& A, const FiniteSet& B, Law law);

/// Raw sum of squared multiplicities; no zero preconditions.
mpz_class table_energy(const FiniteSet& A, const FiniteSet& B, Law law);

mpz_class sum_of_squares(const PairTable& t);

}  // namespace detail

}  // namespace energylab
