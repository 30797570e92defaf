#include "energylab/energy.hpp"

#include <algorithm>

namespace energylab {

namespace detail {

PairTable pair_table(const FiniteSet& A, const FiniteSet& B, Law law) {
    if (!(A.field() == B.field())) throw input_error("pair_table: field mismatch");
    PairTable t;
    t.reserve(A.size() * B.size());
    for (const auto& a : A.elems()) {
        for (const auto& b : B.elems()) {
            ++t[apply_law(a, b, law)];
        }
    }
    return t;
}

mpz_class sum_of_squares(const PairTable& t) {
    mpz_class e = 0;
    for (const auto& [value, count] : t) {
        e += mpz_class(static_cast<unsigned long>(count)) * static_cast<unsigned long>(count);
    }
    return e;
}

mpz_class table_energy(const FiniteSet& A, const FiniteSet& B, Law law) {
    if (A.empty() || B.empty()) return 0;
    return sum_of_squares(pair_table(A, B, law));
}

}  // namespace detail

mpz_class RepFunction::total_mass() const {
    mpz_class m = 0;
    for (const auto& [value, count] : table) m += static_cast<unsigned long>(count);
    return m;
}

std::uint64_t RepFunction::count_of(const FieldElem& x) const {
    auto it = std::lower_bound(table.begin(), table.end(), x,
                               [](const auto& entry, const FieldElem& v) { return entry.first < v; });
    if (it != table.end() && it->first == x) return it->second;
    return 0;
}

RepFunction rep_function(const FiniteSet& A, const FiniteSet& B, Law law) {
    if (!(A.field() == B.field())) throw input_error("rep_function: field mismatch");
    if (law == Law::div && B.contains_zero()) throw input_error("rep_function: division with 0 in B");
    RepFunction rf;
    rf.law = law;
    auto t = detail::pair_table(A, B, law);
    rf.table.assign(t.begin(), t.end());
    std::sort(rf.table.begin(), rf.table.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return rf;
}

namespace {

void check_energy_pre(const FiniteSet& A, const FiniteSet& B, Law law) {
    if (!(A.field() == B.field())) throw input_error("energy: field mismatch");
    if (law != Law::add && law != Law::mul) throw input_error("energy: law must be add or mul");
    if (law == Law::mul && (A.contains_zero() || B.contains_zero())) {
        throw input_error("energy: 0 not allowed under mul");
    }
}

}  // namespace

mpz_class energy(const FiniteSet& A, const FiniteSet& B, Law law) {
    check_energy_pre(A, B, law);
    return detail::table_energy(A, B, law);
}

mpz_class energy(const FiniteSet& A, Law law) { return energy(A, A, law); }

mpz_class energy_bruteforce(const FiniteSet& A, const FiniteSet& B, Law law, std::uint64_t quad_cap) {
    check_energy_pre(A, B, law);
    std::uint64_t pairs = static_cast<std::uint64_t>(A.size()) * B.size();
    if (pairs != 0 && pairs > quad_cap / pairs) {
        throw input_error("energy_bruteforce: quadruple cap exceeded");
    }
    std::vector<FieldElem> values;
    values.reserve(pairs);
    for (const auto& a : A.elems()) {
        for (const auto& b : B.elems()) {
            values.push_back(apply_law(a, b, law));
        }
    }
    mpz_class e = 0;
    for (const auto& v : values) {
        unsigned long matches = 0;
        for (const auto& w : values) {
            if (v == w) ++matches;
        }
        e += matches;
    }
    return e;
}

mpz_class energy_bruteforce(const FiniteSet& A, Law law, std::uint64_t quad_cap) {
    return energy_bruteforce(A, A, law, quad_cap);
}

CauchySchwarzReport cauchy_schwarz_check(const FiniteSet& A) {
    if (A.contains_zero()) throw input_error("cauchy_schwarz_check: 0 in A");
    CauchySchwarzReport r;
    mpz_class n(static_cast<unsigned long>(A.size()));
    r.fourth_power = n * n * n * n;
    r.add_side = energy(A, Law::add) * static_cast<unsigned long>(pointwise_combine(A, A, Law::add).size());
    r.mul_side = energy(A, Law::mul) * static_cast<unsigned long>(pointwise_combine(A, A, Law::mul).size());
    r.pass = r.add_side >= r.fourth_power && r.mul_side >= r.fourth_power;
    return r;
}

QuarterPowerReport quarter_power_check(const std::vector<FiniteSet>& parts, Law law) {
    if (parts.empty()) throw input_error("quarter_power_check: no parts");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (!parts[i].disjoint_from(parts[j])) {
                throw input_error("quarter_power_check: parts overlap");
            }
        }
    }
    QuarterPowerReport r;
    FiniteSet u = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) u = u.union_with(parts[i]);
    r.union_energy = energy(u, law);
    r.lhs = root_n(r.union_energy, 4, MPFR_RNDD);
    BigFloat rhs;
    for (const auto& part : parts) {
        r.part_energies.push_back(part.empty() ? mpz_class(0) : energy(part, law));
        rhs = rhs.add(root_n(r.part_energies.back(), 4, MPFR_RNDU), MPFR_RNDU);
    }
    r.rhs = rhs;
    r.pass = r.lhs <= r.rhs;
    return r;
}

}  // namespace energylab
