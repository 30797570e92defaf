#include "energylab/fpgrowth.hpp"

#include <algorithm>

namespace energylab {

namespace {

void require_prime(const FiniteSet& A, const char* who) {
    if (!A.field().is_prime_field()) throw input_error(std::string(who) + ": prime field input required");
}

mpz_class size_z(const FiniteSet& s) { return mpz_class(static_cast<unsigned long>(s.size())); }

mpz_class pow_z(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Scratch counting buffer with a touched list, reused across the x-loop.
struct DenseCounter {
    explicit DenseCounter(std::int64_t p) : counts(static_cast<std::size_t>(p), 0) {}

    void bump(std::int64_t v) {
        if (counts[static_cast<std::size_t>(v)]++ == 0) touched.push_back(v);
    }

    mpz_class energy_and_reset() {
        unsigned __int128 e = 0;
        for (std::int64_t v : touched) {
            std::uint64_t c = counts[static_cast<std::size_t>(v)];
            e += static_cast<unsigned __int128>(c) * c;
            counts[static_cast<std::size_t>(v)] = 0;
        }
        touched.clear();
        mpz_class out(static_cast<unsigned long>(e >> 64));
        out <<= 64;
        out += static_cast<unsigned long>(e & 0xffffffffffffffffull);
        return out;
    }

    std::vector<std::uint64_t> counts;
    std::vector<std::int64_t> touched;
};

}  // namespace

namespace detail {

mpz_class fp_pair_energy(const std::vector<std::int64_t>& A, const std::vector<std::int64_t>& B,
                         std::int64_t p, bool multiplicative) {
    DenseCounter counter(p);
    for (std::int64_t a : A) {
        for (std::int64_t b : B) {
            counter.bump(multiplicative ? mod_mul(a, b, p) : (a + b) % p);
        }
    }
    return counter.energy_and_reset();
}

}  // namespace detail

const char* dilate_law_name(DilateLaw law) {
    return law == DilateLaw::add_dilate ? "add-dilate" : "mul-translate";
}

HadCounts had_representation_counts(const FiniteSet& B, const FiniteSet& C) {
    require_prime(B, "had_representation_counts");
    if (!(B.field() == C.field())) throw input_error("had_representation_counts: field mismatch");
    std::int64_t p = B.field().characteristic();
    HadCounts hc;
    hc.p = p;
    hc.N.assign(static_cast<std::size_t>(p), 0);
    std::vector<std::int64_t> vb = B.residues(), vc = C.residues();
    // inv_ad[(a,d)] for a != d
    std::vector<std::int64_t> inv_ad(vb.size() * vc.size(), -1);
    for (std::size_t ia = 0; ia < vb.size(); ++ia) {
        for (std::size_t id = 0; id < vc.size(); ++id) {
            std::int64_t diff = (vb[ia] - vc[id] + p) % p;
            if (diff != 0) inv_ad[ia * vc.size() + id] = mod_inv(diff, p);
        }
    }
    for (std::size_t ia = 0; ia < vb.size(); ++ia) {
        for (std::int64_t b : vb) {
            std::int64_t ab = mod_mul(vb[ia], b, p);
            for (std::int64_t c : vc) {
                std::int64_t num = (ab - c + p) % p;
                for (std::size_t id = 0; id < vc.size(); ++id) {
                    std::int64_t inv = inv_ad[ia * vc.size() + id];
                    if (inv < 0) {
                        ++hc.skipped_a_eq_d;
                        continue;
                    }
                    ++hc.N[static_cast<std::size_t>(mod_mul(num, inv, p))];
                }
            }
        }
    }
    // skipped counter tallied once per (a,d,b,c) quadruple above; mass check:
    mpz_class mass = 0;
    for (std::uint64_t n : hc.N) mass += static_cast<unsigned long>(n);
    hc.total_mass = mass;
    if (B.disjoint_from(C)) {
        mpz_class expected = size_z(B) * size_z(B) * size_z(C) * size_z(C);
        if (mass != expected) throw invariant_error("had_representation_counts: mass conservation failed");
    }
    return hc;
}

HadSolutionCount had_solution_count(const FiniteSet& B, const FiniteSet& C) {
    HadCounts hc = had_representation_counts(B, C);
    HadSolutionCount out;
    out.zero_term = mpz_class(static_cast<unsigned long>(hc.N[0])) * static_cast<unsigned long>(hc.N[0]);
    mpz_class e = 0;
    for (std::size_t x = 1; x < hc.N.size(); ++x) {
        e += mpz_class(static_cast<unsigned long>(hc.N[x])) * static_cast<unsigned long>(hc.N[x]);
    }
    out.e_cal = e;
    return out;
}

RangeReport range_set(const FiniteSet& A) {
    require_prime(A, "range_set");
    if (A.size() < 2) throw input_error("range_set: |A| >= 2 required");
    std::int64_t p = A.field().characteristic();
    std::vector<std::int64_t> va = A.residues();
    std::vector<char> seen(static_cast<std::size_t>(p), 0);
    const std::size_t n = va.size();
    std::vector<std::int64_t> inv_ad(n * n, -1);
    for (std::size_t ia = 0; ia < n; ++ia) {
        for (std::size_t id = 0; id < n; ++id) {
            std::int64_t diff = (va[ia] - va[id] + p) % p;
            if (diff != 0) inv_ad[ia * n + id] = mod_inv(diff, p);
        }
    }
    for (std::size_t ia = 0; ia < n; ++ia) {
        for (std::int64_t b : va) {
            std::int64_t ab = mod_mul(va[ia], b, p);
            for (std::int64_t c : va) {
                std::int64_t num = (ab - c + p) % p;
                for (std::size_t id = 0; id < n; ++id) {
                    std::int64_t inv = inv_ad[ia * n + id];
                    if (inv >= 0) seen[static_cast<std::size_t>(mod_mul(num, inv, p))] = 1;
                }
            }
        }
    }
    RangeReport rep;
    unsigned long q = 0;
    for (char s : seen) q += static_cast<unsigned long>(s);
    rep.Q = q;
    rep.coverage = mpq_class(rep.Q, mpz_class(static_cast<unsigned long>(p)));
    rep.coverage.canonicalize();
    return rep;
}

DilateEnergies energy_over_dilates(const FiniteSet& A, DilateLaw law) {
    require_prime(A, "energy_over_dilates");
    if (A.contains_zero()) throw input_error("energy_over_dilates: 0 in A");
    std::int64_t p = A.field().characteristic();
    DilateEnergies de;
    de.law = law;
    de.per_x.assign(static_cast<std::size_t>(p), 0);
    std::vector<std::int64_t> va = A.residues();
    mpz_class a4 = pow_z(size_z(A), 4);
    if (size_z(A) * size_z(A) <= p) {
        de.warnings.push_back("|A| <= sqrt(p); the aggregate estimate is stated for larger sets");
    }

    DenseCounter counter(p);
    de.floor_ok = true;
    de.total = 0;
    for (std::int64_t x = 1; x < p; ++x) {
        if (law == DilateLaw::add_dilate) {
            for (std::int64_t a : va) {
                for (std::int64_t b : va) {
                    counter.bump((a + mod_mul(x, b, p)) % p);
                }
            }
        } else {
            for (std::int64_t b : va) {
                std::int64_t xb = (x + b) % p;
                for (std::int64_t a : va) {
                    counter.bump(mod_mul(a, xb, p));
                }
            }
        }
        mpz_class e = counter.energy_and_reset();
        if (e * p < a4) de.floor_ok = false;   // forced by |A ∘ xA| <= p
        de.total += e;
        de.per_x[static_cast<std::size_t>(x)] = e;
    }
    de.self_energy =
        detail::fp_pair_energy(va, va, p, law == DilateLaw::mul_translate);
    de.total_ratio = BigFloat::of(de.total).div(BigFloat::of(a4));
    return de;
}

MomentReport moment_sum(const FiniteSet& A, const mpq_class& s, DilateLaw law) {
    if (s <= 0 || s >= 3) throw input_error("moment_sum: s must lie in (0,3)");
    DilateEnergies de = energy_over_dilates(A, law);
    std::int64_t p = A.field().characteristic();
    MomentReport rep;
    rep.s = s;
    mpz_class a2 = size_z(A) * size_z(A);
    if (a2 <= p) rep.warnings.push_back("precondition |A| > p^{1/2} fails; ratio is informative only");
    if (a2 * size_z(A) > mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p)) {
        rep.warnings.push_back("precondition |A| <= p^{2/3} fails; ratio is informative only");
    }

    mpq_class one_plus_s = s + 1;
    mpz_class a4 = pow_z(size_z(A), 4);
    BigFloat lhs;
    for (std::int64_t x = 1; x < p; ++x) {
        mpq_class base(de.per_x[static_cast<std::size_t>(x)] * p - a4, mpz_class(static_cast<unsigned long>(p)));
        base.canonicalize();
        if (base < 0) throw invariant_error("moment_sum: negative base; floor check should forbid this");
        if (base == 0) continue;
        lhs = lhs.add(pow_q(base, one_plus_s));
    }
    rep.lhs = lhs;
    mpq_class pe(static_cast<unsigned long>(p));
    rep.rhs = pow_q(pe, 1 - s / 3)
                  .mul(pow_q(de.self_energy, s * 2 / 3))
                  .mul(pow_q(size_z(A), 2 + s * 4 / 3));
    rep.ratio = rep.lhs.div(rep.rhs);
    return rep;
}

RichReport rich_dilate_count(const FiniteSet& A, const mpq_class& K_in, DilateLaw law) {
    mpq_class K = K_in;
    K.canonicalize();
    DilateEnergies de = energy_over_dilates(A, law);
    std::int64_t p = A.field().characteristic();
    mpz_class a2 = size_z(A) * size_z(A);
    if (a2 <= p) throw input_error("rich_dilate_count: requires |A| > p^{1/2}");
    mpz_class a4 = a2 * a2;
    const mpz_class& E = de.self_energy;
    // 1 <= K <= p E / (2 |A|^4)
    if (K < 1 || K * 2 * a4 > mpq_class(E * p)) {
        throw input_error("rich_dilate_count: K outside [1, pE/(2|A|^4)]");
    }

    RichReport rep;
    std::vector<FieldElem> rich;
    for (std::int64_t x = 1; x < p; ++x) {
        // E(x) > E/K  <=>  E(x) K_num > E K_den
        if (de.per_x[static_cast<std::size_t>(x)] * K.get_num() > E * K.get_den()) {
            rich.push_back(FieldElem::residue(A.field(), x));
        }
    }
    rep.X = FiniteSet::make(A.field(), std::move(rich), true);
    BigFloat k4 = pow_q(K, mpq_class(4));
    rep.bound = k4.mul(BigFloat::of(pow_z(size_z(A), 6))).div(BigFloat::of(mpz_class(E * E)));
    rep.ratio = BigFloat::of(size_z(rep.X)).div(rep.bound);

    // Dyadic ladder, cube-exact: E(x) > 2^i E/M  <=>  8 * 8^i |A|^4 E^2 < E(x)^3 p
    // with M^3 = p E / (8 |A|^4).
    mpz_class base_rhs = 8 * a4 * E * E;
    std::vector<std::uint64_t> levels;
    for (std::int64_t x = 1; x < p; ++x) {
        mpz_class ex = de.per_x[static_cast<std::size_t>(x)];
        mpz_class lhs = ex * ex * ex * p;
        if (lhs <= base_rhs) {
            ++rep.small_count;   // E(x) <= E/M
            continue;
        }
        int i = 0;
        mpz_class rhs = base_rhs * 8;
        while (lhs > rhs) {
            ++i;
            rhs *= 8;
        }
        if (static_cast<std::size_t>(i) >= levels.size()) levels.resize(static_cast<std::size_t>(i) + 1, 0);
        ++levels[static_cast<std::size_t>(i)];
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] > 0) rep.level_sets.emplace_back(static_cast<int>(i), levels[i]);
    }
    return rep;
}

PartialSumReport partial_energy_sum(const FiniteSet& A, const FiniteSet& X, DilateLaw law) {
    require_prime(A, "partial_energy_sum");
    if (!(X.field() == A.field())) throw input_error("partial_energy_sum: field mismatch");
    if (X.contains_zero()) throw input_error("partial_energy_sum: X must avoid 0");
    std::int64_t p = A.field().characteristic();
    std::vector<std::int64_t> va = A.residues();
    PartialSumReport rep;
    rep.sum = 0;
    DenseCounter counter(p);
    for (const auto& xe : X.elems()) {
        std::int64_t x = xe.res();
        if (law == DilateLaw::add_dilate) {
            for (std::int64_t a : va) {
                for (std::int64_t b : va) counter.bump((a + mod_mul(x, b, p)) % p);
            }
        } else {
            for (std::int64_t b : va) {
                std::int64_t xb = (x + b) % p;
                for (std::int64_t a : va) counter.bump(mod_mul(a, xb, p));
            }
        }
        rep.sum += counter.energy_and_reset();
    }
    mpz_class E = detail::fp_pair_energy(va, va, p, law == DilateLaw::mul_translate);
    mpz_class a2 = size_z(A) * size_z(A);
    mpz_class xs = size_z(X);
    rep.size_ok = xs <= a2;
    rep.mass_ok = a2 * xs <= mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
    // Unconditional: sum_X (E(x) - |A|^4/p) <= p |A|^2, i.e.
    // p * sum - |X| |A|^4 <= p^2 |A|^2.
    rep.bkt_ok = p * rep.sum - xs * a2 * a2 <= mpz_class(static_cast<unsigned long>(p)) * p * a2;
    rep.bound_plane = pow_q(E, mpq_class(1, 2))
                          .mul(pow_q(size_z(A), mpq_class(3, 2)))
                          .mul(pow_q(xs, mpq_class(3, 4)));
    rep.bound_alt = pow_q(size_z(A), mpq_class(13, 4)).mul(pow_q(xs, mpq_class(1, 2)));
    rep.ratio_plane = BigFloat::of(rep.sum).div(rep.bound_plane);
    rep.ratio_alt = BigFloat::of(rep.sum).div(rep.bound_alt);
    return rep;
}

GrowthReport had_pipeline(const FiniteSet& A_in) {
    require_prime(A_in, "had_pipeline");
    if (A_in.contains_zero()) throw input_error("had_pipeline: 0 in A");
    std::int64_t p = A_in.field().characteristic();
    GrowthReport rep;
    rep.p = p;
    rep.A = A_in;
    mpz_class p3 = mpz_class(static_cast<unsigned long>(p)) * p * p;
    while (pow_z(size_z(rep.A), 5) > p3) {
        // pass to the canonical prefix of the largest admissible size
        std::size_t m = rep.A.size() - 1;
        while (m >= 2 && pow_z(mpz_class(static_cast<unsigned long>(m)), 5) > p3) --m;
        rep.A = rep.A.prefix(m);
        rep.truncated = true;
    }
    if (rep.A.size() < 6) throw input_error("had_pipeline: set too small after the p^{3/5} cut");

    BalancedDecomposition bal = balanced_decompose(rep.A);
    rep.warnings = bal.warnings;
    // Equation roles: a,b run over the multiplicatively structured part.
    rep.B = bal.C;   // Ex-small side of the decomposition
    rep.C = bal.B;   // E+-small side
    rep.counts = had_representation_counts(rep.B, rep.C);
    HadSolutionCount sc;
    sc.zero_term = mpz_class(static_cast<unsigned long>(rep.counts.N[0])) * static_cast<unsigned long>(rep.counts.N[0]);
    mpz_class e = 0;
    for (std::size_t x = 1; x < rep.counts.N.size(); ++x) {
        e += mpz_class(static_cast<unsigned long>(rep.counts.N[x])) * static_cast<unsigned long>(rep.counts.N[x]);
    }
    rep.e_cal = e;
    rep.zero_term = sc.zero_term;

    RangeReport rr = range_set(rep.A);
    rep.Q = rr.Q;
    rep.coverage = rr.coverage;

    // Exact Cauchy-Schwarz chain (mass)^2 <= Q * sum N^2.
    mpz_class b4 = pow_z(size_z(rep.B), 4), c4 = pow_z(size_z(rep.C), 4);
    rep.cs_chain_ok = rep.Q * (rep.e_cal + rep.zero_term) >= b4 * c4;
    if (!rep.cs_chain_ok) throw invariant_error("had_pipeline: Cauchy-Schwarz chain failed");

    // Pointwise N(x)^2 <= Ex(B, B-x) E+(C, xC), plus the aggregated sum.
    std::vector<std::int64_t> vb = rep.B.residues(), vc = rep.C.residues();
    mpz_class agg = 0;
    for (std::int64_t x = 1; x < p; ++x) {
        std::vector<std::int64_t> b_shift;
        b_shift.reserve(vb.size());
        for (std::int64_t b : vb) b_shift.push_back((b - x + p) % p);
        std::vector<std::int64_t> c_dil;
        c_dil.reserve(vc.size());
        for (std::int64_t c : vc) c_dil.push_back(mod_mul(c, x, p));
        mpz_class em = detail::fp_pair_energy(vb, b_shift, p, true);
        mpz_class ea = detail::fp_pair_energy(vc, c_dil, p, false);
        mpz_class nx(static_cast<unsigned long>(rep.counts.N[static_cast<std::size_t>(x)]));
        if (nx * nx > em * ea) throw invariant_error("had_pipeline: pointwise Cauchy-Schwarz failed");
        agg += em * ea;
    }
    rep.energy_sum_product = agg;

    mpz_class a8 = pow_z(size_z(rep.A), 8);
    rep.term_main = BigFloat::of(a8).div(BigFloat::of(mpz_class(static_cast<unsigned long>(p))));
    // [E+(C) Ex(B)^{3/2}]^{4/15} with the balanced-decomposition energies.
    BigFloat inner = BigFloat::of(bal.e_add_B).mul(pow_q(bal.e_mul_C, mpq_class(3, 2)));
    BigFloat inner_pow;
    BigFloat exponent = BigFloat::of(mpq_class(4, 15));
    mpfr_pow(inner_pow.raw(), inner.raw(), exponent.raw(), MPFR_RNDN);
    rep.term_second = pow_q(mpq_class(static_cast<unsigned long>(p)), mpq_class(2, 3))
                          .mul(pow_q(size_z(rep.A), mpq_class(10, 3)))
                          .mul(inner_pow);
    rep.e_cal_ratio = BigFloat::of(mpz_class(rep.e_cal * p)).div(BigFloat::of(a8));
    return rep;
}

}  // namespace energylab
