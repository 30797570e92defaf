#include "energylab/bsg.hpp"

#include <unordered_set>

#include "energylab/rng.hpp"

namespace energylab {

namespace {

mpz_class size_z(const FiniteSet& s) { return mpz_class(static_cast<unsigned long>(s.size())); }

using ElemSet = std::unordered_set<FieldElem, FieldElemHash>;

FieldElem pair_shift(const FieldElem& x, const FieldElem& y, Law law) {
    return law == Law::add ? x - y : x / y;
}

}  // namespace

BsgCertificate bsg_extract(const FiniteSet& A, int k, Law law) {
    if (A.size() < 2) throw input_error("bsg_extract: |A| >= 2 required");
    if (k < 2) throw input_error("bsg_extract: k >= 2 required");
    if (law != Law::add && law != Law::mul) throw input_error("bsg_extract: law must be add or mul");
    if (law == Law::mul && A.contains_zero()) throw input_error("bsg_extract: 0 in A under mul");

    BsgCertificate cert;
    cert.k = k;
    cert.law = law;
    cert.source_energy = energy(A, law);
    mpz_class a3 = size_z(A) * size_z(A) * size_z(A);
    cert.K = mpq_class(a3, cert.source_energy);
    cert.K.canonicalize();
    cert.epsilon = mpq_class(1, 4 * static_cast<long>(k));

    const mpz_class& E = cert.source_energy;
    mpz_class a2 = size_z(A) * size_z(A);
    unsigned long k8 = 8 * static_cast<unsigned long>(k);

    // Shift popularity r(s) = |A_s|; s runs over A-A (or A/A).
    RepFunction shifts = rep_function(A, A, law == Law::add ? Law::sub : Law::div);

    // P = {s : |A_s| >= eps|A|/(2K)}  <=>  8k |A|^2 |A_s| >= E.
    std::vector<FieldElem> p_elems;
    for (const auto& [s, count] : shifts.table) {
        if (k8 * a2 * static_cast<unsigned long>(count) >= E) p_elems.push_back(s);
    }
    cert.P = FiniteSet::make(A.field(), std::move(p_elems));

    ElemSet p_hash(cert.P.elems().begin(), cert.P.elems().end());
    auto in_p = [&](const FieldElem& x, const FieldElem& y) {
        return p_hash.count(pair_shift(x, y, law)) != 0;
    };

    // First s in canonical order with |A_s| >= |A|/(2K) whose in-P ordered
    // pair mass exceeds (1 - eps)|A_s|^2.
    bool found = false;
    for (const auto& [s, count] : shifts.table) {
        if (2 * a2 * static_cast<unsigned long>(count) < E) continue;
        FiniteSet a_s = shift_intersection(A, s, law);
        if (a_s.size() != count) throw invariant_error("bsg_extract: |A_s| recount mismatch");
        mpz_class pairs = 0;
        for (const auto& x : a_s.elems()) {
            unsigned long row = 0;
            for (const auto& y : a_s.elems()) {
                if (in_p(x, y)) ++row;
            }
            pairs += row;
        }
        mpz_class v2 = size_z(a_s) * size_z(a_s);
        if (4 * static_cast<long>(k) * pairs > (4 * static_cast<long>(k) - 1) * v2) {
            cert.s_witness = s;
            cert.A_s = a_s;
            cert.edge_count = pairs;
            found = true;
            break;
        }
    }
    if (!found) {
        throw invariant_error("bsg_extract: no witness shift found; extraction is buggy");
    }

    // A_star = vertices of degree >= (1-2eps)|A_s|  <=>  2k deg >= (2k-1)|A_s|.
    std::vector<FieldElem> star;
    unsigned long v = static_cast<unsigned long>(cert.A_s.size());
    for (const auto& x : cert.A_s.elems()) {
        unsigned long deg = 0;
        for (const auto& y : cert.A_s.elems()) {
            if (in_p(x, y)) ++deg;
        }
        if (2 * static_cast<unsigned long>(k) * deg >= (2 * static_cast<unsigned long>(k) - 1) * v) {
            star.push_back(x);
        }
    }
    cert.A_star = FiniteSet::make(A.field(), std::move(star));

    // Explicit certificate constants, exact.
    if (k8 * a2 * size_z(cert.A_star) < E) {
        throw invariant_error("bsg_extract: |A_star| below |A|/(8kK)");
    }
    if (size_z(cert.P) * E > k8 * a2 * a2) {
        throw invariant_error("bsg_extract: |P| above 8kK|A|");
    }
    FiniteSet p_mirror = law == Law::add ? negate_set(cert.P) : reciprocal_set(cert.P);
    if (!(p_mirror == cert.P)) throw invariant_error("bsg_extract: P not symmetric");
    return cert;
}

BsgVerification verify_bsg(const BsgCertificate& cert, const FiniteSet& A,
                           std::optional<BsgSampling> sampling, std::uint64_t exhaustive_cap) {
    if (!cert.A_star.subset_of(A)) throw input_error("verify_bsg: certificate does not match the set");
    BsgVerification ver;
    const std::size_t m = cert.A_star.size();
    const int k = cert.k;
    if (m == 0) throw invariant_error("verify_bsg: empty A_star");

    ElemSet p_hash(cert.P.elems().begin(), cert.P.elems().end());
    mpz_class a2 = size_z(A) * size_z(A);
    const mpz_class& E = cert.source_energy;

    auto tuple_intersection = [&](const std::vector<FieldElem>& tuple) {
        unsigned long cnt = 0;
        for (const auto& x : A.elems()) {
            bool all = true;
            for (const auto& a : tuple) {
                if (!p_hash.count(pair_shift(x, a, cert.law))) { all = false; break; }
            }
            if (all) ++cnt;
        }
        return mpz_class(cnt);
    };
    // Covering bound |A ∩ (P+a_1) ∩ ... ∩ (P+a_k)| >= |A|/(4K)
    //   <=>  4 |A|^2 cnt >= E.
    auto check_tuple = [&](const std::vector<FieldElem>& tuple) {
        mpz_class cnt = tuple_intersection(tuple);
        if (ver.checked_tuples == 0 || cnt < ver.min_intersection) ver.min_intersection = cnt;
        ++ver.checked_tuples;
        if (4 * a2 * cnt < E) {
            if (ver.counterexample.empty()) ver.counterexample = tuple;
            ver.pass = false;
            return false;
        }
        return true;
    };

    ver.pass = true;
    double total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<double>(m);
    ver.exhaustive = total <= static_cast<double>(exhaustive_cap);

    if (ver.exhaustive) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
        std::vector<FieldElem> tuple;
        while (true) {
            tuple.clear();
            for (int i = 0; i < k; ++i) tuple.push_back(cert.A_star[idx[static_cast<std::size_t>(i)]]);
            check_tuple(tuple);
            int pos = k - 1;
            while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == m) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    } else {
        BsgSampling cfg = sampling.value_or(BsgSampling{});
        Rng rng(cfg.seed);
        std::vector<FieldElem> tuple;
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            tuple.clear();
            for (int i = 0; i < k; ++i) tuple.push_back(cert.A_star[rng.below(m)]);
            check_tuple(tuple);
        }
    }
    return ver;
}

SpEnergyReport sp_energy_pipeline(const FiniteSet& A) {
    if (A.field().is_prime_field()) throw input_error("sp_energy_pipeline: characteristic 0 only");
    if (A.contains_zero()) throw input_error("sp_energy_pipeline: 0 in A");
    SpEnergyReport rep;
    BsgCertificate cert = bsg_extract(A, 2, Law::mul);
    rep.A1 = cert.A_star;
    rep.e_mul_A = cert.source_energy;
    rep.e_add_A1 = energy(rep.A1, Law::add);
    mpz_class a2 = size_z(A) * size_z(A);
    rep.size_ratio = BigFloat::of(mpz_class(size_z(rep.A1) * a2)).div(BigFloat::of(rep.e_mul_A));
    mpz_class lhs = rep.e_add_A1 * rep.e_add_A1;
    mpz_class e9 = 1;
    for (int i = 0; i < 9; ++i) e9 *= rep.e_mul_A;
    mpz_class a32;
    mpz_pow_ui(a32.get_mpz_t(), size_z(A).get_mpz_t(), 32);
    rep.energy_ratio = BigFloat::of(mpz_class(lhs * e9)).div(BigFloat::of(a32));
    return rep;
}

}  // namespace energylab
