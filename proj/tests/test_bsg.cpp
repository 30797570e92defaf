#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "energylab/bsg.hpp"
#include "energylab/generators.hpp"
#include "oracles.hpp"

using namespace energylab;

namespace {

const GroundField Q = GroundField::rationals();

FiniteSet qset(std::initializer_list<long> xs) {
    std::vector<FieldElem> v;
    for (long x : xs) v.push_back(FieldElem::of_int(Q, x));
    return FiniteSet::make(Q, std::move(v));
}

FiniteSet ap_n(std::size_t n) { return gen_ap(Q, FieldElem::of_int(Q, 1), FieldElem::of_int(Q, 1), n); }

mpz_class size_z(const FiniteSet& s) { return mpz_class(static_cast<unsigned long>(s.size())); }

void check_certificate_constants(const BsgCertificate& cert, const FiniteSet& A) {
    // |A_star| >= |A|/(8kK), |P| <= 8kK|A|, with K = |A|^3/E exactly.
    mpq_class kk = mpq_class(8 * cert.k) * cert.K;
    CHECK(mpq_class(size_z(cert.A_star)) * kk >= mpq_class(size_z(A)));
    CHECK(mpq_class(size_z(cert.P)) <= kk * mpq_class(size_z(A)));
    CHECK(cert.A_star.subset_of(cert.A_s));
    CHECK(cert.A_s.subset_of(A));
    // edge bound: ordered in-P pairs exceed (1-eps)|A_s|^2
    mpq_class v2(size_z(cert.A_s) * size_z(cert.A_s));
    CHECK(mpq_class(cert.edge_count) > (1 - cert.epsilon) * v2);
    // P symmetric
    if (cert.law == Law::add) {
        CHECK(negate_set(cert.P) == cert.P);
    } else {
        CHECK(reciprocal_set(cert.P) == cert.P);
    }
}

}  // namespace

TEST_CASE("eight-term AP, k = 2") {
    FiniteSet a = ap_n(8);
    CHECK(oracle::quadruple_energy(a, Law::add) == 344);
    BsgCertificate cert = bsg_extract(a, 2, Law::add);
    CHECK(cert.K == mpq_class(64, 43));
    CHECK(cert.epsilon == mpq_class(1, 8));
    CHECK(cert.A_star.size() >= 1);
    check_certificate_constants(cert, a);

    BsgVerification ver = verify_bsg(cert, a);
    CHECK(ver.exhaustive);
    CHECK(ver.pass);
    CHECK(ver.checked_tuples == static_cast<std::uint64_t>(cert.A_star.size()) * cert.A_star.size());
}

TEST_CASE("two-element set, k = 2") {
    FiniteSet a = qset({1, 2});
    CHECK(oracle::quadruple_energy(a, Law::add) == 6);
    BsgCertificate cert = bsg_extract(a, 2, Law::add);
    CHECK(cert.K == mpq_class(4, 3));
    check_certificate_constants(cert, a);
    CHECK(verify_bsg(cert, a).pass);
}

TEST_CASE("Sidon set, k = 2") {
    FiniteSet sidon = qset({1, 2, 5, 11});
    CHECK(oracle::quadruple_energy(sidon, Law::add) == 28);
    BsgCertificate cert = bsg_extract(sidon, 2, Law::add);
    CHECK(cert.K == mpq_class(16, 7));
    check_certificate_constants(cert, sidon);
    CHECK(verify_bsg(cert, sidon).pass);
}

TEST_CASE("degenerate tuple is admissible") {
    FiniteSet a = ap_n(8);
    BsgCertificate cert = bsg_extract(a, 2, Law::add);
    // (a,...,a) reduces the bound to |A ∩ (P+a)| >= |A|/4K; exhaustive
    // verification includes it, so just recount one by hand.
    const FieldElem& v = cert.A_star[0];
    unsigned long cnt = 0;
    for (const auto& x : a.elems()) {
        if (cert.P.contains(x - v)) ++cnt;
    }
    mpq_class bound = mpq_class(size_z(a)) / (4 * cert.K);
    CHECK(mpq_class(static_cast<unsigned long>(cnt)) >= bound);
}

TEST_CASE("multiplicative law via GP and subgroup") {
    FiniteSet gp = gen_gp(Q, FieldElem::of_int(Q, 1), FieldElem::of_int(Q, 2), 16);
    BsgCertificate cert = bsg_extract(gp, 2, Law::mul);
    check_certificate_constants(cert, gp);
    CHECK(verify_bsg(cert, gp).pass);

    FiniteSet sub = gen_mult_subgroup(101, 20);
    BsgCertificate cert2 = bsg_extract(sub, 3, Law::mul);
    check_certificate_constants(cert2, sub);
    CHECK(verify_bsg(cert2, sub).pass);
}

TEST_CASE("k = 3 with sampling on a larger set") {
    FiniteSet a = ap_n(64);
    BsgCertificate cert = bsg_extract(a, 3, Law::add);
    check_certificate_constants(cert, a);
    if (static_cast<double>(cert.A_star.size()) * cert.A_star.size() * cert.A_star.size() > 100000.0) {
        BsgVerification ver = verify_bsg(cert, a, BsgSampling{1000, 5});
        CHECK(!ver.exhaustive);
        CHECK(ver.checked_tuples == 1000);
        CHECK(ver.pass);
    } else {
        CHECK(verify_bsg(cert, a).pass);
    }
}

TEST_CASE("determinism") {
    FiniteSet a = gen_bw_union(Q, 16);
    BsgCertificate c1 = bsg_extract(a, 2, Law::add);
    BsgCertificate c2 = bsg_extract(a, 2, Law::add);
    CHECK(c1.A_star == c2.A_star);
    CHECK(c1.P == c2.P);
    CHECK(c1.s_witness == c2.s_witness);
}

TEST_CASE("sp_energy_pipeline") {
    FiniteSet gp = gen_gp(Q, FieldElem::of_int(Q, 1), FieldElem::of_int(Q, 2), 16);
    SpEnergyReport rep = sp_energy_pipeline(gp);
    CHECK(rep.A1.size() >= 1);
    CHECK(rep.e_mul_A == energy(gp, Law::mul));
    CHECK(rep.energy_ratio.to_double() > 0.0);

    FiniteSet bw = gen_bw_union(Q, 16);
    SpEnergyReport rep2 = sp_energy_pipeline(bw);
    CHECK(rep2.A1.subset_of(bw));

    GroundField f101 = GroundField::prime(101);
    CHECK_THROWS_AS(sp_energy_pipeline(gen_mult_subgroup(101, 10)), input_error);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(bsg_extract(qset({3}), 2, Law::add), input_error);
    CHECK_THROWS_AS(bsg_extract(qset({1, 2}), 1, Law::add), input_error);
    CHECK_THROWS_AS(bsg_extract(qset({0, 1}), 2, Law::mul), input_error);
}
