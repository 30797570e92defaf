#include "energylab/extract.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace energylab {

const char* pair_stat_name(PairStat s) {
    switch (s) {
        case PairStat::ratio: return "mul-slopes";
        case PairStat::sum: return "add-sums";
        case PairStat::diff: return "add-diffs";
    }
    return "?";
}

namespace {

FieldElem pair_key(const FieldElem& a, const FieldElem& b, PairStat law) {
    switch (law) {
        case PairStat::ratio: return a / b;
        case PairStat::sum: return a + b;
        case PairStat::diff: return a - b;
    }
    throw invariant_error("bad pair stat");
}

int level_of(std::uint64_t count) {
    return std::bit_width(count) - 1;   // floor(log2 count), count >= 1
}

// Dyadic class selection over per-item counts. Items are (index, count);
// class weight is the exact sum of counts; ties go to the smallest level.
struct CountClass {
    int level = 0;
    mpz_class weight;
    std::vector<std::uint32_t> members;
};

CountClass pick_class_by_mass(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& counts) {
    std::map<int, CountClass> classes;
    for (const auto& [idx, c] : counts) {
        int lv = level_of(c);
        CountClass& cc = classes[lv];
        cc.level = lv;
        cc.weight += static_cast<unsigned long>(c);
        cc.members.push_back(idx);
    }
    const CountClass* best = nullptr;
    for (const auto& [lv, cc] : classes) {
        if (!best || cc.weight > best->weight) best = &cc;   // map order = ascending level, ties keep smaller
    }
    return *best;
}

}  // namespace

ExtractionCertificate extract_structured_subset(const FiniteSet& A, PairStat law) {
    if (A.size() < 2) throw input_error("extract_structured_subset: |A| >= 2 required");
    if (law == PairStat::ratio && A.contains_zero()) {
        throw input_error("extract_structured_subset: 0 in A under ratio law");
    }
    const std::size_t n = A.size();

    detail::PairTable table;
    table.reserve(n * n);
    for (const auto& a : A.elems()) {
        for (const auto& b : A.elems()) {
            ++table[pair_key(a, b, law)];
        }
    }

    mpz_class total_energy = detail::sum_of_squares(table);

    // Stage 0: dyadic class of the pair statistic, weight t^2 |P|, ties to
    // the smallest t.
    struct SlopeClass {
        mpz_class weight;
        std::uint64_t t = 0;
        std::size_t members = 0;
    };
    std::map<int, SlopeClass> slope_classes;
    for (const auto& [key, count] : table) {
        int lv = level_of(count);
        SlopeClass& sc = slope_classes[lv];
        sc.t = 1ull << lv;
        sc.members += 1;
    }
    for (auto& [lv, sc] : slope_classes) {
        sc.weight = mpz_class(static_cast<unsigned long>(sc.t)) * static_cast<unsigned long>(sc.t) *
                    static_cast<unsigned long>(sc.members);
    }
    int best_level = -1;
    const SlopeClass* best = nullptr;
    for (const auto& [lv, sc] : slope_classes) {
        if (!best || sc.weight > best->weight) {
            best = &sc;
            best_level = lv;
        }
    }

    ExtractionCertificate cert;
    cert.source = A;
    cert.law = law;
    cert.t = 1ull << best_level;
    cert.source_energy = total_energy;

    std::vector<FieldElem> p_elems;
    for (const auto& [key, count] : table) {
        if (level_of(count) == best_level) p_elems.push_back(key);
    }
    cert.P = FiniteSet::make(A.field(), std::move(p_elems));

    // S: all pairs whose statistic falls in the chosen class.
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            auto it = table.find(pair_key(A[i], A[j], law));
            if (level_of(it->second) == best_level) cert.S.emplace_back(i, j);
        }
    }

    // Provable by construction; cheap to keep as hard checks.
    {
        mpz_class s_size(static_cast<unsigned long>(cert.S.size()));
        mpz_class pt = mpz_class(static_cast<unsigned long>(cert.P.size())) * static_cast<unsigned long>(cert.t);
        if (!(pt <= s_size && s_size < 2 * pt)) throw invariant_error("extract: |S| outside [|P|t, 2|P|t)");
        std::uint64_t ceil_log = static_cast<std::uint64_t>(std::bit_width(2 * n - 1));  // ceil(log2(2n))
        mpz_class weight = mpz_class(static_cast<unsigned long>(cert.t)) * static_cast<unsigned long>(cert.t) *
                           static_cast<unsigned long>(cert.P.size());
        if (weight * 8 * static_cast<unsigned long>(ceil_log) < total_energy) {
            throw invariant_error("extract: class weight below pigeonhole floor");
        }
    }

    // Stage 1: popular abscissae of S.
    std::vector<std::uint64_t> col_count(n, 0);
    for (const auto& [i, j] : cert.S) ++col_count[i];
    std::vector<std::pair<std::uint32_t, std::uint64_t>> cols;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (col_count[i] > 0) cols.emplace_back(i, col_count[i]);
    }
    CountClass col_class = pick_class_by_mass(cols);
    std::uint64_t q_prime = 1ull << col_class.level;
    cert.q_prime = q_prime;

    if (q_prime <= col_class.members.size()) {
        cert.axis = ExtractionCertificate::Axis::abscissae;
        cert.q = q_prime;
        std::vector<std::size_t> idx(col_class.members.begin(), col_class.members.end());
        cert.A1 = A.select(idx);
    } else {
        // Stage 2: re-pigeonhole ordinates of S' = S restricted to the
        // popular columns.
        cert.axis = ExtractionCertificate::Axis::ordinates;
        cert.stage1_columns = col_class.members;
        std::vector<bool> in_cols(n, false);
        for (std::uint32_t i : col_class.members) in_cols[i] = true;
        std::vector<std::uint64_t> row_count(n, 0);
        for (const auto& [i, j] : cert.S) {
            if (in_cols[i]) ++row_count[j];
        }
        std::vector<std::pair<std::uint32_t, std::uint64_t>> rows;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (row_count[j] > 0) rows.emplace_back(j, row_count[j]);
        }
        CountClass row_class = pick_class_by_mass(rows);
        cert.q = 1ull << row_class.level;
        std::vector<std::size_t> idx(row_class.members.begin(), row_class.members.end());
        cert.A1 = A.select(idx);
    }

    cert.q_le_a1 = cert.q <= cert.A1.size();

    mpz_class n2 = mpz_class(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
    mpz_class a1_4 = mpz_class(static_cast<unsigned long>(cert.A1.size()));
    a1_4 = a1_4 * a1_4 * a1_4 * a1_4;
    cert.d_star = mpq_class(n2 * a1_4, total_energy * total_energy);
    cert.d_star.canonicalize();
    return cert;
}

void verify_certificate(const ExtractionCertificate& cert) {
    const FiniteSet& A = cert.source;
    const std::size_t n = A.size();
    if (n < 2) throw invariant_error("certificate: source too small");

    detail::PairTable table;
    for (const auto& a : A.elems()) {
        for (const auto& b : A.elems()) {
            ++table[pair_key(a, b, cert.law)];
        }
    }
    if (detail::sum_of_squares(table) != cert.source_energy) {
        throw invariant_error("certificate: source energy mismatch");
    }

    // Every x in P carries a pair count in [t, 2t).
    for (const auto& x : cert.P.elems()) {
        auto it = table.find(x);
        std::uint64_t r = it == table.end() ? 0 : it->second;
        if (!(cert.t <= r && r < 2 * cert.t)) throw invariant_error("certificate: P count outside [t, 2t)");
    }

    // S is exactly the pair set over P.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> expected;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (cert.P.contains(pair_key(A[i], A[j], cert.law))) expected.emplace_back(i, j);
        }
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> got = cert.S;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    if (got != expected) throw invariant_error("certificate: S mismatch");

    mpz_class s_size(static_cast<unsigned long>(cert.S.size()));
    mpz_class pt = mpz_class(static_cast<unsigned long>(cert.P.size())) * static_cast<unsigned long>(cert.t);
    if (!(pt <= s_size && s_size < 2 * pt)) throw invariant_error("certificate: |S| outside [|P|t, 2|P|t)");

    // Per-line counts of A1 in [q, 2q) along the recorded axis.
    std::vector<std::uint64_t> line_count(n, 0);
    if (cert.axis == ExtractionCertificate::Axis::abscissae) {
        for (const auto& [i, j] : cert.S) ++line_count[i];
    } else {
        std::vector<bool> in_cols(n, false);
        for (std::uint32_t i : cert.stage1_columns) in_cols[i] = true;
        for (const auto& [i, j] : cert.S) {
            if (in_cols[i]) ++line_count[j];
        }
        // Stage-1 columns must themselves be a [q', 2q') class.
        std::vector<std::uint64_t> col_count(n, 0);
        for (const auto& [i, j] : cert.S) ++col_count[i];
        for (std::uint32_t i : cert.stage1_columns) {
            if (!(cert.q_prime <= col_count[i] && col_count[i] < 2 * cert.q_prime)) {
                throw invariant_error("certificate: stage-1 column count outside [q', 2q')");
            }
        }
    }
    for (const auto& e : cert.A1.elems()) {
        auto idx = A.index_of(e);
        if (!idx) throw invariant_error("certificate: A1 not a subset of source");
        std::uint64_t c = line_count[*idx];
        if (!(cert.q <= c && c < 2 * cert.q)) throw invariant_error("certificate: A1 line count outside [q, 2q)");
    }

    // Weight accounting: |P| t^2 >= E / (8 ceil(log2(2|A|))).
    std::uint64_t ceil_log = static_cast<std::uint64_t>(std::bit_width(2 * n - 1));
    mpz_class weight = mpz_class(static_cast<unsigned long>(cert.t)) * static_cast<unsigned long>(cert.t) *
                       static_cast<unsigned long>(cert.P.size());
    if (weight * 8 * static_cast<unsigned long>(ceil_log) < cert.source_energy) {
        throw invariant_error("certificate: weight accounting failed");
    }

    mpz_class n2 = mpz_class(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
    mpz_class a1_4 = mpz_class(static_cast<unsigned long>(cert.A1.size()));
    a1_4 = a1_4 * a1_4 * a1_4 * a1_4;
    mpq_class d(n2 * a1_4, cert.source_energy * cert.source_energy);
    d.canonicalize();
    if (d != cert.d_star) throw invariant_error("certificate: d_star mismatch");
}

const char* extraction_bound_name(ExtractionBound b) {
    switch (b) {
        case ExtractionBound::add_energy_plane: return "add-planes";
        case ExtractionBound::add_energy_line: return "add-lines";
        case ExtractionBound::mul_energy_sums: return "mul-sums";
    }
    return "?";
}

ExtractionBoundReport verify_extraction_bound(const ExtractionCertificate& cert, ExtractionBound target) {
    bool needs_ratio_law = target != ExtractionBound::mul_energy_sums;
    if (needs_ratio_law && cert.law != PairStat::ratio) {
        throw input_error("verify_extraction_bound: target requires the mul-slopes law");
    }
    if (!needs_ratio_law && cert.law != PairStat::sum) {
        throw input_error("verify_extraction_bound: target requires the add-sums law");
    }

    ExtractionBoundReport rep;
    rep.target = target;
    mpz_class a1(static_cast<unsigned long>(cert.A1.size()));
    mpz_class a(static_cast<unsigned long>(cert.source.size()));
    const mpz_class& E = cert.source_energy;

    if (target == ExtractionBound::add_energy_plane) {
        // E+(A1) vs |A1|^{11/2} |A|^{3/2} E^{-3/2}
        rep.lhs = energy(cert.A1, Law::add);
        BigFloat rhs = pow_q(a1, mpq_class(11, 2)).mul(pow_q(a, mpq_class(3, 2)));
        rep.rhs = rhs.div(pow_q(E, mpq_class(3, 2)));
    } else if (target == ExtractionBound::add_energy_line) {
        // E+(A1) Ex(A) vs |A1|^{9/2} |A|
        rep.lhs = energy(cert.A1, Law::add) * E;
        rep.rhs = pow_q(a1, mpq_class(9, 2)).mul(BigFloat::of(a));
    } else {
        // Ex(A1) vs q^{-4} |P|^3 |A|^3
        rep.lhs = energy(cert.A1, Law::mul);
        mpz_class p3(static_cast<unsigned long>(cert.P.size()));
        p3 = p3 * p3 * p3;
        mpz_class q4(static_cast<unsigned long>(cert.q));
        q4 = q4 * q4 * q4 * q4;
        rep.rhs = BigFloat::of(mpz_class(p3 * a * a * a)).div(BigFloat::of(q4));
        // Subset growth report: |A1 A1|, |A1/A1| vs E+(A)^3 / (|A1|^4 |A|^3).
        rep.product_set_size = static_cast<unsigned long>(pointwise_combine(cert.A1, cert.A1, Law::mul).size());
        rep.quotient_set_size = static_cast<unsigned long>(pointwise_combine(cert.A1, cert.A1, Law::div).size());
        mpz_class a1_4 = a1 * a1 * a1 * a1;
        rep.subset_growth_bound = BigFloat::of(mpz_class(E * E * E)).div(BigFloat::of(mpz_class(a1_4 * a * a * a)));
    }
    rep.ratio = BigFloat::of(rep.lhs).div(rep.rhs);
    return rep;
}

}  // namespace energylab
