#include "energylab/decompose.hpp"

#include <functional>

namespace energylab {

mpz_class ceil_root(const mpz_class& n, unsigned long k) {
    if (n < 0) throw input_error("ceil_root: negative argument");
    mpz_class r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    mpz_class rk;
    mpz_pow_ui(rk.get_mpz_t(), r.get_mpz_t(), k);
    if (rk < n) r += 1;
    return r;
}

mpq_class default_M(const FiniteSet& A) {
    unsigned long k = A.field().is_prime_field() ? 5 : 4;
    return mpq_class(ceil_root(mpz_class(static_cast<unsigned long>(A.size())), k));
}

namespace {

mpz_class pow_z(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class size_z(const FiniteSet& s) { return mpz_class(static_cast<unsigned long>(s.size())); }

struct IterationConfig {
    PairStat extraction_law = PairStat::ratio;
    std::function<mpz_class(const FiniteSet&)> monitored;
    // Stop as soon as monitored(C) <= threshold (strict_stop makes it <).
    mpq_class threshold;
    bool strict_stop = false;
    std::size_t chunk_cap = 0;                    // 0: remove the whole extracted subset
    std::optional<std::size_t> b_size_stop;       // stop once |B| > this
    std::size_t hard_cap = 0;
};

struct IterationOutcome {
    std::vector<DecompositionStep> steps;
    FiniteSet B, C;
    bool stopped_by_size = false;
    std::size_t extraction_count = 0;
};

bool below_threshold(const mpz_class& e, const mpq_class& thr, bool strict) {
    mpq_class v(e);
    return strict ? v < thr : v <= thr;
}

IterationOutcome run_pruning(const FiniteSet& A, const IterationConfig& cfg) {
    IterationOutcome out;
    out.C = A;
    out.B = FiniteSet(A.field());
    int j = 0;
    while (true) {
        mpz_class e = cfg.monitored(out.C);
        if (below_threshold(e, cfg.threshold, cfg.strict_stop)) return out;
        if (cfg.b_size_stop && out.B.size() > *cfg.b_size_stop) {
            out.stopped_by_size = true;
            return out;
        }
        if (out.extraction_count >= cfg.hard_cap) {
            throw invariant_error("pruning iteration exceeded the hard step cap");
        }
        if (out.C.size() < 2) throw invariant_error("pruning: remainder too small to extract");
        ExtractionCertificate cert = extract_structured_subset(out.C, cfg.extraction_law);
        ++out.extraction_count;
        std::vector<FiniteSet> chunks;
        if (cfg.chunk_cap == 0 || cert.A1.size() <= cfg.chunk_cap) {
            chunks.push_back(cert.A1);
        } else {
            std::vector<FieldElem> buf;
            for (const auto& e1 : cert.A1.elems()) {
                buf.push_back(e1);
                if (buf.size() == cfg.chunk_cap) {
                    chunks.push_back(FiniteSet::make(A.field(), buf, cert.A1.excludes_zero()));
                    buf.clear();
                }
            }
            if (!buf.empty()) chunks.push_back(FiniteSet::make(A.field(), buf, cert.A1.excludes_zero()));
        }
        for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
            if (ci > 0) {
                e = cfg.monitored(out.C);
                if (below_threshold(e, cfg.threshold, cfg.strict_stop)) return out;
                if (cfg.b_size_stop && out.B.size() > *cfg.b_size_stop) {
                    out.stopped_by_size = true;
                    return out;
                }
            }
            DecompositionStep step;
            step.j = ++j;
            step.c_size = out.C.size();
            step.monitored_energy = e;
            step.D = chunks[ci];
            if (ci == 0) step.cert = cert;
            out.steps.push_back(std::move(step));
            out.C = out.C.minus(chunks[ci]);
            out.B = out.B.union_with(chunks[ci]);
        }
    }
}

void warn_prime_applicability(const FiniteSet& A, std::vector<std::string>& warnings) {
    if (!A.field().is_prime_field()) return;
    mpz_class p(static_cast<unsigned long>(A.field().characteristic()));
    mpz_class lhs = pow_z(size_z(A), 6);
    if (lhs > p * p * energy(A, Law::mul)) {
        warnings.push_back("incidence applicability |A|^6 <= p^2 Ex(A) fails; ratio reports only");
    }
}

}  // namespace

BwDecomposition bw_decompose(const FiniteSet& A, std::optional<mpq_class> M_opt) {
    if (A.contains_zero()) throw input_error("bw_decompose: 0 in A");
    if (A.empty()) throw input_error("bw_decompose: empty set");
    BwDecomposition res;
    res.M = M_opt.value_or(default_M(A));
    if (res.M < 1) throw input_error("bw_decompose: M must be >= 1");
    res.stop_threshold = mpq_class(pow_z(size_z(A), 3)) / res.M;
    warn_prime_applicability(A, res.warnings);

    IterationConfig cfg;
    cfg.extraction_law = PairStat::ratio;
    cfg.monitored = [](const FiniteSet& C) { return C.empty() ? mpz_class(0) : energy(C, Law::mul); };
    cfg.threshold = res.stop_threshold;
    cfg.hard_cap = A.size();
    res.step_cap = A.size();

    IterationOutcome out = run_pruning(A, cfg);
    res.steps = std::move(out.steps);
    res.B = out.B;
    res.C = out.C;
    if (!(res.B.disjoint_from(res.C)) || !(res.B.union_with(res.C) == A)) {
        throw invariant_error("bw_decompose: not a partition");
    }
    res.e_add_B = res.B.empty() ? mpz_class(0) : energy(res.B, Law::add);
    res.e_mul_C = res.C.empty() ? mpz_class(0) : energy(res.C, Law::mul);
    if (mpq_class(res.e_mul_C) > res.stop_threshold) {
        throw invariant_error("bw_decompose: remainder energy above threshold");
    }
    if (A.field().is_prime_field()) {
        // predicted = M^{3/2} |A|^{5/2} = sqrt(M^3 |A|^5)
        mpq_class inside = res.M * res.M * res.M * mpq_class(pow_z(size_z(A), 5));
        res.predicted_bound = pow_q(inside, mpq_class(1, 2));
    } else {
        res.predicted_bound = BigFloat::of(res.M).mul(pow_q(size_z(A), mpq_class(5, 2)));
    }
    res.bound_ratio = BigFloat::of(res.e_add_B).div(res.predicted_bound);
    return res;
}

namespace {

BalancedDecomposition balanced_impl(const FiniteSet& A, bool swapped) {
    if (A.contains_zero()) throw input_error("balanced_decompose: 0 in A");
    if (A.size() < 2) throw input_error("balanced_decompose: |A| >= 2 required");
    if (A.field().is_prime_field()) {
        mpz_class p(static_cast<unsigned long>(A.field().characteristic()));
        if (pow_z(size_z(A), 5) > p * p * p) {
            throw input_error("balanced_decompose: requires |A| <= p^{3/5}");
        }
    }
    BalancedDecomposition res;
    Law removed_law = swapped ? Law::mul : Law::add;   // energy type of the pruned union B
    Law remainder_law = swapped ? Law::add : Law::mul; // energy type monitored on C
    mpz_class a8 = pow_z(size_z(A), 8);

    auto monitored = [remainder_law](const FiniteSet& C) {
        return C.empty() ? mpz_class(0) : energy(C, remainder_law);
    };

    auto finish = [&](const FiniteSet& B, const FiniteSet& C) {
        res.B = B;
        res.C = C;
        res.e_add_B = B.empty() ? mpz_class(0) : energy(B, removed_law);
        res.e_mul_C = C.empty() ? mpz_class(0) : energy(C, remainder_law);
        // ratio_pow7 = E(B) E(C)^{3/2} / |A|^7 ; ratio_pow11_2 = E(B) E(C) / |A|^{11/2}
        BigFloat eb = BigFloat::of(res.e_add_B);
        res.ratio_pow7 = eb.mul(pow_q(res.e_mul_C, mpq_class(3, 2))).div(BigFloat::of(pow_z(size_z(A), 7)));
        res.ratio_pow11_2 = eb.mul(BigFloat::of(res.e_mul_C)).div(pow_q(size_z(A), mpq_class(11, 2)));
    };

    // Outset branch: A itself already has small remainder-type energy.
    mpz_class ea = monitored(A);
    if (ea * ea * ea <= a8) {
        res.branch = 0;
        auto [evens, odds] = A.alternating_split();
        finish(odds, evens);
        return res;
    }

    // The stop comparison monitored(C)^3 < |A|^8 is cube-exact, so the loop
    // runs here rather than through the generic rational-threshold engine.
    PairStat extraction_law = swapped ? PairStat::diff : PairStat::ratio;
    std::size_t hard_cap = A.size();
    std::size_t chunk_cap = std::max<std::size_t>(1, A.size() / 100);

    IterationOutcome out;
    out.C = A;
    out.B = FiniteSet(A.field());
    int j = 0;
    while (true) {
        mpz_class e = monitored(out.C);
        if (e * e * e < a8) break;
        if (out.B.size() * 3 > A.size()) {
            out.stopped_by_size = true;
            break;
        }
        if (out.extraction_count >= hard_cap) {
            throw invariant_error("balanced_decompose exceeded the hard step cap");
        }
        if (out.C.size() < 2) throw invariant_error("balanced_decompose: remainder too small to extract");
        ExtractionCertificate cert = extract_structured_subset(out.C, extraction_law);
        ++out.extraction_count;
        std::vector<FieldElem> buf;
        std::vector<FiniteSet> chunks;
        for (const auto& e1 : cert.A1.elems()) {
            buf.push_back(e1);
            if (buf.size() == chunk_cap) {
                chunks.push_back(FiniteSet::make(A.field(), buf, cert.A1.excludes_zero()));
                buf.clear();
            }
        }
        if (!buf.empty()) chunks.push_back(FiniteSet::make(A.field(), buf, cert.A1.excludes_zero()));
        bool stopped = false;
        for (std::size_t ci = 0; ci < chunks.size() && !stopped; ++ci) {
            if (ci > 0) {
                e = monitored(out.C);
                if (e * e * e < a8) { stopped = true; break; }
                if (out.B.size() * 3 > A.size()) {
                    out.stopped_by_size = true;
                    stopped = true;
                    break;
                }
            }
            DecompositionStep step;
            step.j = ++j;
            step.c_size = out.C.size();
            step.monitored_energy = e;
            step.D = chunks[ci];
            if (ci == 0) step.cert = cert;
            out.steps.push_back(std::move(step));
            out.C = out.C.minus(chunks[ci]);
            out.B = out.B.union_with(chunks[ci]);
        }
        if (stopped || out.stopped_by_size) break;
    }

    res.steps = std::move(out.steps);
    if (out.stopped_by_size) {
        res.branch = 1;
        finish(out.B, out.C);
    } else {
        // Energy stop with |B| possibly below |A|/3: fold half of the
        // remainder into B; the remainder keeps the small energy type.
        res.branch = 2;
        auto [evens, odds] = out.C.alternating_split();
        finish(out.B.union_with(odds), evens);
    }
    std::size_t third = (A.size() + 2) / 3;
    if (res.B.size() < third || res.C.size() < third) {
        throw invariant_error("balanced_decompose: part below ceil(|A|/3)");
    }
    if (!res.B.disjoint_from(res.C)) throw invariant_error("balanced_decompose: parts overlap");
    return res;
}

}  // namespace

BalancedDecomposition balanced_decompose(const FiniteSet& A) { return balanced_impl(A, false); }

BalancedDecomposition balanced_decompose_swapped(const FiniteSet& A) { return balanced_impl(A, true); }

ProductPipelineResult product_energy_pipeline(const FiniteSet& A) {
    if (A.size() < 6) throw input_error("product_energy_pipeline: |A| >= 6 required");
    ProductPipelineResult res;
    BalancedDecomposition first = balanced_decompose(A);           // E+(B) , Ex(C) small-ish
    BalancedDecomposition second = balanced_decompose_swapped(first.B);  // B = B' ⊔ C', Ex(B'), E+(C')
    const FiniteSet& B = first.B;
    const FiniteSet& C = first.C;
    const FiniteSet& Bp = second.B;   // multiplicative side inside B
    const FiniteSet& Cp = second.C;   // additive side inside B

    mpz_class e_add_B = energy(B, Law::add);
    mpz_class e_mul_C = energy(C, Law::mul);
    mpz_class e_mul_Bp = Bp.empty() ? mpz_class(0) : energy(Bp, Law::mul);
    mpz_class e_add_Cp = Cp.empty() ? mpz_class(0) : energy(Cp, Law::add);

    mpz_class U = e_add_B * e_mul_Bp;
    mpz_class V = e_mul_C * e_add_Cp;

    // Final additive side is always C'; the multiplicative side is C when
    // V <= U and B' otherwise (C' is disjoint from both).
    res.B = Cp;
    if (V <= U) {
        res.C = C;
        res.e_mul_C = e_mul_C;
    } else {
        res.swapped_branch = true;
        res.C = Bp;
        res.e_mul_C = e_mul_Bp;
    }
    res.e_add_B = e_add_Cp;
    if (!res.B.disjoint_from(res.C)) throw invariant_error("product_energy_pipeline: parts overlap");
    std::size_t ninth = (A.size() + 8) / 9;
    if (res.B.size() < ninth || res.C.size() < ninth) {
        throw invariant_error("product_energy_pipeline: part below |A|/9");
    }
    res.ratio_pow28_5 = BigFloat::of(res.e_add_B)
                            .mul(BigFloat::of(res.e_mul_C))
                            .div(pow_q(size_z(A), mpq_class(28, 5)));
    res.warnings = first.warnings;
    return res;
}

namespace {

mpz_class zero_dropped_energy(const FiniteSet& X, Law law, bool* dropped) {
    if (X.empty()) return 0;
    if (law == Law::mul && X.contains_zero()) {
        if (dropped) *dropped = true;
        FiniteSet clean = X.with_zero_removed();
        return clean.empty() ? mpz_class(0) : energy(clean, Law::mul);
    }
    return energy(X, law);
}

}  // namespace

TranslateDecomposition translate_decompose(const FiniteSet& A, const FieldElem& alpha, TranslateVariant variant) {
    if (A.contains_zero()) throw input_error("translate_decompose: 0 in A");
    if (A.empty()) throw input_error("translate_decompose: empty set");
    if (variant == TranslateVariant::mult_translate && alpha.is_zero()) {
        throw input_error("translate_decompose: alpha must be nonzero");
    }
    if (variant == TranslateVariant::reciprocal && A.field().is_prime_field()) {
        throw input_error("translate_decompose: reciprocal variant requires characteristic 0");
    }
    TranslateDecomposition res;
    res.variant = variant;
    res.alpha = alpha;
    res.M = default_M(A);
    res.stop_threshold = mpq_class(pow_z(size_z(A), 3)) / res.M;

    bool dropped_zero = false;
    auto monitored = [&](const FiniteSet& C) -> mpz_class {
        if (C.empty()) return 0;
        if (variant == TranslateVariant::mult_translate) {
            return zero_dropped_energy(translate_set(C, alpha), Law::mul, &dropped_zero);
        }
        return energy(reciprocal_set(C), Law::add);
    };

    IterationConfig cfg;
    cfg.extraction_law = PairStat::diff;
    cfg.monitored = monitored;
    cfg.threshold = res.stop_threshold;
    cfg.hard_cap = A.size();

    IterationOutcome out = run_pruning(A, cfg);
    res.steps = std::move(out.steps);
    res.B = out.B;
    res.C = out.C;
    if (!(res.B.union_with(res.C) == A) || !res.B.disjoint_from(res.C)) {
        throw invariant_error("translate_decompose: not a partition");
    }
    if (variant == TranslateVariant::mult_translate) {
        res.e_B = res.B.empty() ? mpz_class(0) : energy(res.B, Law::mul);
        res.e_C = res.C.empty() ? mpz_class(0) : zero_dropped_energy(translate_set(res.C, alpha), Law::mul, &dropped_zero);
    } else {
        res.e_B = res.B.empty() ? mpz_class(0) : energy(res.B, Law::add);
        res.e_C = res.C.empty() ? mpz_class(0) : energy(reciprocal_set(res.C), Law::add);
    }
    if (dropped_zero) {
        res.warnings.push_back("0 in alpha+C dropped before multiplicative energy");
    }
    mpq_class delta_den(A.field().is_prime_field() ? 5 : 4);
    mpq_class exponent = 3 - mpq_class(1) / delta_den;   // 3 - delta
    BigFloat denom = pow_q(size_z(A), exponent);
    res.ratio_B = BigFloat::of(res.e_B).div(denom);
    res.ratio_C = BigFloat::of(res.e_C).div(denom);
    return res;
}

RsetDecomposition r_set_decompose(const FiniteSet& A) {
    if (A.field().is_prime_field()) throw input_error("r_set_decompose: characteristic 0 only");
    if (A.size() < 2) throw input_error("r_set_decompose: |A| >= 2 required");
    RsetDecomposition res;
    res.R = r_set(A);
    const FiniteSet& R = res.R;
    FieldElem one = FieldElem::of_int(A.field(), 1);

    // Exact identity R = 1 - R; a failure here is a core bug.
    FiniteSet one_minus_R = translate_set(negate_set(R), one);
    if (!(one_minus_R == R)) throw invariant_error("r_set_decompose: identity R = 1 - R failed");
    FiniteSet R_star = R.with_zero_removed();
    if (!R_star.empty() && !(reciprocal_set(R_star) == R_star)) {
        throw invariant_error("r_set_decompose: identity (R*)^{-1} = R* failed");
    }

    std::size_t half = (R.size() + 1) / 2;

    // Multiplicative side via the alpha = -1 translate decomposition.
    TranslateDecomposition t1 = translate_decompose(R_star, -one, TranslateVariant::mult_translate);
    if (t1.B.size() >= half) {
        res.R1 = t1.B;
        res.e_mul_R1 = t1.e_B;
    } else {
        // 1 - (C ∪ {0}) = (1 - C) ∪ {1} ⊆ R by the identity above.
        FiniteSet mapped = translate_set(negate_set(t1.C), one)
                               .union_with(FiniteSet::make(A.field(), {one}));
        res.R1 = mapped;
        bool dropped = false;
        res.e_mul_R1 = zero_dropped_energy(mapped, Law::mul, &dropped);
        if (dropped) res.warnings.push_back("0 in 1-C dropped before multiplicative energy");
    }
    if (!res.R1.subset_of(R)) throw invariant_error("r_set_decompose: R1 not inside R");
    if (res.R1.size() < half) throw invariant_error("r_set_decompose: |R1| < ceil(|R|/2)");

    // Additive side via the reciprocal variant; 0 (always in R for |A| >= 2)
    // rides along in the B part, where additive energy is still defined.
    TranslateDecomposition t2 = translate_decompose(R_star, one, TranslateVariant::reciprocal);
    FiniteSet b_aug = t2.B.union_with(FiniteSet::make(A.field(), {FieldElem::of_int(A.field(), 0)}));
    if (b_aug.size() >= half) {
        res.R2 = b_aug;
        res.e_add_R2 = energy(res.R2, Law::add);
    } else {
        res.R2 = reciprocal_set(t2.C);
        res.e_add_R2 = t2.e_C;
    }
    if (!res.R2.subset_of(R)) throw invariant_error("r_set_decompose: R2 not inside R");
    if (res.R2.size() < half) throw invariant_error("r_set_decompose: |R2| < ceil(|R|/2)");

    res.ratio_R1 = BigFloat::of(res.e_mul_R1).div(pow_q(size_z(res.R1), mpq_class(11, 4)));
    res.ratio_R2 = BigFloat::of(res.e_add_R2).div(pow_q(size_z(res.R2), mpq_class(11, 4)));
    res.warnings.insert(res.warnings.end(), t1.warnings.begin(), t1.warnings.end());
    return res;
}

}  // namespace energylab
