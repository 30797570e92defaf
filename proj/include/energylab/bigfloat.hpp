#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace energylab {

/// Working precision in decimal digits for fractional-power evaluation.
/// Default 50; overridable via the ENERGYLAB_PRECISION environment variable
/// (read once per process).
int precision_digits();
mpfr_prec_t precision_bits();

/// Minimal value-semantic wrapper over mpfr_t at the global working
/// precision. Only what the bound evaluations need.
class BigFloat {
public:
    BigFloat();
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(BigFloat o);
    ~BigFloat();

    static BigFloat of(long v);
    static BigFloat of(const mpz_class& v, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat of(const mpq_class& v, mpfr_rnd_t rnd = MPFR_RNDN);

    BigFloat add(const BigFloat& o, mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat sub(const BigFloat& o, mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat mul(const BigFloat& o, mpfr_rnd_t rnd = MPFR_RNDN) const;
    BigFloat div(const BigFloat& o, mpfr_rnd_t rnd = MPFR_RNDN) const;

    bool is_zero() const;
    int cmp(const BigFloat& o) const;
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }

    double to_double() const;
    // Round-trippable decimal at full precision.
    std::string str() const;
    // Reporting form, 6 significant digits.
    std::string str6() const;

    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

private:
    mpfr_t value_;
};

/// base^(num/den) for base >= 0, with the requested rounding. Exact rational
/// bases, high-precision result.
BigFloat pow_q(const mpq_class& base, const mpq_class& exponent, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat pow_q(const mpz_class& base, const mpq_class& exponent, mpfr_rnd_t rnd = MPFR_RNDN);

/// n-th root with directed rounding; base >= 0.
BigFloat root_n(const mpz_class& base, unsigned long n, mpfr_rnd_t rnd);

/// log2 of a positive integer, rounded to nearest.
BigFloat log2_of(const mpz_class& v);

}  // namespace energylab
