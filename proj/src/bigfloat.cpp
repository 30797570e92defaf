#include "energylab/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "energylab/field.hpp"

namespace energylab {

int precision_digits() {
    static int digits = [] {
        const char* env = std::getenv("ENERGYLAB_PRECISION");
        if (!env) return 50;
        int d = std::atoi(env);
        return d >= 10 && d <= 10000 ? d : 50;
    }();
    return digits;
}

mpfr_prec_t precision_bits() {
    static mpfr_prec_t bits = static_cast<mpfr_prec_t>(std::ceil(precision_digits() * 3.3219280948873626)) + 32;
    return bits;
}

BigFloat::BigFloat() { mpfr_init2(value_, precision_bits()); mpfr_set_zero(value_, 1); }

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(value_, precision_bits());
    mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(value_, precision_bits());
    mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(BigFloat o) {
    mpfr_swap(value_, o.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::of(long v) {
    BigFloat r;
    mpfr_set_si(r.value_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const mpz_class& v, mpfr_rnd_t rnd) {
    BigFloat r;
    mpfr_set_z(r.value_, v.get_mpz_t(), rnd);
    return r;
}

BigFloat BigFloat::of(const mpq_class& v, mpfr_rnd_t rnd) {
    BigFloat r;
    mpfr_set_q(r.value_, v.get_mpq_t(), rnd);
    return r;
}

BigFloat BigFloat::add(const BigFloat& o, mpfr_rnd_t rnd) const {
    BigFloat r;
    mpfr_add(r.value_, value_, o.value_, rnd);
    return r;
}

BigFloat BigFloat::sub(const BigFloat& o, mpfr_rnd_t rnd) const {
    BigFloat r;
    mpfr_sub(r.value_, value_, o.value_, rnd);
    return r;
}

BigFloat BigFloat::mul(const BigFloat& o, mpfr_rnd_t rnd) const {
    BigFloat r;
    mpfr_mul(r.value_, value_, o.value_, rnd);
    return r;
}

BigFloat BigFloat::div(const BigFloat& o, mpfr_rnd_t rnd) const {
    BigFloat r;
    mpfr_div(r.value_, value_, o.value_, rnd);
    return r;
}

bool BigFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }

int BigFloat::cmp(const BigFloat& o) const { return mpfr_cmp(value_, o.value_); }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

namespace {

std::string format(mpfr_srcptr v, int digits) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", digits, v) < 0) throw invariant_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace

std::string BigFloat::str() const { return format(value_, precision_digits()); }

std::string BigFloat::str6() const { return format(value_, 6); }

BigFloat pow_q(const mpq_class& base, const mpq_class& exponent, mpfr_rnd_t rnd) {
    if (base < 0) throw input_error("pow_q: negative base");
    if (base == 0) return BigFloat();
    BigFloat b = BigFloat::of(base, rnd);
    BigFloat e = BigFloat::of(exponent, MPFR_RNDN);
    BigFloat r;
    // Guard digits absorb the inexact exponent conversion; exponents in use
    // are small rationals, so MPFR_RNDN on e is harmless for directed use.
    mpfr_pow(r.raw(), b.raw(), e.raw(), rnd);
    return r;
}

BigFloat pow_q(const mpz_class& base, const mpq_class& exponent, mpfr_rnd_t rnd) {
    return pow_q(mpq_class(base), exponent, rnd);
}

BigFloat root_n(const mpz_class& base, unsigned long n, mpfr_rnd_t rnd) {
    if (base < 0) throw input_error("root_n: negative base");
    BigFloat b = BigFloat::of(base, rnd);
    BigFloat r;
#if defined(MPFR_VERSION_MAJOR) && MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r.raw(), b.raw(), n, rnd);
#else
    mpfr_root(r.raw(), b.raw(), n, rnd);
#endif
    return r;
}

BigFloat log2_of(const mpz_class& v) {
    if (v <= 0) throw input_error("log2_of: nonpositive argument");
    BigFloat b = BigFloat::of(v);
    BigFloat r;
    mpfr_log2(r.raw(), b.raw(), MPFR_RNDN);
    return r;
}

}  // namespace energylab
