#include "energylab/field.hpp"

namespace energylab {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin base set for all 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

GroundField GroundField::prime(std::int64_t p) {
    if (p < 3 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
        throw input_error("field characteristic must be a prime >= 3, got " + std::to_string(p));
    }
    GroundField f;
    f.p_ = p;
    return f;
}

std::string GroundField::describe() const {
    return is_prime_field() ? "F_" + std::to_string(p_) : "Q";
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>((static_cast<unsigned __int128>(a) * static_cast<std::uint64_t>(b)) %
                                     static_cast<std::uint64_t>(p));
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    if (a == 0) throw input_error("division by zero in F_" + std::to_string(p));
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw invariant_error("non-invertible residue " + std::to_string(a));
    return t < 0 ? t + p : t;
}

FieldElem FieldElem::rational(mpq_class v) {
    FieldElem e;
    e.field_ = GroundField::rationals();
    v.canonicalize();
    e.rat_ = std::move(v);
    return e;
}

FieldElem FieldElem::rational(long num, long den) {
    return rational(mpq_class(num, den));
}

FieldElem FieldElem::residue(const GroundField& f, std::int64_t r) {
    if (!f.is_prime_field()) throw input_error("residue() requires a prime field");
    FieldElem e;
    e.field_ = f;
    std::int64_t p = f.characteristic();
    r %= p;
    e.res_ = r < 0 ? r + p : r;
    return e;
}

FieldElem FieldElem::of_int(const GroundField& f, std::int64_t v) {
    if (f.is_prime_field()) return residue(f, v);
    FieldElem e;
    e.field_ = f;
    e.rat_ = mpq_class(static_cast<long>(v));
    if (v != static_cast<long>(v)) e.rat_ = mpq_class(mpz_class(std::to_string(v)));
    return e;
}

bool FieldElem::is_zero() const {
    return field_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool FieldElem::is_integer() const {
    return field_.is_prime_field() || rat_.get_den() == 1;
}

const mpq_class& FieldElem::rat() const {
    if (field_.is_prime_field()) throw invariant_error("rat() on a residue element");
    return rat_;
}

std::int64_t FieldElem::res() const {
    if (!field_.is_prime_field()) throw invariant_error("res() on a rational element");
    return res_;
}

void FieldElem::check_same_field(const FieldElem& o) const {
    if (!(field_ == o.field_)) {
        throw input_error("field mismatch: " + field_.describe() + " vs " + o.field_.describe());
    }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(o);
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) {
        e.res_ = (res_ + o.res_) % field_.characteristic();
    } else {
        e.rat_ = rat_ + o.rat_;
    }
    return e;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(o);
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) {
        std::int64_t p = field_.characteristic();
        e.res_ = (res_ - o.res_ + p) % p;
    } else {
        e.rat_ = rat_ - o.rat_;
    }
    return e;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(o);
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) {
        e.res_ = mod_mul(res_, o.res_, field_.characteristic());
    } else {
        e.rat_ = rat_ * o.rat_;
    }
    return e;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same_field(o);
    if (o.is_zero()) throw input_error("division by zero");
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) {
        std::int64_t p = field_.characteristic();
        e.res_ = mod_mul(res_, mod_inv(o.res_, p), p);
    } else {
        e.rat_ = rat_ / o.rat_;
    }
    return e;
}

FieldElem FieldElem::operator-() const {
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) {
        std::int64_t p = field_.characteristic();
        e.res_ = res_ == 0 ? 0 : p - res_;
    } else {
        e.rat_ = -rat_;
    }
    return e;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw input_error("inverse of zero");
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) {
        e.res_ = mod_inv(res_, field_.characteristic());
    } else {
        e.rat_ = 1 / rat_;
    }
    return e;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

bool FieldElem::operator<(const FieldElem& o) const {
    check_same_field(o);
    return field_.is_prime_field() ? res_ < o.res_ : rat_ < o.rat_;
}

std::size_t FieldElem::hash() const {
    constexpr std::uint64_t kM61 = (1ull << 61) - 1;
    std::uint64_t h;
    if (field_.is_prime_field()) {
        h = static_cast<std::uint64_t>(res_) ^ (static_cast<std::uint64_t>(field_.characteristic()) << 32);
    } else {
        std::uint64_t hn = mpz_fdiv_ui(rat_.get_num().get_mpz_t(), kM61);
        if (sgn(rat_) < 0) hn = ~hn;
        std::uint64_t hd = mpz_fdiv_ui(rat_.get_den().get_mpz_t(), kM61);
        h = hn * 0x9e3779b97f4a7c15ull + hd;
    }
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
    return static_cast<std::size_t>(h);
}

std::string FieldElem::str() const {
    return field_.is_prime_field() ? std::to_string(res_) : rat_.get_str();
}

}  // namespace energylab
