#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace energylab {

// Bad input or violated operation precondition (CLI exit code 2).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A re-checkable internal guarantee failed; this is a bug, not bad input
// (CLI exit code 1).
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

bool is_prime_u64(std::uint64_t n);

/// The ground field of a computation: exact rationals or a prime residue
/// field F_p, p an odd prime. Characteristic 0 is represented by p == 0.
class GroundField {
public:
    GroundField() : p_(0) {}

    static GroundField rationals() { return GroundField(); }
    static GroundField prime(std::int64_t p);

    bool is_prime_field() const { return p_ != 0; }
    std::int64_t characteristic() const { return p_; }

    std::string describe() const;

    friend bool operator==(const GroundField&, const GroundField&) = default;

private:
    std::int64_t p_;
};

/// One exact field element. Rationals are kept in lowest terms with a
/// positive denominator (the mpq canonical form); residues are reduced
/// to [0, p).
class FieldElem {
public:
    FieldElem() : field_(), res_(0), rat_(0) {}

    static FieldElem rational(mpq_class v);
    static FieldElem rational(long num, long den);
    static FieldElem residue(const GroundField& f, std::int64_t r);
    // Integer literal embedded into either kind of field.
    static FieldElem of_int(const GroundField& f, std::int64_t v);

    const GroundField& field() const { return field_; }
    bool is_zero() const;
    bool is_integer() const;

    const mpq_class& rat() const;   // characteristic 0 only
    std::int64_t res() const;       // prime field only

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;   // throws on division by zero
    FieldElem operator-() const;
    FieldElem inverse() const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    // Canonical order: numeric over the rationals, residue order over F_p.
    bool operator<(const FieldElem& o) const;

    std::size_t hash() const;
    std::string str() const;   // "n" or "n/d"; residues in decimal

private:
    void check_same_field(const FieldElem& o) const;

    GroundField field_;
    std::int64_t res_;
    mpq_class rat_;
};

struct FieldElemHash {
    std::size_t operator()(const FieldElem& e) const { return e.hash(); }
};

// Modular helpers shared by the counting kernels (p odd prime, operands
// already reduced to [0, p)).
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t mod_inv(std::int64_t a, std::int64_t p);

}  // namespace energylab
