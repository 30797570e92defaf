#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "energylab/field.hpp"

namespace energylab {

enum class Law { add, sub, mul, div };

const char* law_name(Law law);
Law law_from_name(const std::string& name);

FieldElem apply_law(const FieldElem& a, const FieldElem& b, Law law);

/// A deduplicated, canonically ordered finite set of elements of one field.
/// The excludes_zero flag is a construction-time promise that 0 never
/// appears; violating it is an error, not a silent dedup.
class FiniteSet {
public:
    FiniteSet() : field_(), excludes_zero_(false) {}
    explicit FiniteSet(GroundField f) : field_(f), excludes_zero_(false) {}

    // Sorts and deduplicates.
    static FiniteSet make(const GroundField& f, std::vector<FieldElem> elems, bool excludes_zero = false);
    // Same, but duplicate elements are an error (generator unions).
    static FiniteSet make_distinct(const GroundField& f, std::vector<FieldElem> elems, bool excludes_zero = false);

    const GroundField& field() const { return field_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool excludes_zero() const { return excludes_zero_; }
    bool contains_zero() const;

    const std::vector<FieldElem>& elems() const { return elems_; }
    const FieldElem& operator[](std::size_t i) const { return elems_[i]; }

    bool contains(const FieldElem& e) const;
    std::optional<std::size_t> index_of(const FieldElem& e) const;

    FiniteSet union_with(const FiniteSet& o) const;
    FiniteSet minus(const FiniteSet& o) const;
    FiniteSet intersect(const FiniteSet& o) const;
    bool disjoint_from(const FiniteSet& o) const;
    bool subset_of(const FiniteSet& o) const;

    // Subset of the elements at the given (sorted, in-range) positions.
    FiniteSet select(const std::vector<std::size_t>& indices) const;
    FiniteSet prefix(std::size_t k) const;
    // Canonical-order halves: even positions first, odd positions second.
    std::pair<FiniteSet, FiniteSet> alternating_split() const;

    FiniteSet with_zero_removed() const;

    bool operator==(const FiniteSet& o) const;

    // Flat payload views for the counting kernels.
    std::vector<std::int64_t> residues() const;   // prime field only
    std::vector<mpq_class> rationals() const;     // characteristic 0 only

private:
    GroundField field_;
    bool excludes_zero_;
    std::vector<FieldElem> elems_;
};

/// {a ∘ b : a in A, b in B}, deduplicated. div requires 0 not in B.
FiniteSet pointwise_combine(const FiniteSet& A, const FiniteSet& B, Law law);

/// {scale·a + shift : a in A}; scale must be nonzero.
FiniteSet affine_image(const FiniteSet& A, const FieldElem& scale, const FieldElem& shift);

/// Pinned cross-ratio set {(a1 - a)/(a2 - a) : a, a1, a2 in A, a2 != a}.
FiniteSet r_set(const FiniteSet& A);

/// A ∩ (A + s) under add, A ∩ (s/A) under mul.
FiniteSet translate_intersection(const FiniteSet& A, const FieldElem& s, Law law);

/// |A ∩ (A - s)| without materializing; used by the BSG extractor.
FiniteSet shift_intersection(const FiniteSet& A, const FieldElem& s, Law law);

FiniteSet negate_set(const FiniteSet& A);
FiniteSet reciprocal_set(const FiniteSet& A);                       // requires 0 not in A
FiniteSet translate_set(const FiniteSet& A, const FieldElem& t);    // A + t
FiniteSet dilate_set(const FiniteSet& A, const FieldElem& x);       // xA, x != 0

}  // namespace energylab
