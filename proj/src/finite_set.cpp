#include "energylab/finite_set.hpp"

#include <algorithm>

namespace energylab {

const char* law_name(Law law) {
    switch (law) {
        case Law::add: return "add";
        case Law::sub: return "sub";
        case Law::mul: return "mul";
        case Law::div: return "div";
    }
    return "?";
}

Law law_from_name(const std::string& name) {
    if (name == "add") return Law::add;
    if (name == "sub") return Law::sub;
    if (name == "mul") return Law::mul;
    if (name == "div") return Law::div;
    throw input_error("unknown law: " + name);
}

FiniteSet FiniteSet::make(const GroundField& f, std::vector<FieldElem> elems, bool excludes_zero) {
    FiniteSet s(f);
    for (const auto& e : elems) {
        if (!(e.field() == f)) throw input_error("element field does not match set field");
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (excludes_zero) {
        for (const auto& e : elems) {
            if (e.is_zero()) throw input_error("zero element in a set declared zero-free");
        }
    }
    s.excludes_zero_ = excludes_zero;
    s.elems_ = std::move(elems);
    return s;
}

FiniteSet FiniteSet::make_distinct(const GroundField& f, std::vector<FieldElem> elems, bool excludes_zero) {
    std::size_t n = elems.size();
    FiniteSet s = make(f, std::move(elems), excludes_zero);
    if (s.size() != n) throw input_error("collision: generator produced repeated elements");
    return s;
}

bool FiniteSet::contains_zero() const {
    return contains(FieldElem::of_int(field_, 0));
}

bool FiniteSet::contains(const FieldElem& e) const {
    return index_of(e).has_value();
}

std::optional<std::size_t> FiniteSet::index_of(const FieldElem& e) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it != elems_.end() && *it == e) return static_cast<std::size_t>(it - elems_.begin());
    return std::nullopt;
}

FiniteSet FiniteSet::union_with(const FiniteSet& o) const {
    std::vector<FieldElem> out = elems_;
    out.insert(out.end(), o.elems_.begin(), o.elems_.end());
    return make(field_, std::move(out), excludes_zero_ && o.excludes_zero_);
}

FiniteSet FiniteSet::minus(const FiniteSet& o) const {
    std::vector<FieldElem> out;
    for (const auto& e : elems_) {
        if (!o.contains(e)) out.push_back(e);
    }
    return make(field_, std::move(out), excludes_zero_);
}

FiniteSet FiniteSet::intersect(const FiniteSet& o) const {
    std::vector<FieldElem> out;
    const FiniteSet& small = size() <= o.size() ? *this : o;
    const FiniteSet& big = size() <= o.size() ? o : *this;
    for (const auto& e : small.elems_) {
        if (big.contains(e)) out.push_back(e);
    }
    return make(field_, std::move(out), excludes_zero_ || o.excludes_zero_);
}

bool FiniteSet::disjoint_from(const FiniteSet& o) const {
    return intersect(o).empty();
}

bool FiniteSet::subset_of(const FiniteSet& o) const {
    for (const auto& e : elems_) {
        if (!o.contains(e)) return false;
    }
    return true;
}

FiniteSet FiniteSet::select(const std::vector<std::size_t>& indices) const {
    std::vector<FieldElem> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= elems_.size()) throw invariant_error("select index out of range");
        out.push_back(elems_[i]);
    }
    return make(field_, std::move(out), excludes_zero_);
}

FiniteSet FiniteSet::prefix(std::size_t k) const {
    std::vector<FieldElem> out(elems_.begin(), elems_.begin() + std::min(k, elems_.size()));
    return make(field_, std::move(out), excludes_zero_);
}

std::pair<FiniteSet, FiniteSet> FiniteSet::alternating_split() const {
    std::vector<FieldElem> even, odd;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        (i % 2 == 0 ? even : odd).push_back(elems_[i]);
    }
    return {make(field_, std::move(even), excludes_zero_), make(field_, std::move(odd), excludes_zero_)};
}

FiniteSet FiniteSet::with_zero_removed() const {
    std::vector<FieldElem> out;
    for (const auto& e : elems_) {
        if (!e.is_zero()) out.push_back(e);
    }
    return make(field_, std::move(out), true);
}

bool FiniteSet::operator==(const FiniteSet& o) const {
    return field_ == o.field_ && elems_ == o.elems_;
}

std::vector<std::int64_t> FiniteSet::residues() const {
    if (!field_.is_prime_field()) throw invariant_error("residues() on a rational set");
    std::vector<std::int64_t> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(e.res());
    return out;
}

std::vector<mpq_class> FiniteSet::rationals() const {
    if (field_.is_prime_field()) throw invariant_error("rationals() on a residue set");
    std::vector<mpq_class> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(e.rat());
    return out;
}

FieldElem apply_law(const FieldElem& a, const FieldElem& b, Law law) {
    switch (law) {
        case Law::add: return a + b;
        case Law::sub: return a - b;
        case Law::mul: return a * b;
        case Law::div: return a / b;
    }
    throw invariant_error("bad law");
}

FiniteSet pointwise_combine(const FiniteSet& A, const FiniteSet& B, Law law) {
    if (!(A.field() == B.field())) throw input_error("pointwise_combine: field mismatch");
    if (law == Law::div && B.contains_zero()) throw input_error("pointwise_combine: division with 0 in B");
    std::vector<FieldElem> out;
    out.reserve(A.size() * B.size());
    for (const auto& a : A.elems()) {
        for (const auto& b : B.elems()) {
            out.push_back(apply_law(a, b, law));
        }
    }
    return FiniteSet::make(A.field(), std::move(out));
}

FiniteSet affine_image(const FiniteSet& A, const FieldElem& scale, const FieldElem& shift) {
    if (scale.is_zero()) throw input_error("affine_image: scale must be nonzero");
    std::vector<FieldElem> out;
    out.reserve(A.size());
    for (const auto& a : A.elems()) out.push_back(scale * a + shift);
    FiniteSet img = FiniteSet::make(A.field(), std::move(out));
    if (img.size() != A.size()) throw invariant_error("affine_image lost elements");
    return img;
}

FiniteSet r_set(const FiniteSet& A) {
    if (A.size() < 2) {
        if (A.size() < 1) throw input_error("r_set: |A| >= 2 required");
        return FiniteSet(A.field());  // no a2 != a exists
    }
    std::vector<FieldElem> out;
    for (const auto& a : A.elems()) {
        for (const auto& a2 : A.elems()) {
            if (a2 == a) continue;
            FieldElem den = a2 - a;
            for (const auto& a1 : A.elems()) {
                out.push_back((a1 - a) / den);
            }
        }
    }
    return FiniteSet::make(A.field(), std::move(out));
}

FiniteSet translate_intersection(const FiniteSet& A, const FieldElem& s, Law law) {
    if (law == Law::add) {
        std::vector<FieldElem> out;
        for (const auto& a : A.elems()) {
            if (A.contains(a - s)) out.push_back(a);   // a in A + s
        }
        return FiniteSet::make(A.field(), std::move(out), A.excludes_zero());
    }
    if (law == Law::mul) {
        if (s.is_zero()) throw input_error("translate_intersection: s must be nonzero under mul");
        if (A.contains_zero()) throw input_error("translate_intersection: 0 in A under mul");
        std::vector<FieldElem> out;
        for (const auto& a : A.elems()) {
            if (A.contains(s / a)) out.push_back(a);   // a in s/A
        }
        return FiniteSet::make(A.field(), std::move(out), true);
    }
    throw input_error("translate_intersection: law must be add or mul");
}

FiniteSet shift_intersection(const FiniteSet& A, const FieldElem& s, Law law) {
    std::vector<FieldElem> out;
    if (law == Law::add) {
        for (const auto& a : A.elems()) {
            if (A.contains(a + s)) out.push_back(a);   // a in A - s
        }
    } else if (law == Law::mul) {
        if (s.is_zero() || A.contains_zero()) throw input_error("shift_intersection: zero under mul");
        for (const auto& a : A.elems()) {
            if (A.contains(a * s)) out.push_back(a);   // a in A/s
        }
    } else {
        throw input_error("shift_intersection: law must be add or mul");
    }
    return FiniteSet::make(A.field(), std::move(out), A.excludes_zero());
}

FiniteSet negate_set(const FiniteSet& A) {
    std::vector<FieldElem> out;
    for (const auto& a : A.elems()) out.push_back(-a);
    return FiniteSet::make(A.field(), std::move(out), A.excludes_zero());
}

FiniteSet reciprocal_set(const FiniteSet& A) {
    if (A.contains_zero()) throw input_error("reciprocal_set: 0 in A");
    std::vector<FieldElem> out;
    for (const auto& a : A.elems()) out.push_back(a.inverse());
    return FiniteSet::make(A.field(), std::move(out), true);
}

FiniteSet translate_set(const FiniteSet& A, const FieldElem& t) {
    std::vector<FieldElem> out;
    for (const auto& a : A.elems()) out.push_back(a + t);
    return FiniteSet::make(A.field(), std::move(out));
}

FiniteSet dilate_set(const FiniteSet& A, const FieldElem& x) {
    if (x.is_zero()) throw input_error("dilate_set: x must be nonzero");
    std::vector<FieldElem> out;
    for (const auto& a : A.elems()) out.push_back(a * x);
    return FiniteSet::make(A.field(), std::move(out), A.excludes_zero());
}

}  // namespace energylab
