#pragma once

#include <string>

#include "energylab/finite_set.hpp"
#include "energylab/rng.hpp"

namespace energylab {

/// Arithmetic progression {start + i*step : 0 <= i < n}.
FiniteSet gen_ap(const GroundField& f, const FieldElem& start, const FieldElem& step, std::size_t n);

/// Geometric progression {start * ratio^i : 0 <= i < n}.
FiniteSet gen_gp(const GroundField& f, const FieldElem& start, const FieldElem& ratio, std::size_t n);

/// Integer interval [lo, hi] embedded in the field.
FiniteSet gen_range(const GroundField& f, std::int64_t lo, std::int64_t hi);

/// Disjoint union of an n-term AP and an n-term GP. The GP starts above
/// max(AP) so the union is disjoint by construction; any collision is an
/// error. Defaults: AP = 1,2,...,n and GP = (n+1)*2^i.
FiniteSet gen_bw_union(const GroundField& f, std::size_t n);

/// Union over i < n of 2^i * [n^2, 2n^2); n^3 elements.
FiniteSet gen_bw_intertwined(const GroundField& f, std::size_t n);

/// Keep each element of parent independently with probability alpha (exact
/// rational threshold against a 64-bit draw).
FiniteSet gen_random_subset(const FiniteSet& parent, const mpq_class& alpha, std::uint64_t seed);

/// Exactly k elements of parent chosen uniformly (seeded).
FiniteSet gen_sample_k(const FiniteSet& parent, std::size_t k, std::uint64_t seed);

/// The unique multiplicative subgroup of F_p^* of order d (requires d | p-1).
FiniteSet gen_mult_subgroup(std::int64_t p, std::int64_t d);

/// Greedy Sidon set (Mian-Chowla prefix of length n), all pairwise sums
/// distinct; additive energy is exactly 2n^2 - n.
FiniteSet gen_sidon(const GroundField& f, std::size_t n);

/// Parse a generator expression, e.g. "ap(1,1,16)", "gp(1,2,8)",
/// "bw_union(32)", "bw_intertwined(3)", "range(1,100)", "mult_subgroup(20)"
/// (order of the subgroup; p comes from the field), "sidon(8)",
/// "random(<parent>;<alpha>;<seed>)", "sample(<parent>;<k>;<seed>)".
FiniteSet generate_from_spec(const std::string& spec, const GroundField& f);

std::int64_t smallest_primitive_root(std::int64_t p);

}  // namespace energylab
