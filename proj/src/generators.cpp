#include "energylab/generators.hpp"

#include <algorithm>
#include <cctype>

namespace energylab {

namespace {

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw input_error("empty number");
    try {
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw input_error("bad rational literal: " + s);
    }
}

FieldElem elem_from_string(const std::string& s, const GroundField& f) {
    mpq_class q = parse_rational(s);
    if (!f.is_prime_field()) return FieldElem::rational(q);
    std::int64_t p = f.characteristic();
    std::int64_t num = static_cast<std::int64_t>(mpz_fdiv_ui(q.get_num().get_mpz_t(), static_cast<unsigned long>(p)));
    std::int64_t den = static_cast<std::int64_t>(mpz_fdiv_ui(q.get_den().get_mpz_t(), static_cast<unsigned long>(p)));
    if (den == 0) throw input_error("denominator divisible by p in " + s);
    return FieldElem::residue(f, mod_mul(num, mod_inv(den, p), p));
}

}  // namespace

FiniteSet gen_ap(const GroundField& f, const FieldElem& start, const FieldElem& step, std::size_t n) {
    if (n == 0) throw input_error("ap: n must be positive");
    if (step.is_zero() && n > 1) throw input_error("ap: zero step");
    std::vector<FieldElem> out;
    out.reserve(n);
    FieldElem cur = start;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(cur);
        cur = cur + step;
    }
    bool zero_free = std::none_of(out.begin(), out.end(), [](const FieldElem& e) { return e.is_zero(); });
    return FiniteSet::make_distinct(f, std::move(out), zero_free);
}

FiniteSet gen_gp(const GroundField& f, const FieldElem& start, const FieldElem& ratio, std::size_t n) {
    if (n == 0) throw input_error("gp: n must be positive");
    if (start.is_zero()) throw input_error("gp: zero start");
    if (ratio.is_zero()) throw input_error("gp: zero ratio");
    std::vector<FieldElem> out;
    out.reserve(n);
    FieldElem cur = start;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(cur);
        cur = cur * ratio;
    }
    return FiniteSet::make_distinct(f, std::move(out), true);
}

FiniteSet gen_range(const GroundField& f, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw input_error("range: lo > hi");
    std::vector<FieldElem> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(FieldElem::of_int(f, v));
    bool zero_free = std::none_of(out.begin(), out.end(), [](const FieldElem& e) { return e.is_zero(); });
    return FiniteSet::make_distinct(f, std::move(out), zero_free);
}

FiniteSet gen_bw_union(const GroundField& f, std::size_t n) {
    if (n == 0) throw input_error("bw_union: n must be positive");
    FiniteSet ap = gen_ap(f, FieldElem::of_int(f, 1), FieldElem::of_int(f, 1), n);
    FiniteSet gp = gen_gp(f, FieldElem::of_int(f, static_cast<std::int64_t>(n) + 1), FieldElem::of_int(f, 2), n);
    std::vector<FieldElem> out = ap.elems();
    out.insert(out.end(), gp.elems().begin(), gp.elems().end());
    return FiniteSet::make_distinct(f, std::move(out), true);
}

FiniteSet gen_bw_intertwined(const GroundField& f, std::size_t n) {
    if (n == 0) throw input_error("bw_intertwined: n must be positive");
    std::vector<FieldElem> out;
    std::int64_t n2 = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n);
    FieldElem two = FieldElem::of_int(f, 2);
    FieldElem dilate = FieldElem::of_int(f, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::int64_t v = n2; v < 2 * n2; ++v) {
            out.push_back(dilate * FieldElem::of_int(f, v));
        }
        dilate = dilate * two;
    }
    return FiniteSet::make_distinct(f, std::move(out), true);
}

FiniteSet gen_random_subset(const FiniteSet& parent, const mpq_class& alpha, std::uint64_t seed) {
    if (alpha < 0 || alpha > 1) throw input_error("random_subset: density must lie in [0,1]");
    // threshold = floor(alpha * 2^64); keep each element when draw < threshold
    mpq_class scaled = alpha * mpq_class(mpz_class(1) << 64);
    mpz_class threshold;
    mpz_fdiv_q(threshold.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    Rng rng(seed);
    std::vector<FieldElem> out;
    for (const auto& e : parent.elems()) {
        mpz_class draw(static_cast<unsigned long>(rng.next()));
        if (draw < threshold) out.push_back(e);
    }
    return FiniteSet::make(parent.field(), std::move(out), parent.excludes_zero());
}

std::vector<std::size_t> Rng::sample_indices(std::size_t n, std::size_t k) {
    if (k > n) throw input_error("sample: k > n");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

FiniteSet gen_sample_k(const FiniteSet& parent, std::size_t k, std::uint64_t seed) {
    Rng rng(seed);
    return parent.select(rng.sample_indices(parent.size(), k));
}

std::int64_t smallest_primitive_root(std::int64_t p) {
    std::vector<std::int64_t> prime_factors;
    std::int64_t m = p - 1;
    for (std::int64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            prime_factors.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    auto powmod = [p](std::int64_t a, std::int64_t e) {
        std::int64_t r = 1;
        while (e) {
            if (e & 1) r = mod_mul(r, a, p);
            a = mod_mul(a, a, p);
            e >>= 1;
        }
        return r;
    };
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::int64_t q : prime_factors) {
            if (powmod(g, (p - 1) / q) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw invariant_error("no primitive root found mod " + std::to_string(p));
}

FiniteSet gen_mult_subgroup(std::int64_t p, std::int64_t d) {
    GroundField f = GroundField::prime(p);
    if (d < 1 || (p - 1) % d != 0) {
        throw input_error("mult_subgroup: order " + std::to_string(d) + " does not divide p-1");
    }
    std::int64_t g = smallest_primitive_root(p);
    std::int64_t h = 1, step = (p - 1) / d;
    // h = g^step generates the unique subgroup of order d
    std::int64_t e = step, base = g;
    while (e) {
        if (e & 1) h = mod_mul(h, base, p);
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    std::vector<FieldElem> out;
    std::int64_t cur = 1;
    for (std::int64_t i = 0; i < d; ++i) {
        out.push_back(FieldElem::residue(f, cur));
        cur = mod_mul(cur, h, p);
    }
    return FiniteSet::make_distinct(f, std::move(out), true);
}

FiniteSet gen_sidon(const GroundField& f, std::size_t n) {
    // Mian-Chowla: greedily extend keeping all pairwise sums distinct.
    std::vector<std::int64_t> picked;
    std::vector<std::int64_t> sums;   // sorted pairwise sums (with repetitions of picked allowed: a<=b)
    auto sum_taken = [&](std::int64_t s) {
        return std::binary_search(sums.begin(), sums.end(), s);
    };
    std::int64_t candidate = 1;
    while (picked.size() < n) {
        bool ok = true;
        for (std::int64_t a : picked) {
            if (sum_taken(a + candidate)) { ok = false; break; }
        }
        if (ok && sum_taken(2 * candidate)) ok = false;
        if (ok) {
            picked.push_back(candidate);
            for (std::int64_t a : picked) {
                sums.insert(std::upper_bound(sums.begin(), sums.end(), a + candidate), a + candidate);
            }
        }
        ++candidate;
    }
    std::vector<FieldElem> out;
    out.reserve(n);
    for (std::int64_t v : picked) out.push_back(FieldElem::of_int(f, v));
    return FiniteSet::make_distinct(f, std::move(out), true);
}

namespace {

// Split "a,b,c" at top level (no nested parens expected for commas we split on).
std::vector<std::string> split_args(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::int64_t parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(strip(s), &pos);
        if (pos != strip(s).size()) throw input_error("bad integer: " + s);
        return v;
    } catch (const std::exception&) {
        throw input_error("bad integer: " + s);
    }
}

}  // namespace

FiniteSet generate_from_spec(const std::string& raw, const GroundField& f) {
    std::string spec = strip(raw);
    std::size_t open = spec.find('(');
    if (open == std::string::npos || spec.back() != ')') {
        throw input_error("bad generator spec: " + spec);
    }
    std::string name = spec.substr(0, open);
    std::string body = spec.substr(open + 1, spec.size() - open - 2);
    if (name == "ap") {
        auto a = split_args(body, ',');
        if (a.size() != 3) throw input_error("ap(start,step,n)");
        return gen_ap(f, elem_from_string(strip(a[0]), f), elem_from_string(strip(a[1]), f),
                      static_cast<std::size_t>(parse_int(a[2])));
    }
    if (name == "gp") {
        auto a = split_args(body, ',');
        if (a.size() != 3) throw input_error("gp(start,ratio,n)");
        return gen_gp(f, elem_from_string(strip(a[0]), f), elem_from_string(strip(a[1]), f),
                      static_cast<std::size_t>(parse_int(a[2])));
    }
    if (name == "bw_union") {
        auto a = split_args(body, ',');
        if (a.size() != 1) throw input_error("bw_union(n)");
        return gen_bw_union(f, static_cast<std::size_t>(parse_int(a[0])));
    }
    if (name == "bw_intertwined") {
        auto a = split_args(body, ',');
        if (a.size() != 1) throw input_error("bw_intertwined(n)");
        return gen_bw_intertwined(f, static_cast<std::size_t>(parse_int(a[0])));
    }
    if (name == "range") {
        auto a = split_args(body, ',');
        if (a.size() != 2) throw input_error("range(lo,hi)");
        return gen_range(f, parse_int(a[0]), parse_int(a[1]));
    }
    if (name == "mult_subgroup") {
        auto a = split_args(body, ',');
        if (!f.is_prime_field()) throw input_error("mult_subgroup requires a prime field");
        if (a.size() != 1) throw input_error("mult_subgroup(d)");
        return gen_mult_subgroup(f.characteristic(), parse_int(a[0]));
    }
    if (name == "sidon") {
        auto a = split_args(body, ',');
        if (a.size() != 1) throw input_error("sidon(n)");
        return gen_sidon(f, static_cast<std::size_t>(parse_int(a[0])));
    }
    if (name == "random") {
        auto a = split_args(body, ';');
        if (a.size() != 3) throw input_error("random(<parent>;<alpha>;<seed>)");
        FiniteSet parent = generate_from_spec(a[0], f);
        return gen_random_subset(parent, parse_rational(strip(a[1])), static_cast<std::uint64_t>(parse_int(a[2])));
    }
    if (name == "sample") {
        auto a = split_args(body, ';');
        if (a.size() != 3) throw input_error("sample(<parent>;<k>;<seed>)");
        FiniteSet parent = generate_from_spec(a[0], f);
        return gen_sample_k(parent, static_cast<std::size_t>(parse_int(a[1])),
                            static_cast<std::uint64_t>(parse_int(a[2])));
    }
    throw input_error("unknown generator: " + name);
}

}  // namespace energylab
