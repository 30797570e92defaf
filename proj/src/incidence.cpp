#include "energylab/incidence.hpp"

#include <algorithm>
#include <unordered_map>

namespace energylab {

namespace {

mpz_class size_z(std::size_t n) { return mpz_class(static_cast<unsigned long>(n)); }

}  // namespace

bool Point::operator<(const Point& o) const {
    if (!(x == o.x)) return x < o.x;
    if (!(y == o.y)) return y < o.y;
    return z < o.z;
}

bool Line2::operator==(const Line2& o) const {
    return vertical == o.vertical && slope == o.slope && intercept == o.intercept;
}

bool Line2::operator<(const Line2& o) const {
    if (vertical != o.vertical) return vertical < o.vertical;
    if (!(slope == o.slope)) return slope < o.slope;
    return intercept < o.intercept;
}

bool Plane3::operator<(const Plane3& o) const {
    if (!(a == o.a)) return a < o.a;
    if (!(b == o.b)) return b < o.b;
    if (!(c == o.c)) return c < o.c;
    return d < o.d;
}

PointSet PointSet::make2(const GroundField& f, std::vector<std::pair<FieldElem, FieldElem>> pts) {
    PointSet ps;
    ps.dim_ = 2;
    ps.field_ = f;
    FieldElem zero = FieldElem::of_int(f, 0);
    for (auto& [x, y] : pts) ps.pts_.push_back(Point{x, y, zero});
    std::sort(ps.pts_.begin(), ps.pts_.end());
    ps.pts_.erase(std::unique(ps.pts_.begin(), ps.pts_.end()), ps.pts_.end());
    return ps;
}

PointSet PointSet::make3(const GroundField& f, std::vector<Point> pts) {
    PointSet ps;
    ps.dim_ = 3;
    ps.field_ = f;
    ps.pts_ = std::move(pts);
    std::sort(ps.pts_.begin(), ps.pts_.end());
    ps.pts_.erase(std::unique(ps.pts_.begin(), ps.pts_.end()), ps.pts_.end());
    return ps;
}

LineFamily LineFamily::make(const GroundField& f, std::vector<Line2> lines) {
    LineFamily fam;
    fam.field_ = f;
    std::sort(lines.begin(), lines.end());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i] == lines[i - 1]) throw input_error("LineFamily: duplicate line");
    }
    fam.lines_ = std::move(lines);
    return fam;
}

PlaneFamily PlaneFamily::make(const GroundField& f, std::vector<Plane3> planes) {
    PlaneFamily fam;
    fam.field_ = f;
    for (auto& pl : planes) {
        FieldElem lead = !pl.a.is_zero() ? pl.a : (!pl.b.is_zero() ? pl.b : pl.c);
        if (lead.is_zero()) throw input_error("PlaneFamily: (a,b,c) must be nonzero");
        FieldElem inv = lead.inverse();
        pl.a = pl.a * inv;
        pl.b = pl.b * inv;
        pl.c = pl.c * inv;
        pl.d = pl.d * inv;
    }
    std::sort(planes.begin(), planes.end());
    for (std::size_t i = 1; i < planes.size(); ++i) {
        if (planes[i] == planes[i - 1]) throw input_error("PlaneFamily: duplicate plane (up to scaling)");
    }
    fam.planes_ = std::move(planes);
    return fam;
}

LineIncidenceReport count_line_incidences(const PointSet& points, const LineFamily& lines) {
    if (points.dim() != 2) throw input_error("count_line_incidences: dim 2 required");
    if (!(points.field() == lines.field())) throw input_error("count_line_incidences: field mismatch");
    LineIncidenceReport rep;
    rep.m = lines.size();
    rep.n = points.size();
    unsigned long inc = 0;
    for (const auto& l : lines.lines()) {
        for (const auto& pt : points.points()) {
            if (l.vertical ? pt.x == l.intercept : pt.y == l.slope * pt.x + l.intercept) ++inc;
        }
    }
    rep.I = inc;
    rep.st_bound = pow_q(mpz_class(size_z(rep.m) * size_z(rep.n)), mpq_class(2, 3))
                       .add(BigFloat::of(size_z(rep.m)))
                       .add(BigFloat::of(size_z(rep.n)));
    rep.ratio = BigFloat::of(rep.I).div(rep.st_bound);
    return rep;
}

std::size_t max_collinear(const PointSet& points) {
    if (points.size() < 2) throw input_error("max_collinear: at least 2 points required");
    struct DirHash {
        std::size_t operator()(const Point& d) const {
            return d.x.hash() * 0x9e3779b97f4a7c15ull + d.y.hash() * 0xb5297a4d3a2dull + d.z.hash();
        }
    };
    std::size_t best = 0;
    const auto& pts = points.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::unordered_map<Point, std::size_t, DirHash> dirs;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            FieldElem dx = pts[j].x - pts[i].x;
            FieldElem dy = pts[j].y - pts[i].y;
            FieldElem dz = pts[j].z - pts[i].z;
            FieldElem lead = !dx.is_zero() ? dx : (!dy.is_zero() ? dy : dz);
            FieldElem inv = lead.inverse();
            Point dir{dx * inv, dy * inv, dz * inv};
            best = std::max(best, ++dirs[dir]);
        }
    }
    return best + 1;
}

PlaneIncidenceReport count_plane_incidences(const PointSet& points, const PlaneFamily& planes) {
    if (points.dim() != 3) throw input_error("count_plane_incidences: dim 3 required");
    if (!(points.field() == planes.field())) throw input_error("count_plane_incidences: field mismatch");
    PlaneIncidenceReport rep;
    rep.m = planes.size();
    rep.n = points.size();
    if (points.field().is_prime_field()) {
        mpz_class p(static_cast<unsigned long>(points.field().characteristic()));
        if (size_z(rep.n) > p * p) rep.warnings.push_back("n > p^2: outside the stated constraint");
    }
    if (rep.n > rep.m) {
        rep.outside_regime = true;
        rep.warnings.push_back("n > m: the bound is stated for n <= m");
    }
    unsigned long inc = 0;
    for (const auto& pl : planes.planes()) {
        for (const auto& pt : points.points()) {
            if ((pl.a * pt.x + pl.b * pt.y + pl.c * pt.z + pl.d).is_zero()) ++inc;
        }
    }
    rep.I = inc;
    rep.k = max_collinear(points);
    rep.mr_bound = BigFloat::of(size_z(rep.m))
                       .mul(pow_q(size_z(rep.n), mpq_class(1, 2)).add(BigFloat::of(size_z(rep.k))));
    rep.ratio = BigFloat::of(rep.I).div(rep.mr_bound);
    return rep;
}

CrosscheckReport energy_plane_crosscheck(const FiniteSet& A1, const FiniteSet& P, const FiniteSet& A) {
    const GroundField& f = A.field();
    if (!(A1.field() == f) || !(P.field() == f)) throw input_error("crosscheck: field mismatch");
    if (P.contains_zero()) throw input_error("crosscheck: 0 in P");
    if (A1.empty() || P.empty() || A.empty()) throw input_error("crosscheck: empty input");
    unsigned long side = static_cast<unsigned long>(A1.size()) * P.size() * A.size();
    if (side > 100000) throw input_error("crosscheck: |A1||P||A| above the 1e5 cap");

    CrosscheckReport rep;
    rep.m = side;
    rep.n = side;

    // Geometric side: planes (1/p) x - y - q z + a = 0, points (alpha, a', 1/p').
    std::vector<Plane3> planes;
    planes.reserve(side);
    for (const auto& a : A1.elems()) {
        for (const auto& p : P.elems()) {
            for (const auto& q : A.elems()) {
                planes.push_back(Plane3{p.inverse(), -FieldElem::of_int(f, 1), -q, a});
            }
        }
    }
    std::vector<Point> pts;
    pts.reserve(side);
    for (const auto& alpha : A.elems()) {
        for (const auto& a1 : A1.elems()) {
            for (const auto& p : P.elems()) {
                pts.push_back(Point{alpha, a1, p.inverse()});
            }
        }
    }
    PlaneFamily fam = PlaneFamily::make(f, std::move(planes));
    PointSet ps = PointSet::make3(f, std::move(pts));
    if (fam.size() != side || ps.size() != side) {
        throw invariant_error("crosscheck: plane/point encoding collided");
    }
    unsigned long inc = 0;
    for (const auto& pl : fam.planes()) {
        for (const auto& pt : ps.points()) {
            if ((pl.a * pt.x + pl.b * pt.y + pl.c * pt.z + pl.d).is_zero()) ++inc;
        }
    }
    rep.plane_incidences = inc;

    // Independent count: sum over v of D(v)^2, D(v) = #{a + alpha/p = v}.
    std::unordered_map<FieldElem, unsigned long, FieldElemHash> left;
    for (const auto& a : A1.elems()) {
        for (const auto& alpha : A.elems()) {
            for (const auto& p : P.elems()) {
                ++left[a + alpha / p];
            }
        }
    }
    mpz_class sols = 0;
    for (const auto& [v, c] : left) sols += mpz_class(c) * c;
    rep.equation_solutions = sols;
    rep.equal = rep.plane_incidences == rep.equation_solutions;
    if (!rep.equal) throw invariant_error("crosscheck: incidence count != equation count");
    return rep;
}

}  // namespace energylab
