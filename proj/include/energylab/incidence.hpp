#pragma once

#include <string>
#include <vector>

#include "energylab/bigfloat.hpp"
#include "energylab/finite_set.hpp"

namespace energylab {

struct Point {
    FieldElem x, y, z;
    bool operator==(const Point& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator<(const Point& o) const;
};

/// Unique points in dimension 2 or 3 over one field (z fixed to 0 in dim 2).
class PointSet {
public:
    static PointSet make2(const GroundField& f, std::vector<std::pair<FieldElem, FieldElem>> pts);
    static PointSet make3(const GroundField& f, std::vector<Point> pts);

    int dim() const { return dim_; }
    const GroundField& field() const { return field_; }
    std::size_t size() const { return pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }

private:
    int dim_ = 2;
    GroundField field_;
    std::vector<Point> pts_;
};

/// y = slope x + intercept, or the vertical line x = intercept.
struct Line2 {
    bool vertical = false;
    FieldElem slope;
    FieldElem intercept;
    bool operator==(const Line2& o) const;
    bool operator<(const Line2& o) const;
};

class LineFamily {
public:
    static LineFamily make(const GroundField& f, std::vector<Line2> lines);   // duplicates are an error
    const GroundField& field() const { return field_; }
    std::size_t size() const { return lines_.size(); }
    const std::vector<Line2>& lines() const { return lines_; }

private:
    GroundField field_;
    std::vector<Line2> lines_;
};

/// a x + b y + c z + d = 0 with (a,b,c) != 0, stored with the first nonzero
/// of (a,b,c) scaled to 1 (dedup up to scaling).
struct Plane3 {
    FieldElem a, b, c, d;
    bool operator==(const Plane3& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator<(const Plane3& o) const;
};

class PlaneFamily {
public:
    static PlaneFamily make(const GroundField& f, std::vector<Plane3> planes);
    const GroundField& field() const { return field_; }
    std::size_t size() const { return planes_.size(); }
    const std::vector<Plane3>& planes() const { return planes_; }

private:
    GroundField field_;
    std::vector<Plane3> planes_;
};

struct LineIncidenceReport {
    mpz_class I;
    std::size_t m = 0, n = 0;
    BigFloat st_bound;   // (mn)^{2/3} + m + n
    BigFloat ratio;
};

LineIncidenceReport count_line_incidences(const PointSet& points, const LineFamily& lines);

struct PlaneIncidenceReport {
    mpz_class I;
    std::size_t m = 0, n = 0;
    std::size_t k = 0;          // maximum number of collinear points
    BigFloat mr_bound;          // m (sqrt(n) + k)
    BigFloat ratio;
    bool outside_regime = false;   // n > m; the stated bound assumes n <= m
    std::vector<std::string> warnings;
};

PlaneIncidenceReport count_plane_incidences(const PointSet& points, const PlaneFamily& planes);

/// Exact maximum number of collinear points (normalized direction hashing
/// per anchor); requires at least 2 points.
std::size_t max_collinear(const PointSet& points);

struct CrosscheckReport {
    mpz_class plane_incidences;
    mpz_class equation_solutions;
    bool equal = false;
    std::size_t m = 0, n = 0;
};

/// Builds the plane family { a + x/p = y + q z : (a,p,q) in A1 x P x A } with
/// the point set { (alpha, a', 1/p') : (alpha,a',p') in A x A1 x P }, counts
/// incidences geometrically, and independently counts solutions of
/// a + alpha/p = a' + alpha'/p' by a hash join. The two counts agree by a
/// bijection; inequality is a hard failure.
CrosscheckReport energy_plane_crosscheck(const FiniteSet& A1, const FiniteSet& P, const FiniteSet& A);

}  // namespace energylab
