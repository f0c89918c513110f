#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "kscroll/errors.hpp"
#include "kscroll/rational.hpp"

namespace kscroll {

/// The closed half-space { y : <normal, y> >= -offset }.
struct HalfSpace {
    IVec3 normal;
    Rational offset;

    HalfSpace(IVec3 n, Rational off);

    bool contains(const Vec3& y) const { return value(y) >= 0; }
    /// <normal, y> + offset; non-negative exactly on the half-space.
    Rational value(const Vec3& y) const;
    bool on_boundary(const Vec3& y) const { return value(y) == 0; }
    /// The opposite closed half-space sharing the same boundary plane.
    HalfSpace complement() const;
};

/// Bounded convex body in R^3 given by half-spaces. Vertices are enumerated
/// on first use and cached; copies share the cache.
class Polytope {
public:
    explicit Polytope(std::vector<HalfSpace> halfspaces);

    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

    /// Extreme points, sorted lexicographically. Empty iff the polytope is empty.
    /// Throws UnboundedPolytope.
    const std::vector<Vec3>& vertices() const;

    bool empty() const { return vertices().empty(); }
    bool contains(const Vec3& y) const;

private:
    struct Cache {
        std::once_flag once;
        std::vector<Vec3> vertices;
        bool unbounded = false;
    };

    std::vector<HalfSpace> halfspaces_;
    std::shared_ptr<Cache> cache_;
};

/// Exhaustive facet-triple intersection; see Polytope::vertices.
std::vector<Vec3> enumerate_vertices(const Polytope& p);

/// Exact Euclidean volume; 0 for empty or lower-dimensional bodies.
Rational volume(const Polytope& p);

/// Exact integral of y |-> <c, y> + c0 over p.
Rational integrate_affine(const Polytope& p, const Vec3& c, const Rational& c0);

/// Minimum of <c, y> over a non-empty polytope.
Rational minimize_linear(const Polytope& p, const Vec3& c);

Polytope clip(const Polytope& p, const HalfSpace& h);

/// A tetrahedron of the fan triangulation, as four vertices.
using Tetrahedron = std::array<Vec3, 4>;

/// Cone triangulation from the lexicographically smallest vertex over every
/// facet not containing it; each facet polygon is fanned from its own smallest vertex.
std::vector<Tetrahedron> triangulate(const Polytope& p);

}  // namespace kscroll
