#include "kscroll/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>

namespace kscroll {

HalfSpace::HalfSpace(IVec3 n, Rational off) : normal(n), offset(std::move(off))
{
    if (n[0] == 0 && n[1] == 0 && n[2] == 0)
        throw std::invalid_argument("half-space normal must be non-zero");
}

Rational HalfSpace::value(const Vec3& y) const
{
    return normal[0] * y[0] + normal[1] * y[1] + normal[2] * y[2] + offset;
}

HalfSpace HalfSpace::complement() const
{
    return HalfSpace({-normal[0], -normal[1], -normal[2]}, -offset);
}

Polytope::Polytope(std::vector<HalfSpace> halfspaces)
    : halfspaces_(std::move(halfspaces)), cache_(std::make_shared<Cache>())
{
}

namespace {

IVec3 cross(const IVec3& a, const IVec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const IVec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

std::int64_t idot(const IVec3& a, const IVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Intersection point of three boundary planes, if they meet in a single point.
std::optional<Vec3> intersect(const HalfSpace& a, const HalfSpace& b, const HalfSpace& c)
{
    const Vec3 r0 = to_vec3(a.normal), r1 = to_vec3(b.normal), r2 = to_vec3(c.normal);
    const Rational d = det3(r0, r1, r2);
    if (d == 0)
        return std::nullopt;
    // <n_i, y> = -offset_i, solved by Cramer's rule.
    const Vec3 rhs{-a.offset, -b.offset, -c.offset};
    const Vec3 col0{r0[0], r1[0], r2[0]}, col1{r0[1], r1[1], r2[1]}, col2{r0[2], r1[2], r2[2]};
    Vec3 y;
    y[0] = det3(rhs, col1, col2) / d;
    y[1] = det3(col0, rhs, col2) / d;
    y[2] = det3(col0, col1, rhs) / d;
    return y;
}

// True when the recession cone { d : <n_i, d> >= 0 } contains a non-zero direction.
bool has_recession_direction(const std::vector<HalfSpace>& hs)
{
    auto admissible = [&](const IVec3& d) {
        return std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) { return idot(h.normal, d) >= 0; });
    };
    if (hs.empty())
        return true;
    bool independent_pair = false;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            IVec3 d = cross(hs[i].normal, hs[j].normal);
            if (is_zero(d))
                continue;
            independent_pair = true;
            if (admissible(d) || admissible({-d[0], -d[1], -d[2]}))
                return true;
        }
    }
    // Normals spanning at most a line leave a whole plane of directions.
    if (!independent_pair)
        return true;
    return false;
}

}  // namespace

const std::vector<Vec3>& Polytope::vertices() const
{
    std::call_once(cache_->once, [this] {
        std::vector<Vec3> found;
        const auto& hs = halfspaces_;
        for (std::size_t i = 0; i < hs.size(); ++i)
            for (std::size_t j = i + 1; j < hs.size(); ++j)
                for (std::size_t k = j + 1; k < hs.size(); ++k) {
                    auto y = intersect(hs[i], hs[j], hs[k]);
                    if (y && std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) { return h.contains(*y); }))
                        found.push_back(std::move(*y));
                }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        // A non-empty polyhedron whose normals have rank 3 always has a vertex,
        // so an empty vertex set with full-rank normals means an empty body.
        const bool recedes = has_recession_direction(hs);
        bool full_rank = false;
        for (std::size_t i = 0; i < hs.size() && !full_rank; ++i)
            for (std::size_t j = i + 1; j < hs.size() && !full_rank; ++j)
                for (std::size_t k = j + 1; k < hs.size(); ++k)
                    if (det3(to_vec3(hs[i].normal), to_vec3(hs[j].normal), to_vec3(hs[k].normal)) != 0) {
                        full_rank = true;
                        break;
                    }
        cache_->unbounded = recedes && (!found.empty() || !full_rank);
        cache_->vertices = std::move(found);
    });
    if (cache_->unbounded)
        throw UnboundedPolytope();
    return cache_->vertices;
}

bool Polytope::contains(const Vec3& y) const
{
    return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const HalfSpace& h) { return h.contains(y); });
}

std::vector<Vec3> enumerate_vertices(const Polytope& p)
{
    return p.vertices();
}

Polytope clip(const Polytope& p, const HalfSpace& h)
{
    auto hs = p.halfspaces();
    hs.push_back(h);
    return Polytope(std::move(hs));
}

std::vector<Tetrahedron> triangulate(const Polytope& p)
{
    const auto& verts = p.vertices();
    std::vector<Tetrahedron> out;
    if (verts.size() < 4)
        return out;
    const Vec3& apex = verts.front();

    std::set<std::vector<std::size_t>> seen;
    for (const auto& h : p.halfspaces()) {
        if (h.on_boundary(apex))
            continue;
        std::vector<std::size_t> face;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (h.on_boundary(verts[i]))
                face.push_back(i);
        if (face.size() < 3 || !seen.insert(face).second)
            continue;

        // Project onto the coordinate plane where the facet normal is largest.
        int drop = 0;
        for (int c = 1; c < 3; ++c)
            if (std::abs(h.normal[c]) > std::abs(h.normal[drop]))
                drop = c;
        const int u = drop == 0 ? 1 : 0;
        const int v = drop == 2 ? 1 : 2;

        const Vec3& pivot = verts[face.front()];
        std::vector<std::size_t> rest(face.begin() + 1, face.end());
        auto turn = [&](std::size_t a, std::size_t b) {
            const Vec3& pa = verts[a];
            const Vec3& pb = verts[b];
            return (pa[u] - pivot[u]) * (pb[v] - pivot[v]) - (pa[v] - pivot[v]) * (pb[u] - pivot[u]);
        };
        // The pivot is extreme, so every other vertex lies in a half-plane around it.
        std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return turn(a, b) > 0; });
        for (std::size_t i = 0; i + 1 < rest.size(); ++i)
            out.push_back({apex, pivot, verts[rest[i]], verts[rest[i + 1]]});
    }
    return out;
}

namespace {

Rational tetra_volume(const Tetrahedron& t)
{
    Rational d = det3(t[1] - t[0], t[2] - t[0], t[3] - t[0]);
    return abs(d) / 6;
}

}  // namespace

Rational volume(const Polytope& p)
{
    Rational total = 0;
    for (const auto& t : triangulate(p))
        total += tetra_volume(t);
    return total;
}

Rational integrate_affine(const Polytope& p, const Vec3& c, const Rational& c0)
{
    Rational total = 0;
    for (const auto& t : triangulate(p)) {
        Rational sum = 0;
        for (const auto& y : t)
            sum += dot(c, y) + c0;
        total += tetra_volume(t) * sum / 4;
    }
    return total;
}

Rational minimize_linear(const Polytope& p, const Vec3& c)
{
    const auto& verts = p.vertices();
    if (verts.empty())
        throw std::invalid_argument("minimize_linear on an empty polytope");
    Rational best = dot(c, verts.front());
    for (const auto& y : verts)
        best = std::min(best, Rational(dot(c, y)));
    return best;
}

}  // namespace kscroll
