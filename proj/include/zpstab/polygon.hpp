#pragma once

#include "zpstab/geom.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zpstab {

using VertexPair = std::pair<std::size_t, std::size_t>;

/// A validated simple polygon in general position, counterclockwise, with
/// exact integer vertices. Decimal input is scaled by 10^scale_exponent.
/// Immutable once constructed; only the loaders below create one.
class Polygon {
public:
    std::size_t size() const noexcept { return vertices_.size(); }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }
    std::span<const Point> vertices() const noexcept { return vertices_; }
    int scale_exponent() const noexcept { return scale_exponent_; }

    std::size_t next(std::size_t i) const noexcept { return i + 1 == size() ? 0 : i + 1; }
    std::size_t prev(std::size_t i) const noexcept { return i == 0 ? size() - 1 : i - 1; }
    bool adjacent(std::size_t a, std::size_t b) const noexcept {
        return next(a) == b || next(b) == a;
    }

    /// True when the input arrived clockwise and was reversed on load.
    bool was_reversed() const noexcept { return reversed_; }

private:
    friend Polygon load_polygon(std::vector<Point> raw);
    friend Polygon load_polygon_decimal(const std::vector<std::pair<std::string, std::string>>&);

    std::vector<Point> vertices_;
    int scale_exponent_ = 0;
    bool reversed_ = false;
};

/// Validates and CCW-normalizes a raw vertex list. A clockwise list is
/// reversed keeping vertex 0 in place (0, n-1, ..., 1).
/// Throws Error with TooFewVertices, CoordinateRange, CollinearTriple or NotSimple.
Polygon load_polygon(std::vector<Point> raw);

/// Loads decimal-string coordinates ("12", "-0.25") exactly: all values are
/// scaled by a common power of ten, which preserves every predicate.
Polygon load_polygon_decimal(const std::vector<std::pair<std::string, std::string>>& raw);

/// Twice the signed area.
__int128 doubled_area(std::span<const Point> ring);

struct VertexFlags {
    std::vector<bool> convex;
    std::vector<bool> on_hull;
};

VertexFlags vertex_flags(const Polygon& poly);

/// Indices of the convex hull of `pts` in counterclockwise order, starting
/// from the lowest-leftmost point. Strict: collinear points are dropped.
std::vector<std::size_t> convex_hull_indices(std::span<const Point> pts);

/// Unordered pairs (a < b) of consecutive hull vertices.
std::vector<VertexPair> hull_edges(const Polygon& poly);

/// Unordered pairs (a < b) of polygon edges.
std::vector<VertexPair> polygon_edges(const Polygon& poly);

/// Counterclockwise inclusive index interval from x to y.
std::vector<std::size_t> chain_vertices(std::size_t x, std::size_t y, std::size_t n);

/// Number of vertices in chain [x, y].
constexpr std::size_t chain_length(std::size_t x, std::size_t y, std::size_t n) {
    return (y + n - x) % n + 1;
}

enum class Visibility { Internal, External, Boundary, NotVisible };

const char* to_string(Visibility v);

/// Symmetric n x n visibility classes; the diagonal is NotVisible.
class VisibilityMatrix {
public:
    explicit VisibilityMatrix(std::size_t n) : n_(n), cells_(n * n, Visibility::NotVisible) {}
    std::size_t size() const noexcept { return n_; }
    Visibility at(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }
    void set(std::size_t x, std::size_t y, Visibility v) {
        cells_[x * n_ + y] = v;
        cells_[y * n_ + x] = v;
    }

private:
    std::size_t n_;
    std::vector<Visibility> cells_;
};

/// Coordinate-based ground truth: NotVisible iff the open segment xy
/// properly crosses an edge; Boundary for polygon edges; otherwise the
/// segment midpoint decides Internal vs External.
Visibility classify_pair_geometric(const Polygon& poly, std::size_t x, std::size_t y);
VisibilityMatrix visibility_oracle(const Polygon& poly);

struct TriangularWitness {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t length = 0;  ///< vertices in chain [x, y]
    std::size_t z_internal = 0;
    std::size_t z_external = 0;
    std::vector<std::size_t> hull;  ///< the three hull corners of the chain
};

/// Chain [x, y] is triangular when the hull of its vertices is a triangle
/// with x and y among its corners, and some vertex sees both x and y through
/// I-edges while another sees both through E-edges. A polygon edge counts as
/// either kind, but a witness needs at least one diagonal to x or y.
std::optional<TriangularWitness> is_triangular_chain(const Polygon& poly, std::size_t x,
                                                     std::size_t y);
std::optional<TriangularWitness> is_triangular_chain(const Polygon& poly,
                                                     const VisibilityMatrix& vis, std::size_t x,
                                                     std::size_t y);

/// True iff no chain with at least k vertices is triangular.
bool is_nontriangular(const Polygon& poly, std::size_t k);
bool is_nontriangular(const Polygon& poly, const VisibilityMatrix& vis, std::size_t k);

/// All triangular chains with at least k vertices.
std::vector<TriangularWitness> triangular_chains(const Polygon& poly, const VisibilityMatrix& vis,
                                                 std::size_t k);

}  // namespace zpstab
