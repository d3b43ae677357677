#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "domcells/error.hpp"
#include "domcells/graph.hpp"

namespace domcells {

struct Coord3 {
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;
  friend bool operator==(const Coord3&, const Coord3&) = default;
};

inline std::string to_string(const Coord3& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," + std::to_string(c.z) + ")";
}

// X □ Y □ Z with flat ids laid out z-major: id = z*|Y||X| + y*|X| + x.
// A two-factor product X □ Y is the case Z = K1.
class TripleProduct {
 public:
  TripleProduct(Graph x, Graph y, Graph z)
      : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
    if (x_.order() == 0 || y_.order() == 0 || z_.order() == 0)
      throw Error(ErrorKind::InvalidArgument, "product factors must be nonempty");
    canonical_path_ = is_canonical_path(z_);
    std::vector<Edge> edges;
    for (Vertex c = 0; c < z_.order(); ++c)
      for (Vertex b = 0; b < y_.order(); ++b)
        for (Vertex a = 0; a < x_.order(); ++a) {
          const Vertex self = to_flat_unchecked({a, b, c});
          for (Vertex a2 : x_.neighbors(a))
            if (a < a2) edges.emplace_back(self, to_flat_unchecked({a2, b, c}));
          for (Vertex b2 : y_.neighbors(b))
            if (b < b2) edges.emplace_back(self, to_flat_unchecked({a, b2, c}));
          for (Vertex c2 : z_.neighbors(c))
            if (c < c2) edges.emplace_back(self, to_flat_unchecked({a, b, c2}));
        }
    flat_ = Graph(x_.order() * y_.order() * z_.order(), edges);
  }

  const Graph& factor_x() const noexcept { return x_; }
  const Graph& factor_y() const noexcept { return y_; }
  const Graph& factor_z() const noexcept { return z_; }
  const Graph& flat() const noexcept { return flat_; }
  std::size_t order() const noexcept { return flat_.order(); }

  // Whether Z's vertex ids follow the path order z_1..z_n.
  bool canonical_path() const noexcept { return canonical_path_; }

  Vertex to_flat(const Coord3& c) const {
    if (c.x >= x_.order() || c.y >= y_.order() || c.z >= z_.order())
      throw Error(ErrorKind::InvalidArgument, "coordinate " + to_string(c) + " out of range");
    return to_flat_unchecked(c);
  }

  Coord3 to_coord(Vertex id) const {
    if (id >= order())
      throw Error(ErrorKind::InvalidArgument, "flat id " + std::to_string(id) + " out of range");
    const auto nx = static_cast<Vertex>(x_.order());
    const auto ny = static_cast<Vertex>(y_.order());
    return {id % nx, (id / nx) % ny, id / (nx * ny)};
  }

  std::vector<Vertex> x_fiber(Vertex y, Vertex z) const {
    std::vector<Vertex> out;
    for (Vertex a = 0; a < x_.order(); ++a) out.push_back(to_flat({a, y, z}));
    return out;
  }

  std::vector<Vertex> y_fiber(Vertex x, Vertex z) const {
    std::vector<Vertex> out;
    for (Vertex b = 0; b < y_.order(); ++b) out.push_back(to_flat({x, b, z}));
    return out;
  }

  std::vector<Vertex> z_fiber(Vertex x, Vertex y) const {
    std::vector<Vertex> out;
    for (Vertex c = 0; c < z_.order(); ++c) out.push_back(to_flat({x, y, c}));
    return out;
  }

 private:
  Vertex to_flat_unchecked(const Coord3& c) const {
    return static_cast<Vertex>((c.z * y_.order() + c.y) * x_.order() + c.x);
  }

  Graph x_;
  Graph y_;
  Graph z_;
  Graph flat_;
  bool canonical_path_ = false;
};

inline TripleProduct cartesian3(const Graph& x, const Graph& y, const Graph& z) {
  return TripleProduct(x, y, z);
}

inline TripleProduct cartesian2(const Graph& x, const Graph& y) {
  return TripleProduct(x, y, path_graph(1));
}

}  // namespace domcells
