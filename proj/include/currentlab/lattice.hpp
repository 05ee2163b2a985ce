#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace currentlab {

enum class Boundary { Open, Periodic };

using Coord = std::vector<int>;

// A nearest-neighbor bond (a, a+e_axis). Site coordinates are stored in the
// lattice's canonical range; `wraps` marks bonds that cross a periodic seam.
struct Bond {
  Coord a;
  Coord b;
  int axis = 0;
  bool wraps = false;
};

// Finite d-dimensional cube of spin-1/2 sites with per-axis boundary
// conditions. Sites are enumerated row-major over coordinates; site index 0
// is the most significant tensor factor of the 2^N Hilbert space.
class LatticeSpec {
 public:
  LatticeSpec(int dimension, std::vector<int> sides, std::vector<Boundary> boundary);

  static LatticeSpec chain(int length, Boundary bc);
  static LatticeSpec ring(int length) { return chain(length, Boundary::Periodic); }

  int dimension() const { return dimension_; }
  const std::vector<int>& sides() const { return sides_; }
  Boundary boundary(int axis) const { return boundary_[axis]; }
  bool periodic(int axis) const { return boundary_[axis] == Boundary::Periodic; }
  bool all_periodic() const;
  bool is_ring() const { return dimension_ == 1 && periodic(0); }

  int site_count() const { return site_count_; }
  // 2^N; throws DimensionOverflow beyond `cap`.
  std::int64_t hilbert_dim(std::int64_t cap) const;

  bool contains(const Coord& c) const;
  int site_index(const Coord& c) const;
  Coord coordinate(int site) const;

  // Minimal-image displacement component along `axis`, in (-L/2, L/2] for
  // periodic axes; the raw difference for open axes.
  int chart_displacement(int delta, int axis) const;
  Coord chart_displacement(const Coord& from, const Coord& to) const;
  // Chart coordinate of a site relative to the origin.
  Coord chart_coordinate(const Coord& site) const { return chart_displacement(origin(), site); }
  Coord origin() const { return Coord(dimension_, 0); }

  // Canonical site reached from `c` by one step along +axis, or false if the
  // step leaves an open lattice.
  bool neighbor(const Coord& c, int axis, Coord& out, bool& wrapped) const;

  // All nearest-neighbor bonds along `axis`, in row-major site order.
  std::vector<Bond> bonds(int axis) const;
  std::vector<Bond> all_bonds() const;

  // One-site translation along +axis as a permutation of site indices:
  // perm[s] = index of the site s moves to. Periodic axes only.
  std::vector<int> site_translation(int axis) const;
  // The induced permutation of the 2^N basis states.
  std::vector<std::int64_t> basis_translation(int axis) const;

  // All chart displacement vectors (minimal image per axis), row-major.
  std::vector<Coord> chart_displacements() const;

  std::string describe() const;

 private:
  int dimension_;
  std::vector<int> sides_;
  std::vector<Boundary> boundary_;
  int site_count_;
};

}  // namespace currentlab
