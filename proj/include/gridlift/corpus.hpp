#ifndef GRIDLIFT_CORPUS_HPP
#define GRIDLIFT_CORPUS_HPP

#include "gridlift/triangulation.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Hand-made and random instances used by tests, the acceptance suite and `bench`.
namespace gridlift::corpus {

PlaneTriangulation triangle();

/// Unit square (1,1),(2,1),(2,2),(1,2) = ids 0..3, split by the diagonal
/// 0-2 (main) or 1-3.
PlaneTriangulation split_square(bool main_diagonal = true);

/// Triangle 0,1,2 with vertex 3 inside, adjacent to all three.
PlaneTriangulation stacked_k4();

/// Convex k-gon 0..k-1 triangulated as a fan from vertex 0.
PlaneTriangulation polygon_fan(std::size_t k);

/// Octahedron graph drawn with outer triangle 0,1,2 and inner triangle 3,4,5.
PlaneTriangulation octahedron();

/// Random stacked triangulation: repeatedly subdivide a uniformly chosen face.
PlaneTriangulation random_stacked(std::size_t n, std::uint64_t seed);

/// Random triangulated disk with a non-triangular boundary: a random stacked
/// triangulation with `extra` random shedding vertices removed, relabelled densely.
PlaneTriangulation random_disk(std::size_t n, std::size_t extra, std::uint64_t seed);

/// Relabels vertex ids to 0..n-1 preserving their order.
PlaneTriangulation compact(const PlaneTriangulation& g);

struct Instance {
    std::string name;
    PlaneTriangulation graph;
};

/// Small hand instances (triangle, square, K4, fans, octahedron).
std::vector<Instance> hand_instances();

}  // namespace gridlift::corpus

#endif  // GRIDLIFT_CORPUS_HPP
