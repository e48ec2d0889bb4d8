#ifndef GRIDLIFT_DIAMETER_HPP
#define GRIDLIFT_DIAMETER_HPP

#include "gridlift/triangulation.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gridlift {

class TooLarge : public Error {
public:
    using Error::Error;
};

class BadParams : public Error {
public:
    using Error::Error;
};

class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// Heights tau(a_i, a) and the relation a_j -> a_i (j < i, adjacent in G_i).
struct TauProfile {
    std::vector<std::size_t> heights;                ///< by id
    std::size_t tau = 0;
    std::vector<std::vector<VertexId>> predecessors; ///< by id, earlier neighbours
    std::vector<std::size_t> rank;                   ///< by id, 1-based position in the sequence

    /// u <=_a v in the transitive closure (reflexive).
    bool precedes(VertexId u, VertexId v) const;
    bool comparable(VertexId u, VertexId v) const { return precedes(u, v) || precedes(v, u); }
};

TauProfile tau_profile(const PlaneTriangulation& g, const SheddingSequence& seq);

/// Number of vertices on a longest path of the DAG whose arcs are the edges of
/// G directed from the earlier to the later endpoint in the sequence.
std::size_t longest_chain(const PlaneTriangulation& g, const SheddingSequence& seq);

/// Smallest tau over all shedding sequences and the lexicographically first
/// sequence attaining it. Throws TooLarge when n > max_n.
std::pair<std::size_t, SheddingSequence> min_tau_exhaustive(const PlaneTriangulation& g,
                                                            std::size_t max_n = 9);

/// Triangulation of the p x q grid with vertex (x, y), 1 <= x <= p, 1 <= y <= q,
/// at id (y - 1) p + (x - 1).
struct GridTriangulation {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t l = 0;
    PlaneTriangulation base;

    VertexId id(std::size_t x, std::size_t y) const { return static_cast<VertexId>((y - 1) * p + (x - 1)); }
};

GridTriangulation gen_grid_triangulation(std::size_t p, std::size_t q, std::size_t l,
                                         std::uint64_t seed);

/// Throws BadParams unless `g` is a triangulation of [p x q] with the grid ids,
/// all boundary grid edges present and every edge inside an l x l subgrid.
GridTriangulation make_grid_triangulation(PlaneTriangulation g, std::size_t p, std::size_t q,
                                          std::size_t l);

struct SheddingPlan {
    SheddingSequence sequence;
    /// Partition into antichains, listed in sequence order.
    std::vector<std::vector<VertexId>> antichains;
    std::vector<int> stage;             ///< by id: 1, 2 or 3
    std::size_t stage_steps[3] = {0, 0, 0};
    std::size_t stage_batches[3] = {0, 0, 0};
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t l = 0;

    std::size_t tau_bound() const { return 6 * l * (p + q); }
    std::size_t antichain_bound() const { return l * (2 * p + 6 * q); }
};

SheddingPlan grid_shedding(const GridTriangulation& grid);

}  // namespace gridlift

#endif  // GRIDLIFT_DIAMETER_HPP
