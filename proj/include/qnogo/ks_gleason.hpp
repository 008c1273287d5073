#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnogo/hilbert.hpp"

namespace qnogo {

/// Labelled unit vectors in C^d (d >= 3), no two equal up to global phase.
struct VectorSet {
    int dim = 0;
    std::vector<Vector> vectors;
    std::vector<std::string> labels;

    /// Validates norms, phase-distinctness and dim >= 3.
    static VectorSet make(int dim, std::vector<Vector> vectors, std::vector<std::string> labels);

    int size() const { return static_cast<int>(vectors.size()); }
};

/// Complete orthonormal bases drawn from a vector set, as index tuples in
/// lexicographic order.
struct ContextList {
    int dim = 0;
    std::vector<std::vector<int>> contexts;

    int size() const { return static_cast<int>(contexts.size()); }
};

enum class ColoringStatus { colorable, uncolorable };

struct ColoringOutcome {
    ColoringStatus status = ColoringStatus::uncolorable;
    std::optional<std::vector<int>> coloring;  // 0/1 per vector when colorable
    std::uint64_t nodes_explored = 0;
};

/// All size-d cliques of the orthogonality graph (|<u|v>| <= tol), each of
/// which is automatically a complete basis. Lexicographic by index;
/// a set with no complete basis yields an empty list.
ContextList build_contexts(const VectorSet& set, double tol = 1e-9);

/// Complete backtracking over 0/1 colorings: exactly one 1 per context, so
/// no two vectors sharing a context are both 1. Returns the
/// lexicographically least coloring when one exists; uncolorable only after
/// the whole tree is exhausted.
ColoringOutcome ks_search(const ContextList& contexts, int vector_count);

/// Validates a claimed coloring against the contexts, integer-exactly.
bool coloring_satisfies(const ContextList& contexts, const std::vector<int>& coloring);

/// Max over sampled Haar-random orthonormal bases of
/// |sum_k <chi_k|rho|chi_k> - 1|. A true density operator keeps this at
/// numerical-noise scale; deterministic given seed.
double gleason_frame_check(const DensityOperator& rho, int bases, std::uint64_t seed);

/// The 18-vector, 9-basis Kochen-Specker set in d = 4
/// (Cabello-Estebaranz-Garcia-Alcaine). Every vector sits in exactly two of
/// the nine bases, so a 0/1 coloring would have to sum an odd number of
/// contexts out of even per-vector contributions.
VectorSet cabello18();

}  // namespace qnogo
