#include "qnogo/ks_gleason.hpp"

#include <algorithm>
#include <cmath>

#include "qnogo/rng.hpp"

namespace qnogo {

VectorSet VectorSet::make(int dim, std::vector<Vector> vectors, std::vector<std::string> labels) {
    if (dim < 3) throw Error("VectorSet: dim must be >= 3");
    if (!labels.empty() && labels.size() != vectors.size())
        throw Error("VectorSet: label count mismatch");
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != dim) throw DimensionMismatch("VectorSet: vector dim mismatch");
        if (!all_finite(vectors[i])) throw Error("VectorSet: non-finite vector entry");
        if (std::abs(vectors[i].norm() - 1.0) > 1e-9)
            throw Error("VectorSet: vector " + std::to_string(i) + " is not unit norm");
        for (std::size_t j = 0; j < i; ++j) {
            // equal up to global phase <=> |<u|v>| = 1
            if (std::abs(std::abs(vectors[j].dot(vectors[i])) - 1.0) <= 1e-9)
                throw Error("VectorSet: vectors " + std::to_string(j) + " and " +
                            std::to_string(i) + " coincide up to phase");
        }
    }
    if (labels.empty())
        for (std::size_t i = 0; i < vectors.size(); ++i) labels.push_back("v" + std::to_string(i));
    return {dim, std::move(vectors), std::move(labels)};
}

namespace {

void extend_clique(const std::vector<std::vector<bool>>& adj, int n, int d,
                   std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == d) {
        out.push_back(current);
        return;
    }
    const int start = current.empty() ? 0 : current.back() + 1;
    const int missing = d - static_cast<int>(current.size());
    for (int cand = start; cand + missing <= n; ++cand) {
        bool ok = true;
        for (int chosen : current)
            if (!adj[chosen][cand]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        current.push_back(cand);
        extend_clique(adj, n, d, current, out);
        current.pop_back();
    }
}

}  // namespace

ContextList build_contexts(const VectorSet& set, double tol) {
    if (tol < 0) throw Error("build_contexts: tol must be >= 0");
    const int n = set.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            adj[i][j] = adj[j][i] = std::abs(set.vectors[i].dot(set.vectors[j])) <= tol;

    ContextList list;
    list.dim = set.dim;
    std::vector<int> current;
    extend_clique(adj, n, set.dim, current, list.contexts);
    return list;
}

namespace {

// Trail-based propagation state for the exactly-one-per-context constraint.
struct SearchState {
    const std::vector<std::vector<int>>& contexts;
    const std::vector<std::vector<int>>& contexts_of;
    std::vector<int> color;          // -1 unset
    std::vector<int> ones;           // per context
    std::vector<int> zeros;          // per context
    std::vector<int> trail;
    std::uint64_t nodes = 0;

    bool assign(int v, int value) {
        if (color[v] != -1) return color[v] == value;
        color[v] = value;
        trail.push_back(v);
        // counters first, completely: rewind decrements per context, so a
        // trailed vector must have touched every one of its contexts
        for (int c : contexts_of[v]) {
            if (value == 1)
                ++ones[c];
            else
                ++zeros[c];
        }
        for (int c : contexts_of[v]) {
            const auto& ctx = contexts[c];
            const int size = static_cast<int>(ctx.size());
            if (value == 1) {
                if (ones[c] > 1) return false;
                for (int other : ctx)
                    if (other != v && !assign(other, 0)) return false;
            } else {
                if (zeros[c] == size) return false;
                if (zeros[c] == size - 1 && ones[c] == 0) {
                    for (int other : ctx)
                        if (color[other] == -1 && !assign(other, 1)) return false;
                }
            }
        }
        return true;
    }

    void rewind(std::size_t mark) {
        while (trail.size() > mark) {
            const int v = trail.back();
            trail.pop_back();
            const int value = color[v];
            color[v] = -1;
            for (int c : contexts_of[v]) {
                if (value == 1)
                    --ones[c];
                else
                    --zeros[c];
            }
        }
    }

    bool search() {
        int v = -1;
        for (std::size_t i = 0; i < color.size(); ++i)
            if (color[i] == -1) {
                v = static_cast<int>(i);
                break;
            }
        if (v == -1) return true;
        for (int value : {0, 1}) {  // 0 first: least coloring wins
            ++nodes;
            const std::size_t mark = trail.size();
            if (assign(v, value) && search()) return true;
            rewind(mark);
        }
        return false;
    }
};

}  // namespace

ColoringOutcome ks_search(const ContextList& contexts, int vector_count) {
    if (contexts.contexts.empty()) throw Error("ks_search: contexts must be non-empty");
    if (vector_count > 64)
        throw SearchSpaceTooLarge("ks_search: more than 64 vectors");
    for (const auto& ctx : contexts.contexts)
        for (int v : ctx)
            if (v < 0 || v >= vector_count) throw Error("ks_search: context index out of range");

    std::vector<std::vector<int>> contexts_of(vector_count);
    for (std::size_t c = 0; c < contexts.contexts.size(); ++c)
        for (int v : contexts.contexts[c]) contexts_of[v].push_back(static_cast<int>(c));

    SearchState state{contexts.contexts,
                      contexts_of,
                      std::vector<int>(vector_count, -1),
                      std::vector<int>(contexts.contexts.size(), 0),
                      std::vector<int>(contexts.contexts.size(), 0),
                      {},
                      0};

    ColoringOutcome outcome;
    if (state.search()) {
        outcome.status = ColoringStatus::colorable;
        outcome.coloring = state.color;
    } else {
        outcome.status = ColoringStatus::uncolorable;
    }
    outcome.nodes_explored = state.nodes;
    return outcome;
}

bool coloring_satisfies(const ContextList& contexts, const std::vector<int>& coloring) {
    for (int c : coloring)
        if (c != 0 && c != 1) return false;
    for (const auto& ctx : contexts.contexts) {
        int ones = 0;
        for (int v : ctx) {
            if (v < 0 || v >= static_cast<int>(coloring.size())) return false;
            ones += coloring[v];
        }
        if (ones != 1) return false;  // also rules out two 1s on any orthogonal pair
    }
    return true;
}

double gleason_frame_check(const DensityOperator& rho, int bases, std::uint64_t seed) {
    if (bases < 1) throw Error("gleason_frame_check: bases must be >= 1");
    const int d = rho.dim();
    Rng rng(seed);
    double worst = 0.0;
    for (int b = 0; b < bases; ++b) {
        const Matrix u = rng.unitary(d);
        double total = 0.0;
        for (int k = 0; k < d; ++k) total += u.col(k).dot(rho.matrix() * u.col(k)).real();
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return worst;
}

VectorSet cabello18() {
    // 18 rays in R^4 forming 9 complete bases, each ray in exactly two.
    static const int raw[18][4] = {
        {0, 0, 0, 1}, {0, 0, 1, 0},  {1, 1, 0, 0},   {1, -1, 0, 0}, {0, 1, 0, 0},
        {1, 0, 1, 0}, {1, 0, -1, 0}, {1, -1, 1, -1}, {1, -1, -1, 1}, {0, 0, 1, 1},
        {1, 1, 1, 1}, {0, 1, 0, -1}, {1, 0, 0, 1},   {1, 0, 0, -1}, {0, 1, -1, 0},
        {1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1},
    };
    std::vector<Vector> vectors;
    std::vector<std::string> labels;
    for (const auto& row : raw) {
        Vector v(4);
        double norm_sq = 0.0;
        for (int k = 0; k < 4; ++k) norm_sq += row[k] * row[k];
        const double scale = 1.0 / std::sqrt(norm_sq);
        std::string label;  // compact ray notation: (1,-1,0,0) -> "1-100"
        for (int k = 0; k < 4; ++k) {
            v(k) = row[k] * scale;
            label += std::to_string(row[k]);
        }
        vectors.push_back(std::move(v));
        labels.push_back(label);
    }
    return VectorSet::make(4, std::move(vectors), std::move(labels));
}

}  // namespace qnogo
