#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qnogo/ks_gleason.hpp"
#include "qnogo/rng.hpp"
#include "test_support.hpp"

using namespace qnogo;
using namespace qnogo::test;

namespace {

Vector real_vector(std::initializer_list<double> entries) {
    Vector v(static_cast<int>(entries.size()));
    int k = 0;
    for (double e : entries) v(k++) = e;
    return v;
}

VectorSet canonical3() {
    return VectorSet::make(3,
                           {real_vector({1, 0, 0}), real_vector({0, 1, 0}),
                            real_vector({0, 0, 1})},
                           {});
}

// Parity oracle: with an odd number of contexts and every vector in exactly
// two of them, sum over contexts of (ones per context) is even, but
// exactly-one-per-context forces it odd. Independent of the search.
bool parity_oracle_uncolorable(const ContextList& contexts, int vector_count) {
    if (contexts.size() % 2 == 0) return false;
    std::vector<int> occurrences(vector_count, 0);
    for (const auto& ctx : contexts.contexts)
        for (int v : ctx) ++occurrences[v];
    for (int c : occurrences)
        if (c != 0 && c % 2 != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("VectorSet::make validates norms and phase-distinctness") {
    CHECK_NOTHROW(canonical3());
    CHECK_THROWS_AS(VectorSet::make(3, {real_vector({1, 1, 0})}, {}), Error);
    // same ray with a global phase is a duplicate
    Vector phased = real_vector({1, 0, 0});
    phased *= Complex(0.0, 1.0);
    CHECK_THROWS_AS(VectorSet::make(3, {real_vector({1, 0, 0}), phased}, {}), Error);
    CHECK_THROWS_AS(VectorSet::make(2, {real_vector({1, 0})}, {}), Error);
}

TEST_CASE("build_contexts: canonical basis gives one context") {
    const auto contexts = build_contexts(canonical3());
    REQUIRE(contexts.size() == 1);
    CHECK(contexts.contexts[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("build_contexts: an extra oblique vector adds no context") {
    auto set = VectorSet::make(
        3,
        {real_vector({1, 0, 0}), real_vector({0, 1, 0}), real_vector({0, 0, 1}),
         real_vector({M_SQRT1_2, M_SQRT1_2, 0})},
        {});
    const auto contexts = build_contexts(set);
    REQUIRE(contexts.size() == 1);
    CHECK(contexts.contexts[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("build_contexts: invariant under sign flips of the input vectors") {
    const VectorSet set = cabello18();
    const auto baseline = build_contexts(set);

    VectorSet flipped = set;
    for (std::size_t i = 0; i < flipped.vectors.size(); i += 2) flipped.vectors[i] *= -1.0;
    const auto contexts = build_contexts(flipped);
    CHECK(contexts.contexts == baseline.contexts);
}

TEST_CASE("cabello18: 18 unit vectors, 9 contexts, each vector in exactly 2") {
    const VectorSet set = cabello18();
    CHECK(set.dim == 4);
    REQUIRE(set.size() == 18);
    for (const auto& v : set.vectors) CHECK(std::abs(v.norm() - 1.0) < 1e-12);

    const auto contexts = build_contexts(set);
    REQUIRE(contexts.size() == 9);
    std::vector<int> occurrences(18, 0);
    for (const auto& ctx : contexts.contexts) {
        REQUIRE(ctx.size() == 4);
        for (int v : ctx) ++occurrences[v];
    }
    for (int c : occurrences) CHECK(c == 2);
}

TEST_CASE("ks_search: single context is colorable, least coloring returned") {
    const auto contexts = build_contexts(canonical3());
    const auto outcome = ks_search(contexts, 3);
    REQUIRE(outcome.status == ColoringStatus::colorable);
    REQUIRE(outcome.coloring.has_value());
    CHECK(*outcome.coloring == std::vector<int>{0, 0, 1});
    CHECK(coloring_satisfies(contexts, *outcome.coloring));
}

TEST_CASE("ks_search: disjoint contexts color independently") {
    ContextList contexts;
    contexts.dim = 3;
    contexts.contexts = {{0, 1, 2}, {3, 4, 5}};
    const auto outcome = ks_search(contexts, 6);
    REQUIRE(outcome.status == ColoringStatus::colorable);
    CHECK(coloring_satisfies(contexts, *outcome.coloring));
    CHECK(*outcome.coloring == std::vector<int>{0, 0, 1, 0, 0, 1});
}

TEST_CASE("ks_search: cabello18 is uncolorable and matches the parity oracle") {
    const VectorSet set = cabello18();
    const auto contexts = build_contexts(set);
    CHECK(parity_oracle_uncolorable(contexts, set.size()));
    const auto outcome = ks_search(contexts, set.size());
    CHECK(outcome.status == ColoringStatus::uncolorable);
    CHECK_FALSE(outcome.coloring.has_value());
    CHECK(outcome.nodes_explored > 0);
}

TEST_CASE("ks_search: status invariant under vector and context permutations") {
    const VectorSet set = cabello18();
    const auto baseline = build_contexts(set);
    std::mt19937 shuffler(99);

    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> relabel(set.size());
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin(), relabel.end(), shuffler);

        ContextList permuted;
        permuted.dim = baseline.dim;
        for (const auto& ctx : baseline.contexts) {
            std::vector<int> mapped;
            for (int v : ctx) mapped.push_back(relabel[v]);
            std::sort(mapped.begin(), mapped.end());
            permuted.contexts.push_back(std::move(mapped));
        }
        std::shuffle(permuted.contexts.begin(), permuted.contexts.end(), shuffler);

        const auto outcome = ks_search(permuted, set.size());
        CHECK(outcome.status == ColoringStatus::uncolorable);
    }

    // a colorable instance stays colorable under the same shuffling
    ContextList colorable;
    colorable.dim = 3;
    colorable.contexts = {{0, 1, 2}, {2, 3, 4}};
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> relabel(5);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin(), relabel.end(), shuffler);
        ContextList permuted;
        permuted.dim = 3;
        for (const auto& ctx : colorable.contexts) {
            std::vector<int> mapped;
            for (int v : ctx) mapped.push_back(relabel[v]);
            std::sort(mapped.begin(), mapped.end());
            permuted.contexts.push_back(std::move(mapped));
        }
        const auto outcome = ks_search(permuted, 5);
        REQUIRE(outcome.status == ColoringStatus::colorable);
        CHECK(coloring_satisfies(permuted, *outcome.coloring));
    }
}

TEST_CASE("ks_search: propagation chains through overlapping contexts") {
    // cyclic overlap: forcing one zero cascades into forced ones elsewhere
    ContextList contexts;
    contexts.dim = 3;
    contexts.contexts = {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}};
    const auto outcome = ks_search(contexts, 6);
    REQUIRE(outcome.status == ColoringStatus::colorable);
    CHECK(*outcome.coloring == std::vector<int>{0, 0, 1, 0, 0, 1});
    CHECK(coloring_satisfies(contexts, *outcome.coloring));
}

TEST_CASE("ks_search: odd pairwise triangle is uncolorable without parity structure") {
    // one 1 per edge of a triangle needs 2(x0+x1+x2) = 3: impossible
    ContextList contexts;
    contexts.dim = 2;
    contexts.contexts = {{0, 1}, {0, 2}, {1, 2}};
    const auto outcome = ks_search(contexts, 3);
    CHECK(outcome.status == ColoringStatus::uncolorable);
}

TEST_CASE("ks_search: guards") {
    CHECK_THROWS_AS(ks_search(ContextList{}, 4), Error);
    ContextList contexts;
    contexts.dim = 3;
    contexts.contexts = {{0, 1, 2}};
    CHECK_THROWS_AS(ks_search(contexts, 65), SearchSpaceTooLarge);
}

TEST_CASE("gleason_frame_check: maximally mixed state is exact") {
    for (int d : {2, 3, 5}) {
        const double deviation = gleason_frame_check(DensityOperator::maximally_mixed(d), 50, 1);
        CHECK(deviation < 1e-12);
    }
}

TEST_CASE("gleason_frame_check: pure and mixed states stay at noise level") {
    Rng rng(21);
    for (int d : {2, 3, 4, 8}) {
        const double pure_dev =
            gleason_frame_check(DensityOperator::pure(random_state(d, rng)), 1000, 31);
        CHECK(pure_dev <= 1e-9);

        // random mixed state: normalized Gram matrix of a Gaussian square
        Matrix g(d, d);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) g(j, k) = rng.complex_gaussian();
        Matrix gram = g * g.adjoint();
        gram /= gram.trace().real();
        gram = 0.5 * (gram + Matrix(gram.adjoint()));
        const double mixed_dev = gleason_frame_check(DensityOperator(gram), 1000, 37);
        CHECK(mixed_dev <= 1e-9);
    }
}

TEST_CASE("gleason_frame_check: deterministic for a fixed seed") {
    const DensityOperator rho = DensityOperator::pure(random_state(3, 77));
    CHECK(gleason_frame_check(rho, 200, 5) == gleason_frame_check(rho, 200, 5));
}

TEST_CASE("invalid densities are rejected before any frame check") {
    Matrix skew(3, 3);
    skew.setZero();
    skew(0, 0) = 1.01;
    skew(1, 1) = 0.0;
    skew(2, 2) = -0.01;
    CHECK_THROWS_AS(DensityOperator{skew}, InvalidDensity);
}
