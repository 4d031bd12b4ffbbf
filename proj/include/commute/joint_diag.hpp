#pragma once

#include <cstdint>
#include <vector>

#include "commute/types.hpp"

namespace commute {

inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

/// Joint eigenbasis plus the raw n x d eigenvalue table, rows sorted
/// lexicographically. No grouping decisions are made at this level.
struct JointEigenTable {
    Matrix u;                                 // n x n unitary
    std::vector<std::vector<double>> eigs;    // row i = joint eigenvalue x_i in R^d
};

/// Pair of joint eigenvalues whose distance falls in the tolerance-sensitive
/// band (group/10, group*10).
struct AmbiguousPair {
    int i, j;
    double distance;
};

enum class AmbiguityPolicy { Throw, Record };

struct JointDiagonalization {
    Matrix u;                                  // n x n unitary
    std::vector<std::vector<double>> eigs;     // row i = x_i
    std::vector<std::pair<int, int>> groups;   // consecutive [begin, end) ranges
    std::vector<int> group_index;              // index -> group id
    double tol_used = 0.0;
    std::vector<AmbiguousPair> ambiguities;    // only populated under Record

    int group_of(int i) const { return group_index[static_cast<std::size_t>(i)]; }
    bool same_group(int i, int j) const { return group_of(i) == group_of(j); }
};

/// Compute a joint eigenbasis of a commuting tuple by diagonalizing random
/// linear combinations and recursively splitting unresolved subspaces.
/// Deterministic given the seed.
JointEigenTable joint_eigentable(const CommutingTuple& s, std::uint64_t seed = kDefaultSeed);

/// Full joint diagonalization: eigenbasis, eigenvalue table, and grouping of
/// equal joint eigenvalues into consecutive blocks. Pairs of joint
/// eigenvalues at a tolerance-sensitive distance raise GroupingAmbiguous
/// (or are recorded, under AmbiguityPolicy::Record).
JointDiagonalization joint_diagonalize(const CommutingTuple& s, const TolerancePolicy& tol = {},
                                       std::uint64_t seed = kDefaultSeed,
                                       AmbiguityPolicy policy = AmbiguityPolicy::Throw);

/// The n joint eigenvalues with multiplicity, sorted lexicographically.
std::vector<std::vector<double>> spectrum(const CommutingTuple& s, const TolerancePolicy& tol = {},
                                          std::uint64_t seed = kDefaultSeed,
                                          AmbiguityPolicy policy = AmbiguityPolicy::Throw);

}  // namespace commute
