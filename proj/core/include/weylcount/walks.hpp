#pragma once

#include "weylcount/numeric.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace weylcount {

/// A lattice point strictly inside the Weyl chamber: coordinates are
/// strictly decreasing and positive. Construction validates.
class WeylPoint {
public:
    explicit WeylPoint(std::vector<int> coords);

    /// The staircase (d, d-1, ..., 1), image of the empty partition.
    static WeylPoint staircase(int d);

    int dimension() const { return static_cast<int>(coords_.size()); }
    int coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& coords() const { return coords_; }
    int sum() const;
    std::string str() const;

    bool operator==(const WeylPoint&) const = default;

private:
    std::vector<int> coords_;
};

/// An integer partition: weakly decreasing positive parts, possibly none.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int height() const { return static_cast<int>(parts_.size()); }
    int size() const;  // number of cells
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    std::string str() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// lambda + (d, d-1, ..., 1); the partition's height must not exceed d.
WeylPoint weyl_from_partition(const Partition& p, int d);

/// Inverse shift: subtracts the staircase and drops zero parts. Throws when
/// the result would not be a partition.
Partition partition_from_weyl(const WeylPoint& w);

/// Walks with positive unit steps from `from` to `to` staying strictly
/// inside the chamber. The target may lie on a chamber wall (weakly
/// decreasing or zero coordinates), in which case the count is 0.
BigInt ballot_walk_count(const WeylPoint& from, const std::vector<int>& to);
BigInt ballot_walk_count(const WeylPoint& from, const WeylPoint& to);

/// Same count through the reflection determinant
/// (|to|-|from|)! * det(1 / (to_i - from_j)!), with 1/k! = 0 for k < 0.
/// ballot_walk_count and ballot_walk_count_det form a built-in cross-check.
BigInt ballot_walk_count_det(const WeylPoint& from, const std::vector<int>& to);
BigInt ballot_walk_count_det(const WeylPoint& from, const WeylPoint& to);

/// Endpoint distribution of positive-step walks after `steps` steps.
std::map<std::vector<int>, BigInt> ballot_walk_distribution(const WeylPoint& from, int steps);

/// Number of standard Young tableaux of the given shape, by the hook-length
/// determinant |shape|! * det(1 / (shape_i - i + j)!).
BigInt hook_length_count(const Partition& shape);

/// Walks of length n with steps +-e_i staying strictly inside the chamber.
/// Wall targets count 0.
BigInt oscillating_walk_count(const WeylPoint& from, const std::vector<int>& to, int n);
BigInt oscillating_walk_count(const WeylPoint& from, const WeylPoint& to, int n);

/// Layers 0..n of the oscillating walk DP: layer k maps each endpoint to the
/// number of length-k walks from `from` that reach it.
std::vector<std::map<std::vector<int>, BigInt>> oscillating_walk_layers(const WeylPoint& from,
                                                                        int n);

/// Sum of oscillating_walk_count(from, ., n) over every reachable endpoint.
BigInt total_oscillating_walk_count(const WeylPoint& from, int n);

}  // namespace weylcount
