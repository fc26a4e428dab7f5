#pragma once

#include "weylcount/numeric.hpp"
#include "weylcount/walks.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylcount {

/// Thrown when an enumeration request exceeds its configured cap. Callers
/// get an explicit refusal, never a silently truncated count.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration bounds. Defaults keep every exhaustive scan near or below
/// ~10^7 objects; raise them deliberately for longer runs.
struct EnumerationCaps {
    int matchings = 8;       // matchings on [2n]: (2n-1)!! objects
    int tableau_length = 12; // oscillating tableaux of length n
    int syt_cells = 10;      // standard Young tableaux on |shape| cells
    int permutations = 9;    // permutations of [n]: n! objects
};

/// Mutable process-wide caps (adjust at startup, e.g. from the CLI).
EnumerationCaps& enumeration_caps();

/// A perfect matching on {1..2n}, stored canonically: each arc as (i, j)
/// with i < j, arcs sorted by opener.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<std::pair<int, int>> arcs);

    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int points() const { return 2 * arc_count(); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    std::string str() const;

    bool operator==(const Matching&) const = default;

private:
    std::vector<std::pair<int, int>> arcs_;
};

/// Visits all (2n-1)!! matchings on [2n] in a fixed order: the smallest free
/// point is paired with each larger free point, ascending.
void for_each_matching(int n, const std::function<void(const Matching&)>& fn);
std::vector<Matching> enumerate_matchings(int n);

/// Largest k such that k arcs pairwise cross
/// (openers i_1 < ... < i_k < closers j_1 < ... < j_k); 0 for no arcs.
int crossing_number(const Matching& m);

/// Largest k such that k arcs pairwise nest (i_1 < ... < i_k < j_k < ... < j_1).
int nesting_number(const Matching& m);

/// Mirror image in the vertical axis of the diagram: (i, j) -> (2n+1-j, 2n+1-i).
Matching reflect_matching(const Matching& m);

/// True when the matching equals its own reflection.
bool is_bilaterally_symmetric(const Matching& m);

struct MatchingFilter {
    std::optional<int> max_crossing;  // bound on the chosen statistic
    bool bilateral = false;
    bool use_nesting = false;  // bound the nesting number instead of the crossing number
};

/// Number of matchings on [2n] passing the filter.
BigInt count_matchings(int n, const MatchingFilter& filter = {});

/// A sequence of partitions in which consecutive shapes differ by exactly
/// one square added or removed. The length is the number of steps.
class OscillatingTableau {
public:
    explicit OscillatingTableau(std::vector<Partition> shapes);

    int length() const { return static_cast<int>(shapes_.size()) - 1; }
    const std::vector<Partition>& shapes() const { return shapes_; }
    const Partition& initial_shape() const { return shapes_.front(); }
    const Partition& final_shape() const { return shapes_.back(); }
    int height() const;
    std::string str() const;

    bool operator==(const OscillatingTableau&) const = default;

private:
    std::vector<Partition> shapes_;
};

OscillatingTableau tableau_reverse(const OscillatingTableau& o);

/// O == reverse(O); defined only for tableaux with empty shape at both ends.
bool is_palindromic(const OscillatingTableau& o);

/// Splits an empty-ended tableau of even length 2n into the halves
/// (shapes 0..n) and (shapes 2n..n, reversed); gamma_combine is the inverse.
std::pair<OscillatingTableau, OscillatingTableau> gamma_split(const OscillatingTableau& o);
OscillatingTableau gamma_combine(const OscillatingTableau& p, const OscillatingTableau& q);

struct TableauFilter {
    std::optional<int> max_height;            // bound on every intermediate shape
    std::optional<Partition> final_shape;     // fixed final shape
};

/// Visits all oscillating tableaux that start at the empty shape, have the
/// given length, and pass the filter.
void for_each_oscillating_tableau(int length, const TableauFilter& filter,
                                  const std::function<void(const OscillatingTableau&)>& fn);
std::vector<OscillatingTableau> enumerate_oscillating_tableaux(int length,
                                                               const TableauFilter& filter = {});
BigInt count_oscillating_tableaux(int length, const TableauFilter& filter = {});

/// Empty-ended tableaux of the given (even) length equal to their own
/// reversal, optionally height-bounded.
BigInt count_palindromic_tableaux(int length, std::optional<int> max_height = {});

/// A standard Young tableau as rows of entries.
using StandardTableau = std::vector<std::vector<int>>;

std::vector<StandardTableau> enumerate_syt(const Partition& shape);
BigInt count_syt(const Partition& shape);

/// A bijection on {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Length of the longest increasing subsequence (patience-sorting scan).
int longest_increasing(const Permutation& w);

/// #{w in S_n : longest increasing subsequence <= d}, by exhaustive scan.
BigInt count_lis_bounded(int n, int d);

/// #{w in S_n : w = w^{-1}}, by exhaustive scan.
BigInt count_involutions(int n);

/// Number of oscillating tableaux from the empty shape of length n ending at
/// `shape`, via the closed form C(n, 2r) (2r-1)!! f^shape with r = (n-|shape|)/2;
/// 0 when n - |shape| is negative or odd.
BigInt tilde_f(const Partition& shape, int n);

/// All partitions of n (optionally of height <= max_height), in a fixed order.
std::vector<Partition> partitions_of(int n, std::optional<int> max_height = {});

}  // namespace weylcount
