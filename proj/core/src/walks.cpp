#include "weylcount/walks.hpp"

#include "weylcount/determinant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylcount {

namespace {

bool strictly_decreasing_positive(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0) {
            return false;
        }
        if (i + 1 < v.size() && v[i] <= v[i + 1]) {
            return false;
        }
    }
    return true;
}

void require_same_dimension(const WeylPoint& a, std::size_t b_dim) {
    if (static_cast<std::size_t>(a.dimension()) != b_dim) {
        throw std::invalid_argument("walks: dimension mismatch");
    }
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            os << ",";
        }
        os << v[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

WeylPoint::WeylPoint(std::vector<int> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("WeylPoint: dimension must be at least 1");
    }
    if (!strictly_decreasing_positive(coords_)) {
        throw std::invalid_argument("WeylPoint: coordinates must be strictly decreasing and positive");
    }
}

WeylPoint WeylPoint::staircase(int d) {
    if (d < 1) {
        throw std::invalid_argument("WeylPoint::staircase: d must be at least 1");
    }
    std::vector<int> v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        v[static_cast<std::size_t>(i)] = d - i;
    }
    return WeylPoint(std::move(v));
}

int WeylPoint::sum() const {
    return std::accumulate(coords_.begin(), coords_.end(), 0);
}

std::string WeylPoint::str() const {
    return join(coords_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    return join(parts_);
}

WeylPoint weyl_from_partition(const Partition& p, int d) {
    if (p.height() > d) {
        throw std::invalid_argument("weyl_from_partition: partition taller than the chamber dimension");
    }
    std::vector<int> v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const int part = i < p.height() ? p.part(i) : 0;
        v[static_cast<std::size_t>(i)] = part + (d - i);
    }
    return WeylPoint(std::move(v));
}

Partition partition_from_weyl(const WeylPoint& w) {
    // strict decrease of the coordinates makes w - staircase weakly
    // decreasing and nonnegative, so this is total
    const int d = w.dimension();
    std::vector<int> parts;
    for (int i = 0; i < d; ++i) {
        const int part = w.coord(i) - (d - i);
        if (part == 0) {
            break;
        }
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

BigInt ballot_walk_count(const WeylPoint& from, const std::vector<int>& to) {
    require_same_dimension(from, to.size());
    if (!strictly_decreasing_positive(to)) {
        return 0;  // wall target
    }
    const int d = from.dimension();
    for (int i = 0; i < d; ++i) {
        if (to[static_cast<std::size_t>(i)] < from.coord(i)) {
            return 0;  // positive steps only move coordinates up
        }
    }
    const int steps = std::accumulate(to.begin(), to.end(), 0) - from.sum();

    // layer-by-layer DP over the box from <= x <= to
    std::map<std::vector<int>, BigInt> layer;
    layer[from.coords()] = 1;
    for (int s = 0; s < steps; ++s) {
        std::map<std::vector<int>, BigInt> next;
        for (const auto& [pt, cnt] : layer) {
            for (int i = 0; i < d; ++i) {
                std::vector<int> q = pt;
                ++q[static_cast<std::size_t>(i)];
                if (q[static_cast<std::size_t>(i)] > to[static_cast<std::size_t>(i)]) {
                    continue;
                }
                if (i > 0 && q[static_cast<std::size_t>(i)] >= q[static_cast<std::size_t>(i) - 1]) {
                    continue;  // would touch the wall x_{i-1} = x_i
                }
                next[std::move(q)] += cnt;
            }
        }
        layer = std::move(next);
    }
    auto it = layer.find(to);
    return it == layer.end() ? BigInt(0) : it->second;
}

BigInt ballot_walk_count(const WeylPoint& from, const WeylPoint& to) {
    return ballot_walk_count(from, to.coords());
}

BigInt ballot_walk_count_det(const WeylPoint& from, const std::vector<int>& to) {
    require_same_dimension(from, to.size());
    const int d = from.dimension();
    const int steps = std::accumulate(to.begin(), to.end(), 0) - from.sum();
    if (steps < 0) {
        return 0;
    }
    int max_k = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            max_k = std::max(max_k, to[static_cast<std::size_t>(i)] - from.coord(j));
        }
    }
    FactorialTable fact(std::max(max_k, steps));
    Matrix<Rational> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const int k = to[static_cast<std::size_t>(i)] - from.coord(j);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                k < 0 ? Rational(0) : make_rational(1, fact(k));
        }
    }
    const Rational det = d <= 5 ? det_leibniz(m, Rational(0))
                                : det_berkowitz(m, Rational(0), Rational(1));
    const Rational count = Rational(fact(steps)) * det;
    BigInt result = to_integer(count);
    if (result < 0) {
        throw std::logic_error("ballot_walk_count_det: negative determinant count");
    }
    return result;
}

BigInt ballot_walk_count_det(const WeylPoint& from, const WeylPoint& to) {
    return ballot_walk_count_det(from, to.coords());
}

std::map<std::vector<int>, BigInt> ballot_walk_distribution(const WeylPoint& from, int steps) {
    if (steps < 0) {
        throw std::invalid_argument("ballot_walk_distribution: negative step count");
    }
    const int d = from.dimension();
    std::map<std::vector<int>, BigInt> layer;
    layer[from.coords()] = 1;
    for (int s = 0; s < steps; ++s) {
        std::map<std::vector<int>, BigInt> next;
        for (const auto& [pt, cnt] : layer) {
            for (int i = 0; i < d; ++i) {
                std::vector<int> q = pt;
                ++q[static_cast<std::size_t>(i)];
                if (i > 0 && q[static_cast<std::size_t>(i)] >= q[static_cast<std::size_t>(i) - 1]) {
                    continue;
                }
                next[std::move(q)] += cnt;
            }
        }
        layer = std::move(next);
    }
    return layer;
}

BigInt hook_length_count(const Partition& shape) {
    const int d = shape.height();
    if (d == 0) {
        return 1;
    }
    const int cells = shape.size();
    FactorialTable fact(cells + d);
    Matrix<Rational> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            const int k = shape.part(i - 1) - i + j;
            m[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] =
                k < 0 ? Rational(0) : make_rational(1, fact(k));
        }
    }
    const Rational det = d <= 5 ? det_leibniz(m, Rational(0))
                                : det_berkowitz(m, Rational(0), Rational(1));
    BigInt result = to_integer(Rational(fact(cells)) * det);
    if (result < 0) {
        throw std::logic_error("hook_length_count: negative determinant count");
    }
    return result;
}

std::vector<std::map<std::vector<int>, BigInt>> oscillating_walk_layers(const WeylPoint& from,
                                                                        int n) {
    if (n < 0) {
        throw std::invalid_argument("oscillating_walk_layers: negative length");
    }
    const int d = from.dimension();
    std::vector<std::map<std::vector<int>, BigInt>> layers;
    layers.reserve(static_cast<std::size_t>(n) + 1);
    layers.push_back({{from.coords(), 1}});
    for (int s = 0; s < n; ++s) {
        std::map<std::vector<int>, BigInt> next;
        for (const auto& [pt, cnt] : layers.back()) {
            for (int i = 0; i < d; ++i) {
                for (int delta : {+1, -1}) {
                    std::vector<int> q = pt;
                    q[static_cast<std::size_t>(i)] += delta;
                    if (!strictly_decreasing_positive(q)) {
                        continue;
                    }
                    next[std::move(q)] += cnt;
                }
            }
        }
        layers.push_back(std::move(next));
    }
    return layers;
}

BigInt oscillating_walk_count(const WeylPoint& from, const std::vector<int>& to, int n) {
    require_same_dimension(from, to.size());
    if (n < 0) {
        throw std::invalid_argument("oscillating_walk_count: negative length");
    }
    if (!strictly_decreasing_positive(to)) {
        return 0;  // wall target
    }
    // parity: each step changes |pt| by one
    const int diff = std::accumulate(to.begin(), to.end(), 0) - from.sum();
    if ((diff % 2 + 2) % 2 != n % 2 || std::abs(diff) > n) {
        return 0;
    }
    const auto layers = oscillating_walk_layers(from, n);
    auto it = layers.back().find(to);
    return it == layers.back().end() ? BigInt(0) : it->second;
}

BigInt oscillating_walk_count(const WeylPoint& from, const WeylPoint& to, int n) {
    return oscillating_walk_count(from, to.coords(), n);
}

BigInt total_oscillating_walk_count(const WeylPoint& from, int n) {
    const auto layers = oscillating_walk_layers(from, n);
    BigInt total = 0;
    for (const auto& [pt, cnt] : layers.back()) {
        total += cnt;
    }
    return total;
}

}  // namespace weylcount
