#include "weylcount/objects.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace weylcount {

EnumerationCaps& enumeration_caps() {
    static EnumerationCaps caps;
    return caps;
}

namespace {

[[noreturn]] void refuse(const std::string& what, int requested, int cap) {
    throw CapExceededError(what + ": requested size " + std::to_string(requested) +
                           " exceeds the enumeration cap " + std::to_string(cap) +
                           " (raise the cap explicitly for long runs)");
}

}  // namespace

Matching::Matching(std::vector<std::pair<int, int>> arcs) : arcs_(std::move(arcs)) {
    for (auto& [a, b] : arcs_) {
        if (a > b) {
            std::swap(a, b);
        }
    }
    std::sort(arcs_.begin(), arcs_.end());
    const int n2 = points();
    std::vector<bool> seen(static_cast<std::size_t>(n2) + 1, false);
    for (const auto& [a, b] : arcs_) {
        if (a < 1 || b > n2 || a == b || seen[static_cast<std::size_t>(a)] ||
            seen[static_cast<std::size_t>(b)]) {
            throw std::invalid_argument("Matching: arcs must partition {1..2n} into pairs");
        }
        seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
    }
}

std::string Matching::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        if (i > 0) {
            os << ",";
        }
        os << "(" << arcs_[i].first << "," << arcs_[i].second << ")";
    }
    os << "}";
    return os.str();
}

namespace {

void matchings_rec(int n2, std::vector<bool>& used, std::vector<std::pair<int, int>>& acc,
                   const std::function<void(const Matching&)>& fn) {
    int first = 0;
    for (int i = 1; i <= n2; ++i) {
        if (!used[static_cast<std::size_t>(i)]) {
            first = i;
            break;
        }
    }
    if (first == 0) {
        fn(Matching(acc));
        return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int j = first + 1; j <= n2; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
            continue;
        }
        used[static_cast<std::size_t>(j)] = true;
        acc.emplace_back(first, j);
        matchings_rec(n2, used, acc, fn);
        acc.pop_back();
        used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
}

}  // namespace

void for_each_matching(int n, const std::function<void(const Matching&)>& fn) {
    if (n < 0) {
        throw std::invalid_argument("for_each_matching: negative n");
    }
    if (n > enumeration_caps().matchings) {
        refuse("for_each_matching", n, enumeration_caps().matchings);
    }
    std::vector<bool> used(static_cast<std::size_t>(2 * n) + 1, false);
    std::vector<std::pair<int, int>> acc;
    acc.reserve(static_cast<std::size_t>(n));
    matchings_rec(2 * n, used, acc, fn);
}

std::vector<Matching> enumerate_matchings(int n) {
    std::vector<Matching> out;
    for_each_matching(n, [&](const Matching& m) { out.push_back(m); });
    return out;
}

namespace {

/// Size of the largest subset of arcs that is pairwise related by `related`.
/// Arc counts are small (enumeration caps), so a masked clique scan with a
/// popcount skip is plenty.
int max_pairwise_subset(const Matching& m,
                        const std::function<bool(std::pair<int, int>, std::pair<int, int>)>& related) {
    const auto& arcs = m.arcs();
    const int k = m.arc_count();
    if (k == 0) {
        return 0;
    }
    if (k >= 31) {
        throw std::invalid_argument("matching statistic: too many arcs for the subset scan");
    }
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (related(arcs[static_cast<std::size_t>(i)], arcs[static_cast<std::size_t>(j)])) {
                adj[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
                adj[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
            }
        }
    }
    int best = 1;  // a single arc always qualifies
    const std::uint32_t all = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        if (std::popcount(mask) <= best) {
            continue;
        }
        bool ok = true;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            const int a = std::countr_zero(rest);
            const std::uint32_t others = mask & ~(std::uint32_t{1} << a);
            if ((adj[static_cast<std::size_t>(a)] & others) != others) {
                ok = false;
                break;
            }
        }
        if (ok) {
            best = std::popcount(mask);
        }
    }
    return best;
}

}  // namespace

int crossing_number(const Matching& m) {
    return max_pairwise_subset(m, [](std::pair<int, int> a, std::pair<int, int> b) {
        if (a.first > b.first) {
            std::swap(a, b);
        }
        return a.first < b.first && b.first < a.second && a.second < b.second;
    });
}

int nesting_number(const Matching& m) {
    return max_pairwise_subset(m, [](std::pair<int, int> a, std::pair<int, int> b) {
        if (a.first > b.first) {
            std::swap(a, b);
        }
        return a.first < b.first && b.second < a.second;
    });
}

Matching reflect_matching(const Matching& m) {
    const int n2 = m.points();
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(m.arcs().size());
    for (const auto& [a, b] : m.arcs()) {
        arcs.emplace_back(n2 + 1 - b, n2 + 1 - a);
    }
    return Matching(std::move(arcs));
}

bool is_bilaterally_symmetric(const Matching& m) {
    return m == reflect_matching(m);
}

BigInt count_matchings(int n, const MatchingFilter& filter) {
    BigInt count = 0;
    for_each_matching(n, [&](const Matching& m) {
        if (filter.bilateral && !is_bilaterally_symmetric(m)) {
            return;
        }
        if (filter.max_crossing) {
            const int stat = filter.use_nesting ? nesting_number(m) : crossing_number(m);
            if (stat > *filter.max_crossing) {
                return;
            }
        }
        ++count;
    });
    return count;
}

OscillatingTableau::OscillatingTableau(std::vector<Partition> shapes)
    : shapes_(std::move(shapes)) {
    if (shapes_.empty()) {
        throw std::invalid_argument("OscillatingTableau: at least one shape required");
    }
    for (std::size_t i = 0; i + 1 < shapes_.size(); ++i) {
        const auto& a = shapes_[i].parts();
        const auto& b = shapes_[i + 1].parts();
        const std::size_t h = std::max(a.size(), b.size());
        int diffs = 0;
        for (std::size_t r = 0; r < h; ++r) {
            const int pa = r < a.size() ? a[r] : 0;
            const int pb = r < b.size() ? b[r] : 0;
            diffs += std::abs(pa - pb);
        }
        if (diffs != 1) {
            throw std::invalid_argument(
                "OscillatingTableau: consecutive shapes must differ by exactly one square");
        }
    }
}

int OscillatingTableau::height() const {
    int h = 0;
    for (const auto& s : shapes_) {
        h = std::max(h, s.height());
    }
    return h;
}

std::string OscillatingTableau::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < shapes_.size(); ++i) {
        if (i > 0) {
            os << " ";
        }
        os << shapes_[i].str();
    }
    return os.str();
}

OscillatingTableau tableau_reverse(const OscillatingTableau& o) {
    std::vector<Partition> shapes(o.shapes().rbegin(), o.shapes().rend());
    return OscillatingTableau(std::move(shapes));
}

bool is_palindromic(const OscillatingTableau& o) {
    if (o.initial_shape().height() != 0 || o.final_shape().height() != 0) {
        throw std::invalid_argument("is_palindromic: tableau must be empty-ended");
    }
    return o == tableau_reverse(o);
}

std::pair<OscillatingTableau, OscillatingTableau> gamma_split(const OscillatingTableau& o) {
    if (o.length() % 2 != 0) {
        throw std::invalid_argument("gamma_split: length must be even");
    }
    if (o.initial_shape().height() != 0 || o.final_shape().height() != 0) {
        throw std::invalid_argument("gamma_split: tableau must be empty-ended");
    }
    const int n = o.length() / 2;
    std::vector<Partition> first(o.shapes().begin(), o.shapes().begin() + n + 1);
    std::vector<Partition> second(o.shapes().rbegin(),
                                  o.shapes().rbegin() + (o.length() - n) + 1);
    return {OscillatingTableau(std::move(first)), OscillatingTableau(std::move(second))};
}

OscillatingTableau gamma_combine(const OscillatingTableau& p, const OscillatingTableau& q) {
    if (p.final_shape() != q.final_shape()) {
        throw std::invalid_argument("gamma_combine: final shapes differ");
    }
    std::vector<Partition> shapes(p.shapes());
    shapes.insert(shapes.end(), q.shapes().rbegin() + 1, q.shapes().rend());
    return OscillatingTableau(std::move(shapes));
}

namespace {

struct TableauDfs {
    int length;
    const TableauFilter& filter;
    const std::function<void(const OscillatingTableau&)>& fn;
    std::vector<Partition> path;

    bool viable(const std::vector<int>& cur, int step) const {
        if (!filter.final_shape) {
            return true;
        }
        // size can change by one per remaining step, and parity must work out
        const int cur_size = std::accumulate(cur.begin(), cur.end(), 0);
        const int remaining = length - step;
        const int gap = std::abs(cur_size - filter.final_shape->size());
        return gap <= remaining && (remaining - gap) % 2 == 0;
    }

    void walk(std::vector<int>& cur, int step) {
        if (step == length) {
            if (!filter.final_shape || Partition(cur) == *filter.final_shape) {
                path.emplace_back(cur);
                fn(OscillatingTableau(path));
                path.pop_back();
            }
            return;
        }
        path.emplace_back(cur);
        const int h = static_cast<int>(cur.size());
        // add one square to row i (or open a new row)
        for (int i = 0; i <= h; ++i) {
            if (i == h) {
                if (filter.max_height && h + 1 > *filter.max_height) {
                    continue;
                }
                cur.push_back(1);
                if (viable(cur, step + 1)) {
                    walk(cur, step + 1);
                }
                cur.pop_back();
            } else {
                if (i > 0 && cur[static_cast<std::size_t>(i) - 1] <= cur[static_cast<std::size_t>(i)]) {
                    continue;  // would break weak decrease
                }
                ++cur[static_cast<std::size_t>(i)];
                if (viable(cur, step + 1)) {
                    walk(cur, step + 1);
                }
                --cur[static_cast<std::size_t>(i)];
            }
        }
        // remove one square from row i
        for (int i = 0; i < h; ++i) {
            const int below = i + 1 < h ? cur[static_cast<std::size_t>(i) + 1] : 0;
            if (cur[static_cast<std::size_t>(i)] - 1 < below) {
                continue;
            }
            --cur[static_cast<std::size_t>(i)];
            const bool drop = cur[static_cast<std::size_t>(i)] == 0;
            if (drop) {
                cur.pop_back();
            }
            if (viable(cur, step + 1)) {
                walk(cur, step + 1);
            }
            if (drop) {
                cur.push_back(0);
            }
            ++cur[static_cast<std::size_t>(i)];
        }
        path.pop_back();
    }
};

}  // namespace

void for_each_oscillating_tableau(int length, const TableauFilter& filter,
                                  const std::function<void(const OscillatingTableau&)>& fn) {
    if (length < 0) {
        throw std::invalid_argument("for_each_oscillating_tableau: negative length");
    }
    if (length > enumeration_caps().tableau_length) {
        refuse("for_each_oscillating_tableau", length, enumeration_caps().tableau_length);
    }
    TableauDfs dfs{length, filter, fn, {}};
    std::vector<int> cur;
    if (dfs.viable(cur, 0)) {
        dfs.walk(cur, 0);
    }
}

std::vector<OscillatingTableau> enumerate_oscillating_tableaux(int length,
                                                               const TableauFilter& filter) {
    std::vector<OscillatingTableau> out;
    for_each_oscillating_tableau(length, filter,
                                 [&](const OscillatingTableau& o) { out.push_back(o); });
    return out;
}

BigInt count_oscillating_tableaux(int length, const TableauFilter& filter) {
    BigInt count = 0;
    for_each_oscillating_tableau(length, filter, [&](const OscillatingTableau&) { ++count; });
    return count;
}

BigInt count_palindromic_tableaux(int length, std::optional<int> max_height) {
    if (length % 2 != 0) {
        return 0;
    }
    TableauFilter filter;
    filter.max_height = max_height;
    filter.final_shape = Partition();
    BigInt count = 0;
    for_each_oscillating_tableau(length, filter, [&](const OscillatingTableau& o) {
        if (is_palindromic(o)) {
            ++count;
        }
    });
    return count;
}

namespace {

void syt_rec(const Partition& shape, std::vector<int>& filled, int next,
             std::vector<std::vector<int>>& cells,
             const std::function<void(const StandardTableau&)>& fn) {
    if (next > shape.size()) {
        fn(cells);
        return;
    }
    for (int i = 0; i < shape.height(); ++i) {
        const int r = filled[static_cast<std::size_t>(i)];
        if (r >= shape.part(i)) {
            continue;
        }
        if (i > 0 && filled[static_cast<std::size_t>(i) - 1] <= r) {
            continue;  // the cell above is still empty
        }
        cells[static_cast<std::size_t>(i)].push_back(next);
        ++filled[static_cast<std::size_t>(i)];
        syt_rec(shape, filled, next + 1, cells, fn);
        --filled[static_cast<std::size_t>(i)];
        cells[static_cast<std::size_t>(i)].pop_back();
    }
}

void for_each_syt(const Partition& shape, const std::function<void(const StandardTableau&)>& fn) {
    if (shape.size() > enumeration_caps().syt_cells) {
        refuse("enumerate_syt", shape.size(), enumeration_caps().syt_cells);
    }
    if (shape.height() == 0) {
        fn(StandardTableau{});
        return;
    }
    std::vector<int> filled(static_cast<std::size_t>(shape.height()), 0);
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(shape.height()));
    syt_rec(shape, filled, 1, cells, fn);
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); });
    return out;
}

BigInt count_syt(const Partition& shape) {
    BigInt count = 0;
    for_each_syt(shape, [&](const StandardTableau&) { ++count; });
    return count;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("Permutation: not a bijection on {1..n}");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

int longest_increasing(const Permutation& w) {
    std::vector<int> tails;
    for (int v : w.images()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end()) {
            tails.push_back(v);
        } else {
            *it = v;
        }
    }
    return static_cast<int>(tails.size());
}

namespace {

void check_permutation_cap(const char* what, int n) {
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": negative n");
    }
    if (n > enumeration_caps().permutations) {
        refuse(what, n, enumeration_caps().permutations);
    }
}

}  // namespace

BigInt count_lis_bounded(int n, int d) {
    check_permutation_cap("count_lis_bounded", n);
    if (d < 0) {
        throw std::invalid_argument("count_lis_bounded: negative bound");
    }
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    BigInt count = 0;
    std::vector<int> tails;
    do {
        tails.clear();
        for (int v : w) {
            auto it = std::lower_bound(tails.begin(), tails.end(), v);
            if (it == tails.end()) {
                tails.push_back(v);
            } else {
                *it = v;
            }
            if (static_cast<int>(tails.size()) > d) {
                break;
            }
        }
        if (static_cast<int>(tails.size()) <= d) {
            ++count;
        }
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
}

BigInt count_involutions(int n) {
    check_permutation_cap("count_involutions", n);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    BigInt count = 0;
    do {
        bool inv = true;
        for (int i = 0; i < n; ++i) {
            if (w[static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)] != i + 1) {
                inv = false;
                break;
            }
        }
        if (inv) {
            ++count;
        }
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
}

BigInt tilde_f(const Partition& shape, int n) {
    if (n < 0) {
        throw std::invalid_argument("tilde_f: negative length");
    }
    const int excess = n - shape.size();
    if (excess < 0 || excess % 2 != 0) {
        return 0;
    }
    const int r = excess / 2;
    return binomial(n, 2 * r) * odd_double_factorial(r) * hook_length_count(shape);
}

namespace {

void partitions_rec(int remaining, int max_part, int max_height, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (static_cast<int>(acc.size()) >= max_height) {
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, max_height, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> max_height) {
    if (n < 0) {
        throw std::invalid_argument("partitions_of: negative n");
    }
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n == 0 ? 1 : n, max_height.value_or(n == 0 ? 1 : n), acc, out);
    return out;
}

}  // namespace weylcount
