#include "dtq/wall_crossing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace dtq {

OrientedTree::OrientedTree(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(vertex_count), edges_(std::move(edges))
{
    if (n_ == 0) {
        throw Error("tree must have at least one vertex");
    }
    if (edges_.size() + 1 != n_) {
        throw Error("tree on " + std::to_string(n_) + " vertices needs " + std::to_string(n_ - 1) + " edges");
    }
    // Union-find: n-1 edges and no cycle means connected and acyclic.
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& [a, b] : edges_) {
        if (a >= n_ || b >= n_) {
            throw Error("tree edge references a missing vertex");
        }
        const auto ra = find(a);
        const auto rb = find(b);
        if (ra == rb) {
            throw Error("edge set contains a cycle");
        }
        parent[ra] = rb;
    }
}

namespace {

DimVector sum_of(std::span<const DimVector> xs)
{
    DimVector s = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) {
        s += xs[i];
    }
    return s;
}

/// Calls f(cuts) for every composition of n into ordered blocks; cuts holds
/// the block boundaries 0 = c_0 < c_1 < ... < c_m = n.
template <typename F>
void for_each_composition(std::size_t n, F&& f)
{
    const std::size_t gaps = n - 1;
    std::vector<std::size_t> cuts;
    for (unsigned long mask = 0; mask < (1UL << gaps); ++mask) {
        cuts.assign(1, 0);
        for (std::size_t g = 0; g < gaps; ++g) {
            if (mask & (1UL << g)) {
                cuts.push_back(g + 1);
            }
        }
        cuts.push_back(n);
        f(cuts);
    }
}

}  // namespace

int s_coeff(std::span<const DimVector> classes, const Stability& tau, const Stability& tautilde)
{
    if (classes.empty()) {
        throw Error("s_coeff: empty class list");
    }
    const std::size_t n = classes.size();
    std::vector<DimVector> prefix(n);
    prefix[0] = classes[0];
    for (std::size_t i = 1; i < n; ++i) {
        prefix[i] = prefix[i - 1] + classes[i];
    }
    int sign = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const DimVector suffix = prefix[n - 1] - prefix[i];
        const bool rises = tau.slope(classes[i]) <= tau.slope(classes[i + 1]);
        const bool left_heavier = tautilde.slope(prefix[i]) > tautilde.slope(suffix);
        if (rises && left_heavier) {
            sign = -sign;  // condition (a)
        } else if (!rises && !left_heavier) {
            // condition (b)
        } else {
            return 0;
        }
    }
    return sign;
}

Rational u_coeff(std::span<const DimVector> classes, const Stability& tau, const Stability& tautilde)
{
    if (classes.empty()) {
        throw Error("u_coeff: empty class list");
    }
    const std::size_t n = classes.size();
    const Rational total_slope = tautilde.slope(sum_of(classes));
    Rational result = 0;
    for_each_composition(n, [&](const std::vector<std::size_t>& a) {
        const std::size_t m = a.size() - 1;
        std::vector<DimVector> beta;
        Rational weight = 1;
        for (std::size_t i = 0; i < m; ++i) {
            auto block = classes.subspan(a[i], a[i + 1] - a[i]);
            DimVector b = sum_of(block);
            const Rational mu_b = tau.slope(b);
            for (const auto& x : block) {
                if (tau.slope(x) != mu_b) {
                    return;
                }
            }
            beta.push_back(std::move(b));
            weight /= factorial(static_cast<unsigned>(block.size()));
        }
        for_each_composition(m, [&](const std::vector<std::size_t>& b) {
            const std::size_t l = b.size() - 1;
            Rational term = frac(l % 2 == 1 ? 1 : -1, static_cast<long>(l));
            for (std::size_t i = 0; i < l; ++i) {
                std::span<const DimVector> group(beta.data() + b[i], b[i + 1] - b[i]);
                if (tautilde.slope(sum_of(group)) != total_slope) {
                    return;
                }
                const int s = s_coeff(group, tau, tautilde);
                if (s == 0) {
                    return;
                }
                term *= s;
            }
            result += term * weight;
        });
    });
    return result;
}

std::vector<OrientedTree> enumerate_ordered_trees(int n)
{
    if (n <= 0) {
        throw Error("enumerate_ordered_trees: n must be positive");
    }
    const auto un = static_cast<std::size_t>(n);
    if (n == 1) {
        return {OrientedTree(1, {})};
    }
    std::vector<OrientedTree> out;
    std::vector<std::size_t> code(un - 2, 0);
    while (true) {
        // Pruefer decoding.
        std::vector<std::size_t> degree(un, 1);
        for (auto x : code) {
            ++degree[x];
        }
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (auto x : code) {
            std::size_t leaf = 0;
            while (degree[leaf] != 1) {
                ++leaf;
            }
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
            --degree[leaf];
            --degree[x];
        }
        std::size_t u = un;
        for (std::size_t i = 0; i < un; ++i) {
            if (degree[i] == 1) {
                if (u == un) {
                    u = i;
                } else {
                    edges.emplace_back(u, i);
                }
            }
        }
        std::sort(edges.begin(), edges.end());
        out.emplace_back(un, std::move(edges));

        std::size_t pos = code.size();
        while (pos > 0) {
            --pos;
            if (++code[pos] < un) {
                break;
            }
            code[pos] = 0;
            if (pos == 0) {
                return out;
            }
        }
        if (code.empty()) {
            return out;
        }
    }
}

std::vector<OrientedTree> enumerate_oriented_trees(int n)
{
    std::vector<OrientedTree> out;
    for (const auto& t : enumerate_ordered_trees(n)) {
        const std::size_t m = t.edges().size();
        for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
            auto edges = t.edges();
            for (std::size_t k = 0; k < m; ++k) {
                if (mask & (1UL << k)) {
                    std::swap(edges[k].first, edges[k].second);
                }
            }
            out.emplace_back(t.vertex_count(), std::move(edges));
        }
    }
    return out;
}

namespace {

class UCache {
public:
    UCache(const Stability& tau, const Stability& tautilde) : tau_(tau), tautilde_(tautilde) {}

    const Rational& get(const std::vector<DimVector>& classes)
    {
        auto it = cache_.find(classes);
        if (it == cache_.end()) {
            it = cache_.emplace(classes, u_coeff(classes, tau_, tautilde_)).first;
        }
        return it->second;
    }

private:
    const Stability& tau_;
    const Stability& tautilde_;
    std::map<std::vector<DimVector>, Rational> cache_;
};

Rational v_coeff_cached(const OrientedTree& tree, std::span<const DimVector> kappa, UCache& cache)
{
    const std::size_t n = tree.vertex_count();
    if (kappa.size() != n) {
        throw VertexMismatch("class assignment does not match the tree's vertex set");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> position(n);
    std::vector<DimVector> ordered(n);
    Rational sum = 0;
    do {
        for (std::size_t a = 0; a < n; ++a) {
            position[order[a]] = a;
        }
        bool compatible = true;
        for (const auto& [from, to] : tree.edges()) {
            if (position[from] > position[to]) {
                compatible = false;
                break;
            }
        }
        if (!compatible) {
            continue;
        }
        for (std::size_t a = 0; a < n; ++a) {
            ordered[a] = kappa[order[a]];
        }
        sum += cache.get(ordered);
    } while (std::next_permutation(order.begin(), order.end()));
    Integer scale = factorial(static_cast<unsigned>(n));
    scale <<= static_cast<mp_bitcnt_t>(n - 1);
    return sum / Rational(scale);
}

/// Calls f(parts) for every ordered tuple of n nonzero classes summing to target.
template <typename F>
void for_each_ordered_split(const DimVector& target, std::size_t n, std::vector<DimVector>& parts, F&& f)
{
    if (n == 1) {
        parts.push_back(target);
        f(parts);
        parts.pop_back();
        return;
    }
    for (const auto& first : nonzero_classes_in_box(target)) {
        const DimVector rest = target - first;
        if (rest.total() < static_cast<long>(n - 1)) {
            continue;
        }
        parts.push_back(first);
        for_each_ordered_split(rest, n - 1, parts, f);
        parts.pop_back();
    }
}

}  // namespace

Rational v_coeff(const OrientedTree& tree, std::span<const DimVector> kappa, const Stability& tau,
                 const Stability& tautilde)
{
    UCache cache(tau, tautilde);
    return v_coeff_cached(tree, kappa, cache);
}

Rational transform_dt(const Quiver& q, const DTTable& table, const Stability& tau, const Stability& tautilde,
                      const DimVector& target)
{
    q.check(target);
    if (target.is_zero() || !target.is_nonnegative()) {
        throw Error("transform_dt: target must be a nonzero class");
    }
    UCache cache(tau, tautilde);
    Rational result = 0;
    std::vector<DimVector> parts;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(target.total()); ++n) {
        const auto trees = enumerate_oriented_trees(static_cast<int>(n));
        for_each_ordered_split(target, n, parts, [&](const std::vector<DimVector>& kappa) {
            Rational dt_product = 1;
            for (const auto& k : kappa) {
                dt_product *= table.at(k);
            }
            if (sgn(dt_product) == 0) {
                return;
            }
            std::vector<std::vector<long>> chi(n, std::vector<long>(n, 0));
            long abs_sum = 0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    chi[i][j] = euler_form_antisym(q, kappa[i], kappa[j]);
                    if (i < j) {
                        abs_sum += std::labs(chi[i][j]);
                    }
                }
            }
            // (-1)^{|I|-1} (-1)^{1/2 sum_{i,j} |chi|}
            const int sign = ((n - 1 + static_cast<std::size_t>(abs_sum)) % 2 == 0) ? 1 : -1;
            for (const auto& tree : trees) {
                long edge_product = 1;
                for (const auto& [from, to] : tree.edges()) {
                    edge_product *= chi[from][to];
                    if (edge_product == 0) {
                        break;
                    }
                }
                if (edge_product == 0) {
                    continue;
                }
                const Rational v = v_coeff_cached(tree, kappa, cache);
                if (sgn(v) == 0) {
                    continue;
                }
                result += v * dt_product * edge_product * sign;
            }
        });
    }
    return result;
}

DTTable transform_table(const Quiver& q, const DTTable& table, const Stability& tau, const Stability& tautilde,
                        const DimVector& box)
{
    DTTable out;
    for (const auto& d : nonzero_classes_in_box(box)) {
        out.values.emplace(d, transform_dt(q, table, tau, tautilde, d));
    }
    out.provenance = "wall_crossing box=" + box.to_string();
    return out;
}

}  // namespace dtq
