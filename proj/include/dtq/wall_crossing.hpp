#pragma once

#include "dtq/hall_engine.hpp"
#include "dtq/quiver.hpp"

#include <span>
#include <utility>
#include <vector>

namespace dtq {

/// A tree on vertices {0, ..., n-1} with oriented edges (from, to).
class OrientedTree {
public:
    OrientedTree(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t vertex_count() const { return n_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// S(a_1..a_n; tau, tautilde) in {-1, 0, 1}.
int s_coeff(std::span<const DimVector> classes, const Stability& tau, const Stability& tautilde);

/// U(a_1..a_n; tau, tautilde), summing over every pair of nested splittings
/// whose tau / tautilde slope conditions hold.
Rational u_coeff(std::span<const DimVector> classes, const Stability& tau, const Stability& tautilde);

/// Every labeled tree on n vertices with each edge oriented from the smaller
/// to the larger label (n^{n-2} of them), generated from Pruefer codes.
std::vector<OrientedTree> enumerate_ordered_trees(int n);

/// Every labeled tree on n vertices with every orientation of its edges.
std::vector<OrientedTree> enumerate_oriented_trees(int n);

/// V(I, Gamma, kappa; tau, tautilde): 1/(2^{n-1} n!) times the sum of U over
/// the orderings of I compatible with the edge directions of the tree.
Rational v_coeff(const OrientedTree& tree, std::span<const DimVector> kappa, const Stability& tau,
                 const Stability& tautilde);

/// DT-bar^target(tautilde) from DT-bar(tau) on every nonzero class <= target.
Rational transform_dt(const Quiver& q, const DTTable& table, const Stability& tau, const Stability& tautilde,
                      const DimVector& target);

/// transform_dt over every nonzero class <= box.
DTTable transform_table(const Quiver& q, const DTTable& table, const Stability& tau, const Stability& tautilde,
                        const DimVector& box);

}  // namespace dtq
