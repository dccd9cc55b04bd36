#pragma once

#include "dtq/exact_algebra.hpp"
#include "dtq/quiver.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

namespace dtq {

/// The engine only handles quivers without relations.
class PotentialUnsupported : public Error {
public:
    PotentialUnsupported()
        : Error("nonzero superpotential: critical-locus weighting is not supported by the Hall engine")
    {
    }
};

/// Throws PotentialUnsupported if w is nonzero.
void require_no_potential(const Superpotential& w);

/// Class-graded table of generalized DT invariants (or any exact per-class
/// values), defined on nonzero classes.
struct DTTable {
    std::map<DimVector, Rational> values;
    /// Free-form provenance: stability name, box, source.
    std::string provenance;

    const Rational& at(const DimVector& d) const;
    bool contains(const DimVector& d) const { return values.count(d) != 0; }
};

/// a_d(q) = q^{sum_a d(t)d(h)} / prod_v |GL(d(v), F_q)|, as a function of v.
RationalFunc stacky_count_all(const Quiver& q, const DimVector& d);

/// |GL(n, F_q)| = prod_{i<n} (q^n - q^i) as a polynomial in v.
Polynomial gl_order(unsigned n);

/// Finite-field counting model of the Hall algebra for one (quiver,
/// stability) pair. Semistable counts are memoized; the cache is safe for
/// concurrent readers and writers (duplicate computation may happen, results
/// are identical).
class HallEngine {
public:
    HallEngine(Quiver quiver, Stability stability);

    const Quiver& quiver() const { return quiver_; }
    const Stability& stability() const { return stability_; }

    /// Stacky count of mu-semistable representations, via the unique
    /// Harder-Narasimhan filtration:
    ///   a_d = sum over (d_1,...,d_n), mu strictly decreasing, sum d,
    ///         of v^{-2 sum_{i<j} <d_j,d_i>} prod_i a^ss_{d_i}.
    RationalFunc semistable_count(const DimVector& d) const;

    /// Quantum-torus coefficient of the log of the semistable element:
    ///   sum over d_1+...+d_n = d with mu(d_i) = mu(d) of
    ///   (-1)^{n-1}/n v^{sum <d_i,d_i> + sum_{i<j} chi(d_i,d_j)} prod a^ss_{d_i}.
    RationalFunc epsilon_hat(const DimVector& d) const;

    /// DT-bar^d(mu) = -polar_limit(epsilon_hat(d)).
    Rational dtbar(const DimVector& d) const;

    /// dtbar over every nonzero class <= box.
    DTTable dtbar_table(const DimVector& box) const;

private:
    void check_class(const DimVector& d) const;
    /// Stacky count of representations of class e all of whose HN factors
    /// have slope strictly below `bound` (no bound when empty).
    RationalFunc bounded_count(const DimVector& e, const std::optional<Rational>& bound) const;

    Quiver quiver_;
    Stability stability_;
    mutable std::shared_mutex mutex_;
    mutable std::map<DimVector, RationalFunc> semistable_cache_;
    mutable std::map<DimVector, RationalFunc> epsilon_cache_;
};

// Free-function forms of the engine operations.
RationalFunc hn_semistable_count(const Quiver& q, const Stability& s, const DimVector& d);
RationalFunc epsilon_hat(const Quiver& q, const Stability& s, const DimVector& d);
Rational dtbar(const Quiver& q, const Stability& s, const DimVector& d);
DTTable dtbar_table(const Quiver& q, const Stability& s, const DimVector& box);

}  // namespace dtq
