#pragma once

#include "dtq/exact_algebra.hpp"
#include "dtq/quiver.hpp"

#include <cstdint>
#include <vector>

namespace dtq {

/// A quiver representation over the prime field F_p. matrices[a] is the
/// d(head) x d(tail) matrix of arrow a, row-major, entries in [0, p).
struct FqRep {
    int p = 2;
    DimVector dims;
    std::vector<std::vector<int>> matrices;

    /// Throws VertexMismatch / Error if shapes or entries are inconsistent.
    void check(const Quiver& q) const;
};

/// A representation plus framing maps sigma[v]: F_p^{e(v)} -> F_p^{d(v)},
/// stored as d(v) x e(v) row-major matrices.
struct FramedFqRep {
    FqRep rep;
    DimVector framing;
    std::vector<std::vector<int>> sigma;

    void check(const Quiver& q) const;
};

/// Upper bound on the number of elementary checks one oracle call may do.
inline constexpr std::uint64_t oracle_work_cap = 60'000'000;
/// Largest total dimension accepted by the enumerating oracles.
inline constexpr long oracle_max_total = 3;
/// Largest total dimension accepted by stacky_count_oracle.
inline constexpr long oracle_max_total_stacky = 4;
/// Largest total framing dimension accepted by the framed oracle.
inline constexpr long oracle_max_framing_total = 5;

/// |GL(n, F_p)| counted by enumerating invertible matrices when p^{n^2} is
/// small, by the product formula otherwise.
Integer gl_order_fp(int n, int p);

/// Number of arrow-matrix tuples of class d over F_p, divided by |prod GL|.
Rational stacky_count_oracle(const Quiver& q, const DimVector& d, int p);

/// Stacky count of slope-semistable representations, each tested against
/// every subrepresentation.
Rational semistable_count_oracle(const Quiver& q, const Stability& s, const DimVector& d, int p);

/// Stacky count of pairs (E, subrepresentation of class d1 with quotient of
/// class d3).
Rational hall_twist_oracle(const Quiver& q, const DimVector& d1, const DimVector& d3, int p);

/// p^{-<d3,d1>} a_{d1}(p) a_{d3}(p), the value the Hall twist law predicts.
Rational hall_twist_prediction(const Quiver& q, const DimVector& d1, const DimVector& d3, int p);

/// Stability of a framed representation: sigma != 0, every proper nonzero
/// subrepresentation E' has mu(E') <= mu(E), and mu(E') < mu(E) when E'
/// contains the image of sigma.
bool is_framed_stable(const Quiver& q, const Stability& s, const FramedFqRep& f);

/// Number of stable framed representations of class (d, e) divided by
/// |prod GL(d(v), F_p)|; an integer since stable objects have trivial
/// stabilizers.
Integer framed_stable_count_oracle(const Quiver& q, const Stability& s, const DimVector& d, const DimVector& e,
                                   int p);

/// The same count by enumerating every framing map directly; only for very
/// small cases.
Integer framed_stable_count_brute(const Quiver& q, const Stability& s, const DimVector& d, const DimVector& e,
                                  int p);

struct FramedCountFit {
    /// N as a polynomial in q.
    Polynomial polynomial;
    /// e.d - <d,d>, the dimension of the framed moduli space.
    long dimension = 0;
    std::vector<int> primes;
    std::vector<Integer> counts;
};

/// Interpolates the framed stable count as a polynomial of degree <= e.d -
/// <d,d> through successive primes and checks it at one extra prime. Throws
/// Error if the extra point disagrees.
FramedCountFit fit_framed_count(const Quiver& q, const Stability& s, const DimVector& d, const DimVector& e);

/// (-1)^{e.d - <d,d>} N(1).
Rational ndt_direct(const Quiver& q, const Stability& s, const DimVector& d, const DimVector& e);

/// Gaussian binomial [n choose k] evaluated at q.
Integer gaussian_binomial(long n, long k, long q);

struct HomExt {
    long hom = 0;
    long ext1 = 0;
};

/// dim Hom(D, E) and dim Ext^1(D, E) over F_p for a quiver without
/// relations, from the kernel and cokernel of the standard two-term complex.
HomExt hom_ext_oracle(const Quiver& q, const FqRep& d, const FqRep& e);

/// A uniformly random representation of class d over F_p.
FqRep random_rep(const Quiver& q, const DimVector& d, int p, std::uint64_t seed);

}  // namespace dtq
