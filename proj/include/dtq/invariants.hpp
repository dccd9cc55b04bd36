#pragma once

#include "dtq/exact_algebra.hpp"
#include "dtq/hall_engine.hpp"
#include "dtq/quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dtq {

/// Linear framing pairing d -> sum_v w(v) d(v). For a framing vector e of a
/// quiver this is e.d; for the sheaf demos it encodes the Hilbert polynomial
/// value chi([O(-n)], alpha) on a rank-one class lattice.
class Framing {
public:
    explicit Framing(DimVector weights) : weights_(std::move(weights)) {}

    const DimVector& weights() const { return weights_; }
    long pairing(const DimVector& d) const;

private:
    DimVector weights_;
};

/// Framed / pair invariants (NDT^{d,e} or PI^{alpha,n}) per nonzero class.
struct PairTable {
    std::map<DimVector, Rational> values;
    DimVector framing;

    const Rational& at(const DimVector& d) const;
};

/// BPS invariants per nonzero class.
struct BPSTable {
    std::map<DimVector, Rational> values;
    /// Genericity of the stability the table was computed under, when known.
    std::optional<bool> generic;

    const Rational& at(const DimVector& d) const;
};

/// Raised by dtbar_from_pair when a DT value cannot be recovered.
class DegenerateIdentity : public Error {
public:
    explicit DegenerateIdentity(const DimVector& d)
        : Error("pair identity degenerate at class " + d.to_string()), cls(d)
    {
    }
    DimVector cls;
};

/// BPS^a = sum_{m | a} Moebius(m)/m^2 DT^{a/m}.
BPSTable bps_from_dtbar(const DTTable& t);
/// DT^a = sum_{m | a} 1/m^2 BPS^{a/m}.
DTTable dtbar_from_bps(const BPSTable& t);

struct IntegralityReport {
    GenericityResult genericity;
    bool potential_zero = true;
    /// Classes whose BPS value is not an integer.
    std::vector<DimVector> non_integral;
    /// True when the stability is generic, W == 0 and some entry is not
    /// integral (the proven case would be contradicted).
    bool violation = false;
};

IntegralityReport integrality_report(const BPSTable& t, const Quiver& q, const Stability& s, const DimVector& box,
                                     const Superpotential& w = {});

enum class PairMethod {
    /// Ordered composition sum with the prefix-dependent factors.
    composition,
    /// Exponential form per slope sector; requires chi-bar to vanish inside
    /// every sector touched.
    exponential,
    /// Exponential form where valid, composition sum elsewhere.
    automatic,
};

/// Pair / framed invariants from DT-bar values:
///   P^d = sum over d_1+...+d_l = d, mu(d_i) = mu(d), of (-1)^l/l! prod_i
///         (-1)^{f_i} f_i DT^{d_i},  f_i = w.d_i - chi(d_1+...+d_{i-1}, d_i).
PairTable pair_from_dtbar(const DTTable& t, const Quiver& q, const Framing& framing, const Stability& s,
                          const DimVector& box, PairMethod method = PairMethod::automatic);

struct PairInversion {
    DTTable table;
    /// Classes where the framing pairing vanishes and the identity holds for
    /// every value of DT^d; no value is recovered there.
    std::vector<DimVector> undetermined;
};

/// Solves the pair identity for DT-bar class by class in increasing total
/// dimension. Throws DegenerateIdentity if a class with zero linear
/// coefficient is inconsistent or its value is needed elsewhere.
PairInversion dtbar_from_pair(const PairTable& p, const Quiver& q, const Framing& framing, const Stability& s,
                              const DimVector& box);

/// True if chi-bar vanishes between every pair of equal-slope classes <= box.
bool sectors_commute(const Quiver& q, const Stability& s, const DimVector& box);

// ------------------------------------------------------------------ demos

struct DemoRow {
    DimVector cls;
    std::string quantity;
    Rational expected;
    Rational computed;
    bool pass = false;
};

struct DemoReport {
    std::string name;
    std::vector<DemoRow> rows;
    std::vector<std::string> notes;
    bool pass = true;
};

/// Rigid stable object with multiples: PI^{m} = (-1)^{m(P-m)} C(P, m) on a
/// rank-one lattice with pairing P; recovers DT^m = 1/m^2 and BPS.
DemoReport demo_grassmannian(long pairing_value, int max_multiple);

/// Dimension-zero sheaves: PI series prod_k (1-(-s)^k)^{-k chi} truncated at
/// max_degree; recovers DT^d = -chi sum_{l|d} 1/l^2 and BPS^d = -chi.
DemoReport demo_hilbert_points(long euler_characteristic, int max_degree);

/// Conifold quiver at mu = 0 with framing (1,0): NDT series expanded from the
/// infinite product, DT and BPS recovered and compared with the closed forms.
DemoReport demo_conifold(const DimVector& box);

/// prod_{k>=1} (1-(-s)^k)^{-k chi} truncated at max_degree.
GradedSeries hilbert_points_series(long euler_characteristic, int max_degree);
/// The conifold NDT generating function with framing (1,0), truncated to box.
GradedSeries conifold_ndt_series(const DimVector& box);
/// Closed-form conifold DT-bar^{(d0,d1)}(0).
Rational conifold_dtbar(const DimVector& d);
/// Closed-form conifold BPS^{(d0,d1)}(0).
Rational conifold_bps(const DimVector& d);

}  // namespace dtq
