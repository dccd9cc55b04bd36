#pragma once

#include "dtq/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dtq {

/// Raised when two objects disagree on the number of quiver vertices.
class VertexMismatch : public Error {
public:
    using Error::Error;
};

/// A dimension vector (class in Z^{Q_0}), entries in vertex declaration order.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<int> entries);
    DimVector(std::initializer_list<int> entries);

    static DimVector zero(std::size_t n) { return DimVector(std::vector<int>(n, 0)); }

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    std::span<const int> entries() const { return entries_; }

    bool is_zero() const;
    bool is_nonnegative() const;
    /// Sum of entries.
    long total() const;
    /// gcd of the entries (0 for the zero vector).
    long content() const;
    /// Componentwise d <= other.
    bool fits_in(const DimVector& box) const;

    DimVector& operator+=(const DimVector& o);
    DimVector& operator-=(const DimVector& o);
    friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
    friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
    DimVector scaled(int k) const;
    /// Exact division; caller guarantees m divides every entry.
    DimVector divided(long m) const;

    /// Lexicographic order, used for stable output ordering and map keys.
    friend auto operator<=>(const DimVector&, const DimVector&) = default;
    friend bool operator==(const DimVector&, const DimVector&) = default;

    /// Comma-joined entries, e.g. "1,0".
    std::string to_string() const;
    static DimVector parse(std::string_view text);

private:
    std::vector<int> entries_;
};

/// Every dimension vector 0 <= d <= box, lexicographic, including zero.
std::vector<DimVector> classes_in_box(const DimVector& box);
/// Same, excluding the zero vector.
std::vector<DimVector> nonzero_classes_in_box(const DimVector& box);

struct Arrow {
    std::size_t tail;
    std::size_t head;
    std::string label;
};

class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);
    /// Arrows given as (tail name, head name, label).
    static Quiver from_names(std::vector<std::string> vertices,
                             const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t vertex_index(std::string_view name) const;
    std::optional<std::size_t> arrow_index(std::string_view label) const;

    /// Throws VertexMismatch unless d is defined on exactly this vertex set.
    void check(const DimVector& d) const;

    // Small quivers used throughout the tests and demos.
    static Quiver point();
    static Quiver a2();
    static Quiver kronecker();
    static Quiver one_loop();
    static Quiver conifold();

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// <d,e> = sum_v d(v)e(v) - sum_a d(t(a))e(h(a)).
long euler_form_nonsym(const Quiver& q, const DimVector& d, const DimVector& e);

/// chi-bar(d,e) = sum_a d(h(a))e(t(a)) - d(t(a))e(h(a)).
long euler_form_antisym(const Quiver& q, const DimVector& d, const DimVector& e);

/// Slope stability mu(d) = sum c(v)d(v) / sum r(v)d(v), with r > 0.
class Stability {
public:
    Stability(std::vector<Rational> c, std::vector<Rational> r);
    /// c == 0, r == 1: every object semistable.
    static Stability trivial(std::size_t n);
    /// r == 1.
    static Stability with_c(std::vector<Rational> c);

    std::size_t size() const { return c_.size(); }
    const std::vector<Rational>& c() const { return c_; }
    const std::vector<Rational>& r() const { return r_; }

    Rational slope(const DimVector& d) const;
    /// (c, r) scaled by the same positive factor; defines the same slope order.
    Stability rescaled(const Rational& factor) const;

private:
    std::vector<Rational> c_;
    std::vector<Rational> r_;
};

inline Rational slope(const Stability& s, const DimVector& d) { return s.slope(d); }

struct GenericityResult {
    bool generic = true;
    /// Witness (d, e) with mu(d) = mu(e) and chi-bar(d,e) != 0.
    std::optional<std::pair<DimVector, DimVector>> witness;
};

/// Decides genericity of s restricted to nonzero classes inside box.
GenericityResult is_generic(const Quiver& q, const Stability& s, const DimVector& box);

/// A path in the quiver, as arrow labels in traversal order (the first label
/// is traversed first).
using Path = std::vector<std::string>;

struct PotentialTerm {
    Rational coeff;
    /// Cycle in traversal order: head of each arrow is the tail of the next,
    /// cyclically.
    Path cycle;
};

struct PathTerm {
    Rational coeff;
    Path path;
    friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

class Superpotential {
public:
    Superpotential() = default;
    Superpotential(const Quiver& q, std::vector<PotentialTerm> terms);

    const std::vector<PotentialTerm>& terms() const { return terms_; }
    bool is_zero() const;

    /// Conifold W = e1 f1 e2 f2 - e1 f2 e2 f1.
    static Superpotential conifold(const Quiver& q);

private:
    std::vector<PotentialTerm> terms_;
};

/// d_a W: for each occurrence of a in each cycle, rotate the cycle until that
/// occurrence is first and delete it. Like paths are merged; zero terms dropped;
/// output sorted by path.
std::vector<PathTerm> cyclic_derivative(const Quiver& q, const Superpotential& w, std::string_view arrow);

/// Dense matrix over Q, row-major.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Rational& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// W^d(A) = sum_i coeff_i Tr(A_{a_k} ... A_{a_1}) for each cycle a_1 ... a_k.
/// assignment[j] is the matrix of arrow j, shaped d(h) x d(t).
Rational potential_trace_eval(const Quiver& q, const Superpotential& w, const DimVector& d,
                              std::span<const RationalMatrix> assignment);

}  // namespace dtq
