#include "dtq/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dtq {

// ---------------------------------------------------------------- DimVector

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {}

DimVector::DimVector(std::initializer_list<int> entries) : entries_(entries) {}

bool DimVector::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

bool DimVector::is_nonnegative() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x >= 0; });
}

long DimVector::total() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

long DimVector::content() const
{
    long g = 0;
    for (int x : entries_) {
        g = std::gcd(g, static_cast<long>(x));
    }
    return g;
}

bool DimVector::fits_in(const DimVector& box) const
{
    if (box.size() != size()) {
        throw VertexMismatch("dimension vector sizes differ");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        if (entries_[i] > box[i]) {
            return false;
        }
    }
    return true;
}

DimVector& DimVector::operator+=(const DimVector& o)
{
    if (o.size() != size()) {
        throw VertexMismatch("dimension vector sizes differ");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        entries_[i] += o[i];
    }
    return *this;
}

DimVector& DimVector::operator-=(const DimVector& o)
{
    if (o.size() != size()) {
        throw VertexMismatch("dimension vector sizes differ");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        entries_[i] -= o[i];
    }
    return *this;
}

DimVector DimVector::scaled(int k) const
{
    DimVector r = *this;
    for (auto& x : r.entries_) {
        x *= k;
    }
    return r;
}

DimVector DimVector::divided(long m) const
{
    DimVector r = *this;
    for (auto& x : r.entries_) {
        x = static_cast<int>(x / m);
    }
    return r;
}

std::string DimVector::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i != 0) {
            os << ',';
        }
        os << entries_[i];
    }
    return os.str();
}

DimVector DimVector::parse(std::string_view text)
{
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        std::string piece(text.substr(start, comma - start));
        try {
            std::size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) {
                throw Error("");
            }
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error("malformed dimension vector: '" + std::string(text) + "'");
        }
        start = comma + 1;
    }
    return DimVector(std::move(out));
}

std::vector<DimVector> classes_in_box(const DimVector& box)
{
    if (!box.is_nonnegative()) {
        throw Error("box entries must be nonnegative");
    }
    std::vector<DimVector> out;
    DimVector cur = DimVector::zero(box.size());
    while (true) {
        out.push_back(cur);
        // Odometer increment, last coordinate fastest: lexicographic order.
        std::size_t i = box.size();
        while (i > 0) {
            --i;
            if (cur[i] < box[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
            if (i == 0) {
                return out;
            }
        }
        if (box.size() == 0) {
            return out;
        }
    }
}

std::vector<DimVector> nonzero_classes_in_box(const DimVector& box)
{
    auto all = classes_in_box(box);
    all.erase(all.begin());
    return all;
}

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    std::set<std::string> names(vertices_.begin(), vertices_.end());
    if (names.size() != vertices_.size()) {
        throw Error("duplicate vertex name");
    }
    std::set<std::string> labels;
    for (const auto& a : arrows_) {
        if (a.tail >= vertices_.size() || a.head >= vertices_.size()) {
            throw Error("arrow '" + a.label + "' references an undeclared vertex");
        }
        if (!labels.insert(a.label).second) {
            throw Error("duplicate arrow label '" + a.label + "'");
        }
    }
}

Quiver Quiver::from_names(std::vector<std::string> vertices,
                          const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
{
    auto index = [&](const std::string& name) -> std::size_t {
        auto it = std::find(vertices.begin(), vertices.end(), name);
        if (it == vertices.end()) {
            throw Error("arrow references undeclared vertex '" + name + "'");
        }
        return static_cast<std::size_t>(it - vertices.begin());
    };
    std::vector<Arrow> out;
    for (const auto& [t, h, label] : arrows) {
        out.push_back(Arrow{index(t), index(h), label});
    }
    return Quiver(std::move(vertices), std::move(out));
}

std::size_t Quiver::vertex_index(std::string_view name) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) {
        throw Error("unknown vertex '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view label) const
{
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (arrows_[i].label == label) {
            return i;
        }
    }
    return std::nullopt;
}

void Quiver::check(const DimVector& d) const
{
    if (d.size() != vertices_.size()) {
        throw VertexMismatch("dimension vector has " + std::to_string(d.size()) + " entries, quiver has "
                             + std::to_string(vertices_.size()) + " vertices");
    }
}

Quiver Quiver::point()
{
    return Quiver({"v0"}, {});
}

Quiver Quiver::a2()
{
    return from_names({"v0", "v1"}, {{"v0", "v1", "a"}});
}

Quiver Quiver::kronecker()
{
    return from_names({"v0", "v1"}, {{"v0", "v1", "a"}, {"v0", "v1", "b"}});
}

Quiver Quiver::one_loop()
{
    return from_names({"v0"}, {{"v0", "v0", "x"}});
}

Quiver Quiver::conifold()
{
    return from_names({"v0", "v1"},
                      {{"v0", "v1", "e1"}, {"v0", "v1", "e2"}, {"v1", "v0", "f1"}, {"v1", "v0", "f2"}});
}

long euler_form_nonsym(const Quiver& q, const DimVector& d, const DimVector& e)
{
    q.check(d);
    q.check(e);
    long sum = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        sum += static_cast<long>(d[v]) * e[v];
    }
    for (const auto& a : q.arrows()) {
        sum -= static_cast<long>(d[a.tail]) * e[a.head];
    }
    return sum;
}

long euler_form_antisym(const Quiver& q, const DimVector& d, const DimVector& e)
{
    q.check(d);
    q.check(e);
    long sum = 0;
    for (const auto& a : q.arrows()) {
        sum += static_cast<long>(d[a.head]) * e[a.tail] - static_cast<long>(d[a.tail]) * e[a.head];
    }
    return sum;
}

// ---------------------------------------------------------------- Stability

Stability::Stability(std::vector<Rational> c, std::vector<Rational> r) : c_(std::move(c)), r_(std::move(r))
{
    if (c_.size() != r_.size()) {
        throw VertexMismatch("stability: c and r have different lengths");
    }
    for (const auto& x : r_) {
        if (sgn(x) <= 0) {
            throw Error("stability: r must be positive at every vertex");
        }
    }
}

Stability Stability::trivial(std::size_t n)
{
    return Stability(std::vector<Rational>(n, 0), std::vector<Rational>(n, 1));
}

Stability Stability::with_c(std::vector<Rational> c)
{
    const auto n = c.size();
    return Stability(std::move(c), std::vector<Rational>(n, 1));
}

Rational Stability::slope(const DimVector& d) const
{
    if (d.size() != c_.size()) {
        throw VertexMismatch("stability and dimension vector sizes differ");
    }
    if (d.is_zero()) {
        throw Error("slope undefined on zero class");
    }
    Rational num = 0;
    Rational den = 0;
    for (std::size_t v = 0; v < d.size(); ++v) {
        num += c_[v] * d[v];
        den += r_[v] * d[v];
    }
    return num / den;
}

Stability Stability::rescaled(const Rational& factor) const
{
    if (sgn(factor) <= 0) {
        throw Error("stability rescaling factor must be positive");
    }
    auto c = c_;
    auto r = r_;
    for (auto& x : c) {
        x *= factor;
    }
    for (auto& x : r) {
        x *= factor;
    }
    return Stability(std::move(c), std::move(r));
}

GenericityResult is_generic(const Quiver& q, const Stability& s, const DimVector& box)
{
    q.check(box);
    const auto classes = nonzero_classes_in_box(box);
    std::vector<Rational> slopes;
    slopes.reserve(classes.size());
    for (const auto& d : classes) {
        slopes.push_back(s.slope(d));
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            if (slopes[i] != slopes[j]) {
                continue;
            }
            const long x = euler_form_antisym(q, classes[i], classes[j]);
            if (x != 0) {
                // Report the witness oriented so that chi-bar(d, e) < 0.
                if (x < 0) {
                    return {false, std::make_pair(classes[i], classes[j])};
                }
                return {false, std::make_pair(classes[j], classes[i])};
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------- Superpotential

Superpotential::Superpotential(const Quiver& q, std::vector<PotentialTerm> terms) : terms_(std::move(terms))
{
    for (const auto& t : terms_) {
        if (t.cycle.size() < 3) {
            throw Error("superpotential is not minimal: cycle of length " + std::to_string(t.cycle.size()));
        }
        std::vector<std::size_t> idx;
        for (const auto& label : t.cycle) {
            auto i = q.arrow_index(label);
            if (!i) {
                throw Error("superpotential references unknown arrow '" + label + "'");
            }
            idx.push_back(*i);
        }
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const auto& a = q.arrows()[idx[k]];
            const auto& b = q.arrows()[idx[(k + 1) % idx.size()]];
            if (a.head != b.tail) {
                throw Error("superpotential term is not a closed path at arrow '" + a.label + "'");
            }
        }
    }
}

bool Superpotential::is_zero() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const PotentialTerm& t) { return sgn(t.coeff) == 0; });
}

Superpotential Superpotential::conifold(const Quiver& q)
{
    return Superpotential(q, {PotentialTerm{1, {"e1", "f1", "e2", "f2"}}, PotentialTerm{-1, {"e1", "f2", "e2", "f1"}}});
}

std::vector<PathTerm> cyclic_derivative(const Quiver& q, const Superpotential& w, std::string_view arrow)
{
    if (!q.arrow_index(arrow)) {
        throw Error("unknown arrow label '" + std::string(arrow) + "'");
    }
    std::map<Path, Rational> acc;
    for (const auto& t : w.terms()) {
        const auto& c = t.cycle;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] != arrow) {
                continue;
            }
            Path rest;
            for (std::size_t j = 1; j < c.size(); ++j) {
                rest.push_back(c[(k + j) % c.size()]);
            }
            acc[rest] += t.coeff;
        }
    }
    std::vector<PathTerm> out;
    for (auto& [path, coeff] : acc) {
        if (sgn(coeff) != 0) {
            out.push_back(PathTerm{coeff, path});
        }
    }
    return out;
}

Rational potential_trace_eval(const Quiver& q, const Superpotential& w, const DimVector& d,
                              std::span<const RationalMatrix> assignment)
{
    q.check(d);
    if (assignment.size() != q.arrows().size()) {
        throw Error("potential_trace_eval: expected one matrix per arrow");
    }
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        const auto& a = q.arrows()[j];
        const auto& m = assignment[j];
        if (m.rows != static_cast<std::size_t>(d[a.head]) || m.cols != static_cast<std::size_t>(d[a.tail])
            || m.data.size() != m.rows * m.cols) {
            throw Error("shape mismatch for arrow '" + a.label + "'");
        }
    }
    Rational total = 0;
    for (const auto& t : w.terms()) {
        // acc = A_{a_k} ... A_{a_1}, built by left multiplication along the cycle.
        const auto first = *q.arrow_index(t.cycle.front());
        const auto n = static_cast<std::size_t>(d[q.arrows()[first].tail]);
        RationalMatrix acc(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            acc.at(i, i) = 1;
        }
        for (const auto& label : t.cycle) {
            const auto& m = assignment[*q.arrow_index(label)];
            RationalMatrix next(m.rows, acc.cols);
            for (std::size_t i = 0; i < m.rows; ++i) {
                for (std::size_t k = 0; k < m.cols; ++k) {
                    if (sgn(m.at(i, k)) == 0) {
                        continue;
                    }
                    for (std::size_t j = 0; j < acc.cols; ++j) {
                        next.at(i, j) += m.at(i, k) * acc.at(k, j);
                    }
                }
            }
            acc = std::move(next);
        }
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) {
            tr += acc.at(i, i);
        }
        total += t.coeff * tr;
    }
    return total;
}

}  // namespace dtq
