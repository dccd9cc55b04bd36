#include "dtq/oracle.hpp"

#include <random>

namespace dtq {

namespace {

constexpr int oracle_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

void check_prime(int p)
{
    for (int x : oracle_primes) {
        if (x == p) {
            return;
        }
    }
    throw Error("oracle field size must be a prime <= 47, got " + std::to_string(p));
}

long ipow(long base, long exp)
{
    long r = 1;
    for (long i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

Integer ipow_big(long base, unsigned long exp)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

int inverse_mod(int a, int p)
{
    int r = 1;
    int b = a % p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) {
            r = r * b % p;
        }
        b = b * b % p;
    }
    return r;
}

/// Rank over F_p; rows are consumed.
long rank_mod(std::vector<std::vector<int>> rows, int p)
{
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    long rank = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        auto& pr = rows[static_cast<std::size_t>(rank)];
        const int inv = inverse_mod(pr[c], p);
        for (auto& x : pr) {
            x = x * inv % p;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) {
                continue;
            }
            const int f = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) {
                rows[r][k] = ((rows[r][k] - f * pr[k]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

/// Vectors of F_p^n encoded as integers in base p.
struct Codec {
    int p;
    int n;

    int size() const { return static_cast<int>(ipow(p, n)); }

    std::vector<int> decode(int x) const
    {
        std::vector<int> out(static_cast<std::size_t>(n));
        for (auto& digit : out) {
            digit = x % p;
            x /= p;
        }
        return out;
    }

    int encode(const std::vector<int>& digits) const
    {
        int x = 0;
        for (std::size_t i = digits.size(); i-- > 0;) {
            x = x * p + digits[i];
        }
        return x;
    }
};

/// Image of the encoded vector x under a rows x cols row-major matrix.
int apply(const std::vector<int>& m, int rows, int cols, int x, int p)
{
    const Codec in{p, cols};
    const auto xs = in.decode(x);
    std::vector<int> ys(static_cast<std::size_t>(rows), 0);
    for (int r = 0; r < rows; ++r) {
        int acc = 0;
        for (int c = 0; c < cols; ++c) {
            acc += m[static_cast<std::size_t>(r * cols + c)] * xs[static_cast<std::size_t>(c)];
        }
        ys[static_cast<std::size_t>(r)] = acc % p;
    }
    return Codec{p, rows}.encode(ys);
}

struct Subspace {
    int dim = 0;
    std::vector<int> basis;
    std::vector<char> member;
};

/// Every subspace of F_p^n, one reduced row-echelon representative each.
std::vector<Subspace> all_subspaces(int n, int p)
{
    const Codec codec{p, n};
    std::vector<Subspace> out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        std::vector<int> pivots;
        for (int c = 0; c < n; ++c) {
            if (mask & (1U << c)) {
                pivots.push_back(c);
            }
        }
        const int k = static_cast<int>(pivots.size());
        std::vector<std::pair<int, int>> free_slots;
        for (int i = 0; i < k; ++i) {
            for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < n; ++c) {
                if (!(mask & (1U << c))) {
                    free_slots.emplace_back(i, c);
                }
            }
        }
        std::vector<int> values(free_slots.size(), 0);
        while (true) {
            std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
            for (int i = 0; i < k; ++i) {
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
            }
            for (std::size_t f = 0; f < free_slots.size(); ++f) {
                rows[static_cast<std::size_t>(free_slots[f].first)][static_cast<std::size_t>(free_slots[f].second)] = values[f];
            }
            Subspace s;
            s.dim = k;
            for (const auto& r : rows) {
                s.basis.push_back(codec.encode(r));
            }
            s.member.assign(static_cast<std::size_t>(codec.size()), 0);
            std::vector<int> coeff(static_cast<std::size_t>(k), 0);
            while (true) {
                std::vector<int> v(static_cast<std::size_t>(n), 0);
                for (int i = 0; i < k; ++i) {
                    for (int c = 0; c < n; ++c) {
                        v[static_cast<std::size_t>(c)] += coeff[static_cast<std::size_t>(i)] * rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                    }
                }
                for (auto& x : v) {
                    x %= p;
                }
                s.member[static_cast<std::size_t>(codec.encode(v))] = 1;
                std::size_t pos = 0;
                while (pos < coeff.size() && ++coeff[pos] == p) {
                    coeff[pos++] = 0;
                }
                if (pos == coeff.size()) {
                    break;
                }
            }
            out.push_back(std::move(s));
            std::size_t pos = 0;
            while (pos < values.size() && ++values[pos] == p) {
                values[pos++] = 0;
            }
            if (pos == values.size()) {
                break;
            }
        }
    }
    return out;
}

/// Subspace lattices for every vertex of a class.
struct Lattices {
    std::vector<std::vector<Subspace>> per_vertex;

    Lattices(const DimVector& d, int p)
    {
        for (std::size_t v = 0; v < d.size(); ++v) {
            per_vertex.push_back(all_subspaces(d[v], p));
        }
    }

    std::uint64_t tuple_count() const
    {
        std::uint64_t n = 1;
        for (const auto& l : per_vertex) {
            n *= l.size();
        }
        return n;
    }
};

using Tuple = std::vector<const Subspace*>;

template <typename F>
void for_each_tuple(const Lattices& lat, F&& f)
{
    const std::size_t n = lat.per_vertex.size();
    Tuple t(n);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        for (std::size_t v = 0; v < n; ++v) {
            t[v] = &lat.per_vertex[v][idx[v]];
        }
        f(t);
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] == lat.per_vertex[pos].size()) {
            idx[pos++] = 0;
        }
        if (pos == n) {
            return;
        }
    }
}

DimVector tuple_dims(const Tuple& t)
{
    std::vector<int> dims;
    for (const auto* s : t) {
        dims.push_back(s->dim);
    }
    return DimVector(std::move(dims));
}

bool is_closed(const Quiver& q, const FqRep& rep, const Tuple& t)
{
    const auto& arrows = q.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const auto& sub_t = *t[arrows[a].tail];
        const auto& sub_h = *t[arrows[a].head];
        for (int b : sub_t.basis) {
            const int y = apply(rep.matrices[a], rep.dims[arrows[a].head], rep.dims[arrows[a].tail], b, rep.p);
            if (!sub_h.member[static_cast<std::size_t>(y)]) {
                return false;
            }
        }
    }
    return true;
}

long matrix_entry_count(const Quiver& q, const DimVector& d)
{
    long n = 0;
    for (const auto& a : q.arrows()) {
        n += static_cast<long>(d[a.tail]) * d[a.head];
    }
    return n;
}

void check_class(const Quiver& q, const DimVector& d, long max_total)
{
    q.check(d);
    if (!d.is_nonnegative()) {
        throw Error("negative dimension vector " + d.to_string());
    }
    if (d.total() > max_total) {
        throw SizeCapExceeded("oracle size cap: total dimension " + std::to_string(d.total()) + " exceeds "
                              + std::to_string(max_total));
    }
}

void check_work(std::uint64_t reps, std::uint64_t per_rep)
{
    if (per_rep != 0 && reps > oracle_work_cap / per_rep) {
        throw SizeCapExceeded("oracle work budget exceeded");
    }
}

std::uint64_t rep_count(const Quiver& q, const DimVector& d, int p)
{
    const long n = matrix_entry_count(q, d);
    std::uint64_t r = 1;
    for (long i = 0; i < n; ++i) {
        if (r > oracle_work_cap) {
            throw SizeCapExceeded("oracle work budget exceeded");
        }
        r *= static_cast<std::uint64_t>(p);
    }
    return r;
}

/// Calls f(rep) for every representation of class d over F_p.
template <typename F>
void for_each_rep(const Quiver& q, const DimVector& d, int p, F&& f)
{
    FqRep rep;
    rep.p = p;
    rep.dims = d;
    for (const auto& a : q.arrows()) {
        rep.matrices.emplace_back(static_cast<std::size_t>(d[a.tail]) * static_cast<std::size_t>(d[a.head]), 0);
    }
    while (true) {
        f(static_cast<const FqRep&>(rep));
        bool carried = true;
        for (auto& m : rep.matrices) {
            for (auto& x : m) {
                if (++x < p) {
                    carried = false;
                    break;
                }
                x = 0;
            }
            if (!carried) {
                break;
            }
        }
        if (carried) {
            return;
        }
    }
}

Integer gl_product(const DimVector& d, int p)
{
    Integer g = 1;
    for (std::size_t v = 0; v < d.size(); ++v) {
        g *= gl_order_fp(d[v], p);
    }
    return g;
}

/// Number of linear maps F_p^e -> W onto a fixed k-dimensional W.
Integer surjection_count(int e, int k, int p)
{
    if (k > e) {
        return 0;
    }
    Integer r = 1;
    const Integer pe = ipow_big(p, static_cast<unsigned long>(e));
    for (int i = 0; i < k; ++i) {
        r *= pe - ipow_big(p, static_cast<unsigned long>(i));
    }
    return r;
}

bool contains(const Tuple& outer, const Tuple& inner)
{
    for (std::size_t v = 0; v < outer.size(); ++v) {
        for (int b : inner[v]->basis) {
            if (!outer[v]->member[static_cast<std::size_t>(b)]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

void FqRep::check(const Quiver& q) const
{
    check_prime(p);
    q.check(dims);
    if (matrices.size() != q.arrows().size()) {
        throw VertexMismatch("representation needs one matrix per arrow");
    }
    for (std::size_t a = 0; a < matrices.size(); ++a) {
        const auto& arrow = q.arrows()[a];
        if (matrices[a].size() != static_cast<std::size_t>(dims[arrow.head]) * static_cast<std::size_t>(dims[arrow.tail])) {
            throw Error("matrix for arrow " + arrow.label + " has the wrong shape");
        }
        for (int x : matrices[a]) {
            if (x < 0 || x >= p) {
                throw Error("matrix entry outside [0, p)");
            }
        }
    }
}

void FramedFqRep::check(const Quiver& q) const
{
    rep.check(q);
    q.check(framing);
    if (sigma.size() != framing.size()) {
        throw VertexMismatch("framed representation needs one framing map per vertex");
    }
    for (std::size_t v = 0; v < sigma.size(); ++v) {
        if (sigma[v].size() != static_cast<std::size_t>(rep.dims[v]) * static_cast<std::size_t>(framing[v])) {
            throw Error("framing map has the wrong shape");
        }
    }
}

Integer gl_order_fp(int n, int p)
{
    check_prime(p);
    if (n < 0) {
        throw Error("negative matrix size");
    }
    const long entries = static_cast<long>(n) * n;
    if (entries <= 20 && ipow(p, entries) <= (1L << 20)) {
        const long total = ipow(p, entries);
        Integer count = 0;
        std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        for (long code = 0; code < total; ++code) {
            long c = code;
            for (auto& row : m) {
                for (auto& x : row) {
                    x = static_cast<int>(c % p);
                    c /= p;
                }
            }
            if (rank_mod(m, p) == n) {
                ++count;
            }
        }
        return count;
    }
    Integer r = 1;
    const Integer pn = ipow_big(p, static_cast<unsigned long>(n));
    for (int i = 0; i < n; ++i) {
        r *= pn - ipow_big(p, static_cast<unsigned long>(i));
    }
    return r;
}

Rational stacky_count_oracle(const Quiver& q, const DimVector& d, int p)
{
    check_prime(p);
    check_class(q, d, oracle_max_total_stacky);
    const Integer tuples = ipow_big(p, static_cast<unsigned long>(matrix_entry_count(q, d)));
    return Rational(tuples) / Rational(gl_product(d, p));
}

Rational semistable_count_oracle(const Quiver& q, const Stability& s, const DimVector& d, int p)
{
    check_prime(p);
    check_class(q, d, oracle_max_total);
    if (s.size() != q.vertex_count()) {
        throw VertexMismatch("stability and quiver sizes differ");
    }
    if (d.is_zero()) {
        return 1;
    }
    const Lattices lat(d, p);
    const Rational mu = s.slope(d);
    check_work(rep_count(q, d, p), lat.tuple_count());
    Integer semistable = 0;
    for_each_rep(q, d, p, [&](const FqRep& rep) {
        bool stable = true;
        for_each_tuple(lat, [&](const Tuple& t) {
            if (!stable) {
                return;
            }
            const DimVector e = tuple_dims(t);
            if (e.is_zero() || e == d || !(s.slope(e) > mu)) {
                return;
            }
            if (is_closed(q, rep, t)) {
                stable = false;
            }
        });
        if (stable) {
            ++semistable;
        }
    });
    return Rational(semistable) / Rational(gl_product(d, p));
}

Rational hall_twist_oracle(const Quiver& q, const DimVector& d1, const DimVector& d3, int p)
{
    check_prime(p);
    const DimVector d = d1 + d3;
    check_class(q, d1, oracle_max_total);
    check_class(q, d3, oracle_max_total);
    check_class(q, d, oracle_max_total);
    const Lattices lat(d, p);
    check_work(rep_count(q, d, p), lat.tuple_count());
    Integer pairs = 0;
    for_each_rep(q, d, p, [&](const FqRep& rep) {
        for_each_tuple(lat, [&](const Tuple& t) {
            if (tuple_dims(t) == d1 && is_closed(q, rep, t)) {
                ++pairs;
            }
        });
    });
    return Rational(pairs) / Rational(gl_product(d, p));
}

Rational hall_twist_prediction(const Quiver& q, const DimVector& d1, const DimVector& d3, int p)
{
    const long chi = euler_form_nonsym(q, d3, d1);
    Rational twist = chi >= 0 ? Rational(1) / Rational(ipow_big(p, static_cast<unsigned long>(chi)))
                              : Rational(ipow_big(p, static_cast<unsigned long>(-chi)));
    return twist * stacky_count_oracle(q, d1, p) * stacky_count_oracle(q, d3, p);
}

bool is_framed_stable(const Quiver& q, const Stability& s, const FramedFqRep& f)
{
    f.check(q);
    const auto& d = f.rep.dims;
    const int p = f.rep.p;
    bool nonzero = false;
    for (const auto& m : f.sigma) {
        for (int x : m) {
            nonzero = nonzero || x != 0;
        }
    }
    if (!nonzero) {
        return false;
    }
    const Rational mu = s.slope(d);
    const Lattices lat(d, p);
    bool stable = true;
    for_each_tuple(lat, [&](const Tuple& t) {
        if (!stable) {
            return;
        }
        const DimVector e = tuple_dims(t);
        if (e.is_zero() || e == d || !is_closed(q, f.rep, t)) {
            return;
        }
        const Rational m = s.slope(e);
        if (m > mu) {
            stable = false;
            return;
        }
        if (m < mu) {
            return;
        }
        for (std::size_t v = 0; v < d.size(); ++v) {
            for (int c = 0; c < f.framing[v]; ++c) {
                std::vector<int> column(static_cast<std::size_t>(d[v]));
                for (int r = 0; r < d[v]; ++r) {
                    column[static_cast<std::size_t>(r)] = f.sigma[v][static_cast<std::size_t>(r * f.framing[v] + c)];
                }
                if (!t[v]->member[static_cast<std::size_t>(Codec{p, d[v]}.encode(column))]) {
                    return;
                }
            }
        }
        stable = false;
    });
    return stable;
}

Integer framed_stable_count_oracle(const Quiver& q, const Stability& s, const DimVector& d, const DimVector& e,
                                   int p)
{
    check_prime(p);
    check_class(q, d, oracle_max_total);
    check_class(q, e, oracle_max_framing_total);
    if (d.is_zero()) {
        throw Error("framed count needs a nonzero class");
    }
    const Rational mu = s.slope(d);
    const Lattices lat(d, p);
    const std::uint64_t tuples = lat.tuple_count();
    check_work(rep_count(q, d, p), tuples * (tuples + 1));
    Integer total = 0;
    std::vector<Tuple> tight;
    for_each_rep(q, d, p, [&](const FqRep& rep) {
        // The framed condition forces E semistable; subrepresentations of
        // equal slope must not contain the image of sigma.
        tight.clear();
        bool semistable = true;
        for_each_tuple(lat, [&](const Tuple& t) {
            if (!semistable) {
                return;
            }
            const DimVector c = tuple_dims(t);
            if (c.is_zero() || c == d || !is_closed(q, rep, t)) {
                return;
            }
            const Rational m = s.slope(c);
            if (m > mu) {
                semistable = false;
            } else if (m == mu) {
                tight.push_back(t);
            }
        });
        if (!semistable) {
            return;
        }
        for_each_tuple(lat, [&](const Tuple& w) {
            const DimVector k = tuple_dims(w);
            if (k.is_zero() || !k.fits_in(e)) {
                return;
            }
            for (const auto& t : tight) {
                if (contains(t, w)) {
                    return;
                }
            }
            Integer weight = 1;
            for (std::size_t v = 0; v < d.size(); ++v) {
                weight *= surjection_count(e[v], k[v], p);
            }
            total += weight;
        });
    });
    const Integer g = gl_product(d, p);
    if (total % g != 0) {
        throw Error("framed stable count is not divisible by |GL|");
    }
    return total / g;
}

Integer framed_stable_count_brute(const Quiver& q, const Stability& s, const DimVector& d, const DimVector& e,
                                  int p)
{
    check_prime(p);
    check_class(q, d, oracle_max_total);
    check_class(q, e, oracle_max_framing_total);
    long sigma_entries = 0;
    for (std::size_t v = 0; v < d.size(); ++v) {
        sigma_entries += static_cast<long>(d[v]) * e[v];
    }
    const std::uint64_t reps = rep_count(q, d, p);
    const std::uint64_t framings = static_cast<std::uint64_t>(ipow(p, sigma_entries));
    check_work(reps, framings * Lattices(d, p).tuple_count());
    Integer total = 0;
    for_each_rep(q, d, p, [&](const FqRep& rep) {
        FramedFqRep f{rep, e, {}};
        for (std::size_t v = 0; v < d.size(); ++v) {
            f.sigma.emplace_back(static_cast<std::size_t>(d[v]) * static_cast<std::size_t>(e[v]), 0);
        }
        for (std::uint64_t code = 0; code < framings; ++code) {
            std::uint64_t c = code;
            for (auto& m : f.sigma) {
                for (auto& x : m) {
                    x = static_cast<int>(c % static_cast<std::uint64_t>(p));
                    c /= static_cast<std::uint64_t>(p);
                }
            }
            if (is_framed_stable(q, s, f)) {
                ++total;
            }
        }
    });
    const Integer g = gl_product(d, p);
    if (total % g != 0) {
        throw Error("framed stable count is not divisible by |GL|");
    }
    return total / g;
}

FramedCountFit fit_framed_count(const Quiver& q, const Stability& s, const DimVector& d, const DimVector& e)
{
    FramedCountFit fit;
    long ed = 0;
    for (std::size_t v = 0; v < d.size(); ++v) {
        ed += static_cast<long>(e[v]) * d[v];
    }
    fit.dimension = ed - euler_form_nonsym(q, d, d);
    const long degree = std::max(fit.dimension, 0L);
    const auto points = static_cast<std::size_t>(degree + 2);
    if (points > std::size(oracle_primes)) {
        throw SizeCapExceeded("interpolation degree bound exceeds the available primes");
    }
    for (std::size_t i = 0; i < points; ++i) {
        fit.primes.push_back(oracle_primes[i]);
        fit.counts.push_back(framed_stable_count_oracle(q, s, d, e, oracle_primes[i]));
    }
    Polynomial poly;
    for (std::size_t i = 0; i + 1 < points; ++i) {
        Polynomial term(Rational(fit.counts[i]));
        for (std::size_t j = 0; j + 1 < points; ++j) {
            if (j == i) {
                continue;
            }
            term *= Polynomial({Rational(-fit.primes[j]), Rational(1)});
            term *= Polynomial(Rational(1) / Rational(fit.primes[i] - fit.primes[j]));
        }
        poly += term;
    }
    if (poly(Rational(fit.primes.back())) != Rational(fit.counts.back())) {
        throw Error("framed counts do not fit a polynomial of degree <= " + std::to_string(degree));
    }
    fit.polynomial = std::move(poly);
    return fit;
}

Rational ndt_direct(const Quiver& q, const Stability& s, const DimVector& d, const DimVector& e)
{
    const auto fit = fit_framed_count(q, s, d, e);
    const Rational value = fit.polynomial(Rational(1));
    return (fit.dimension % 2 == 0) ? value : Rational(-value);
}

Integer gaussian_binomial(long n, long k, long q)
{
    if (k < 0 || k > n) {
        return 0;
    }
    if (q == 1) {
        return binomial(n, k);
    }
    Integer num = 1;
    Integer den = 1;
    for (long i = 0; i < k; ++i) {
        num *= ipow_big(q, static_cast<unsigned long>(n - i)) - 1;
        den *= ipow_big(q, static_cast<unsigned long>(i + 1)) - 1;
    }
    return num / den;
}

HomExt hom_ext_oracle(const Quiver& q, const FqRep& d, const FqRep& e)
{
    d.check(q);
    e.check(q);
    if (d.p != e.p) {
        throw Error("representations over different fields");
    }
    const int p = d.p;
    const std::size_t n = q.vertex_count();
    // phi_v is an e(v) x d(v) matrix; variables laid out vertex by vertex.
    std::vector<long> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        offset[v + 1] = offset[v] + static_cast<long>(e.dims[v]) * d.dims[v];
    }
    const auto cols = static_cast<std::size_t>(offset[n]);
    std::vector<std::vector<int>> rows;
    const auto& arrows = q.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const std::size_t t = arrows[a].tail;
        const std::size_t h = arrows[a].head;
        const int et = e.dims[t];
        const int eh = e.dims[h];
        const int dt = d.dims[t];
        const int dh = d.dims[h];
        // (E_a phi_t - phi_h D_a)[i][j]
        for (int i = 0; i < eh; ++i) {
            for (int j = 0; j < dt; ++j) {
                std::vector<int> row(cols, 0);
                for (int k = 0; k < et; ++k) {
                    const auto var = static_cast<std::size_t>(offset[t] + k * dt + j);
                    row[var] = (row[var] + e.matrices[a][static_cast<std::size_t>(i * et + k)]) % p;
                }
                for (int k = 0; k < dh; ++k) {
                    const auto var = static_cast<std::size_t>(offset[h] + i * dh + k);
                    row[var] = (row[var] - d.matrices[a][static_cast<std::size_t>(k * dt + j)] % p + p) % p;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    const long equations = static_cast<long>(rows.size());
    const long r = cols == 0 ? 0 : rank_mod(std::move(rows), p);
    return HomExt{static_cast<long>(cols) - r, equations - r};
}

FqRep random_rep(const Quiver& q, const DimVector& d, int p, std::uint64_t seed)
{
    check_prime(p);
    q.check(d);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(0, p - 1);
    FqRep rep;
    rep.p = p;
    rep.dims = d;
    for (const auto& a : q.arrows()) {
        std::vector<int> m(static_cast<std::size_t>(d[a.tail]) * static_cast<std::size_t>(d[a.head]));
        for (auto& x : m) {
            x = entry(rng);
        }
        rep.matrices.push_back(std::move(m));
    }
    return rep;
}

}  // namespace dtq
