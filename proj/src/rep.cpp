#include "cyclichall/rep.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace cyclichall {

FqRep::FqRep(CycleQuiver q, PrimeField f, DimVector d, std::vector<FqMatrix> a)
    : quiver(q), field(f), dims(std::move(d)), arrows(std::move(a)) {
    if (dims.size() != quiver.n || static_cast<int>(arrows.size()) != quiver.n)
        throw std::invalid_argument("FqRep: need one dimension and one arrow map per vertex");
    for (int v = 0; v < quiver.n; ++v) {
        const FqMatrix& m = arrows[static_cast<std::size_t>(v)];
        if (m.rows() != dims[quiver.next(v)] || m.cols() != dims[v] || m.field() != field)
            throw std::invalid_argument("FqRep: arrow map shape mismatch at vertex " + std::to_string(v));
    }
}

bool FqRep::is_nilpotent() const {
    if (dims[0] == 0) {
        // cycle composition at a vertex with non-zero space instead
        int v0 = -1;
        for (int v = 0; v < quiver.n; ++v)
            if (dims[v] > 0) v0 = v;
        if (v0 < 0) return true;
        FqMatrix c = FqMatrix::identity(field, dims[v0]);
        for (int s = 0; s < quiver.n; ++s) c = arrows[static_cast<std::size_t>(quiver.vertex(v0 + s))] * c;
        FqMatrix pw = c;
        for (int e = 1; e < total_dim(); ++e) pw = pw * c;
        return pw.is_zero();
    }
    FqMatrix c = FqMatrix::identity(field, dims[0]);
    for (int v = 0; v < quiver.n; ++v) c = arrows[static_cast<std::size_t>(v)] * c;
    FqMatrix pw = c;
    for (int e = 1; e < total_dim(); ++e) pw = pw * c;
    return pw.is_zero();
}

std::string FqRep::key() const {
    std::ostringstream os;
    os << quiver.n << '|' << field.p << '|';
    for (int v = 0; v < quiver.n; ++v) os << arrows[static_cast<std::size_t>(v)].key() << '|';
    return os.str();
}

DimVector Subrep::dims(int n) const {
    DimVector d = DimVector::zero(n);
    for (int v = 0; v < n; ++v) d[v] = bases[static_cast<std::size_t>(v)].cols();
    return d;
}

FqRep canonical_rep(const Multipartition& pi, PrimeField field) {
    const CycleQuiver& q = pi.quiver();
    auto summands = pi.summands();
    DimVector dims = dim_vector(pi);
    // basis at vertex v: (summand index, depth) with depth 0 the socle,
    // summands in multipartition order, depths ascending
    std::vector<std::vector<std::pair<int, int>>> basis(static_cast<std::size_t>(q.n));
    for (int s = 0; s < static_cast<int>(summands.size()); ++s) {
        auto [i, l] = summands[static_cast<std::size_t>(s)];
        for (int j = 0; j < l; ++j) basis[static_cast<std::size_t>(q.vertex(i - j))].emplace_back(s, j);
    }
    for (int v = 0; v < q.n; ++v)
        std::sort(basis[static_cast<std::size_t>(v)].begin(), basis[static_cast<std::size_t>(v)].end());
    auto index_of = [&](int v, int s, int j) {
        const auto& b = basis[static_cast<std::size_t>(v)];
        auto it = std::find(b.begin(), b.end(), std::make_pair(s, j));
        return static_cast<int>(it - b.begin());
    };
    std::vector<FqMatrix> arrows;
    for (int v = 0; v < q.n; ++v) {
        FqMatrix a(field, dims[q.next(v)], dims[v]);
        for (int c = 0; c < static_cast<int>(basis[static_cast<std::size_t>(v)].size()); ++c) {
            auto [s, j] = basis[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
            if (j >= 1) a.set(index_of(q.next(v), s, j - 1), c, 1);  // depth j flows to depth j-1
        }
        arrows.push_back(std::move(a));
    }
    return FqRep(q, field, std::move(dims), std::move(arrows));
}

namespace {

// coefficient matrix of the intertwiner system T_{v+1} A_v = B_v T_v;
// unknowns are the entries of the T_v, vertex-major row-major
FqMatrix intertwiner_system(const FqRep& a, const FqRep& b) {
    if (a.quiver != b.quiver || a.field != b.field)
        throw std::invalid_argument("hom: quiver or field mismatch");
    const CycleQuiver& q = a.quiver;
    const PrimeField& f = a.field;
    std::vector<int> offset(static_cast<std::size_t>(q.n + 1), 0);
    for (int v = 0; v < q.n; ++v)
        offset[static_cast<std::size_t>(v + 1)] = offset[static_cast<std::size_t>(v)] + b.dims[v] * a.dims[v];
    int unknowns = offset[static_cast<std::size_t>(q.n)];
    auto t_idx = [&](int v, int r, int c) { return offset[static_cast<std::size_t>(v)] + r * a.dims[v] + c; };

    int eqs = 0;
    for (int v = 0; v < q.n; ++v) eqs += b.dims[q.next(v)] * a.dims[v];
    FqMatrix sys(f, eqs, unknowns);
    int row = 0;
    for (int v = 0; v < q.n; ++v) {
        int w = q.next(v);
        const FqMatrix& A = a.arrows[static_cast<std::size_t>(v)];
        const FqMatrix& B = b.arrows[static_cast<std::size_t>(v)];
        for (int r = 0; r < b.dims[w]; ++r)
            for (int c = 0; c < a.dims[v]; ++c) {
                for (int k = 0; k < a.dims[w]; ++k)
                    sys.set(row, t_idx(w, r, k), f.add(sys.at(row, t_idx(w, r, k)), A.at(k, c)));
                for (int k = 0; k < b.dims[v]; ++k)
                    sys.set(row, t_idx(v, k, c), f.sub(sys.at(row, t_idx(v, k, c)), B.at(r, k)));
                ++row;
            }
    }
    return sys;
}

}  // namespace

int hom_dim(const FqRep& a, const FqRep& b) {
    int unknowns = 0;
    for (int v = 0; v < a.quiver.n; ++v) unknowns += b.dims[v] * a.dims[v];
    if (unknowns == 0) return 0;
    return unknowns - intertwiner_system(a, b).rank();
}

std::vector<std::vector<FqMatrix>> hom_basis(const FqRep& a, const FqRep& b) {
    const CycleQuiver& q = a.quiver;
    FqMatrix ns = intertwiner_system(a, b).nullspace();
    std::vector<std::vector<FqMatrix>> basis;
    for (int j = 0; j < ns.cols(); ++j) {
        std::vector<FqMatrix> t;
        int off = 0;
        for (int v = 0; v < q.n; ++v) {
            FqMatrix m(a.field, b.dims[v], a.dims[v]);
            for (int r = 0; r < b.dims[v]; ++r)
                for (int c = 0; c < a.dims[v]; ++c) m.set(r, c, ns.at(off + r * a.dims[v] + c, j));
            off += b.dims[v] * a.dims[v];
            t.push_back(std::move(m));
        }
        basis.push_back(std::move(t));
    }
    return basis;
}

namespace {

// hom matrix between indecomposables up to length D, cached per (n, D, p)
struct HomTable {
    int n, D;
    std::vector<std::vector<int>> h;  // h[idx(i,l)][idx(j,m)]
    int idx(int i, int l) const { return i * D + (l - 1); }
};

const HomTable& indec_hom_table(const CycleQuiver& q, int D, int p) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, HomTable> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_tuple(q.n, D, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    PrimeField f(p);
    std::vector<FqRep> indec;
    for (int i = 0; i < q.n; ++i)
        for (int l = 1; l <= D; ++l) indec.push_back(canonical_rep(Multipartition::indecomposable(q, i, l), f));
    HomTable t{q.n, D, {}};
    int m = q.n * D;
    t.h.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            t.h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                hom_dim(indec[static_cast<std::size_t>(r)], indec[static_cast<std::size_t>(c)]);
    return cache.emplace(key, std::move(t)).first->second;
}

// exact rational solve of a square integer system; throws on singular
std::vector<BigRational> solve_rational(std::vector<std::vector<BigRational>> m, std::vector<BigRational> rhs) {
    int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) throw std::runtime_error("classify: singular hom system (implementation bug)");
        std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(col)]);
        std::swap(rhs[static_cast<std::size_t>(sel)], rhs[static_cast<std::size_t>(col)]);
        BigRational pivot = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            BigRational fct = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / pivot;
            if (fct == 0) continue;
            for (int c = col; c < n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    fct * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            rhs[static_cast<std::size_t>(r)] -= fct * rhs[static_cast<std::size_t>(col)];
        }
    }
    std::vector<BigRational> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<std::size_t>(i)] =
            rhs[static_cast<std::size_t>(i)] / m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    return x;
}

}  // namespace

Multipartition classify(const FqRep& x) {
    if (!x.is_nilpotent()) throw std::domain_error("classify: representation is not nilpotent");
    const CycleQuiver& q = x.quiver;
    int D = x.total_dim();
    if (D == 0) return Multipartition(q);

    static std::mutex cache_mu;
    static std::unordered_map<std::string, Multipartition> cache;
    std::string key = x.key();
    {
        std::scoped_lock lock(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const HomTable& tbl = indec_hom_table(q, D, x.field.p);
    int m = q.n * D;
    std::vector<BigRational> h(static_cast<std::size_t>(m));
    for (int i = 0; i < q.n; ++i)
        for (int l = 1; l <= D; ++l)
            h[static_cast<std::size_t>(tbl.idx(i, l))] =
                hom_dim(canonical_rep(Multipartition::indecomposable(q, i, l), x.field), x);
    std::vector<std::vector<BigRational>> sys(static_cast<std::size_t>(m),
                                              std::vector<BigRational>(static_cast<std::size_t>(m)));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            sys[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                tbl.h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    std::vector<BigRational> mult = solve_rational(std::move(sys), std::move(h));

    Multipartition pi(q);
    int total = 0;
    for (int j = 0; j < q.n; ++j) {
        std::vector<int> parts;
        for (int l = 1; l <= D; ++l) {
            BigRational v = mult[static_cast<std::size_t>(tbl.idx(j, l))];
            if (boost::multiprecision::denominator(v) != 1 || v < 0)
                throw std::runtime_error("classify: hom profile has no non-negative integer solution");
            int c = static_cast<int>(boost::multiprecision::numerator(v));
            for (int r = 0; r < c; ++r) parts.push_back(l);
            total += c * l;
        }
        pi = pi.with_component(j, Partition::from_unsorted(std::move(parts)));
    }
    if (total != D) throw std::runtime_error("classify: multiplicity solution has wrong total dimension");

    std::scoped_lock lock(cache_mu);
    return cache.emplace(std::move(key), std::move(pi)).first->second;
}

FqRep base_change(const FqRep& x, const std::vector<FqMatrix>& g) {
    const CycleQuiver& q = x.quiver;
    if (static_cast<int>(g.size()) != q.n) throw std::invalid_argument("base_change: need one matrix per vertex");
    std::vector<FqMatrix> ginv;
    for (int v = 0; v < q.n; ++v) {
        if (g[static_cast<std::size_t>(v)].rows() != x.dims[v] || g[static_cast<std::size_t>(v)].cols() != x.dims[v])
            throw std::invalid_argument("base_change: size mismatch at vertex " + std::to_string(v));
        ginv.push_back(g[static_cast<std::size_t>(v)].inverse());  // throws on singular
    }
    std::vector<FqMatrix> arrows;
    for (int v = 0; v < q.n; ++v)
        arrows.push_back(g[static_cast<std::size_t>(q.next(v))] * x.arrows[static_cast<std::size_t>(v)] *
                         ginv[static_cast<std::size_t>(v)]);
    return FqRep(q, x.field, x.dims, std::move(arrows));
}

std::vector<FqMatrix> random_base_change(const FqRep& x, std::mt19937& rng) {
    std::vector<FqMatrix> g;
    std::uniform_int_distribution<int> dist(0, x.field.p - 1);
    for (int v = 0; v < x.quiver.n; ++v) {
        FqMatrix m(x.field, x.dims[v], x.dims[v]);
        do {
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m.set(r, c, dist(rng));
        } while (m.rank() != m.rows());
        g.push_back(std::move(m));
    }
    return g;
}

namespace {

// w in the column span of the echelon basis U?  Coefficients are read off
// the pivot rows, then checked.
bool in_span(const FqMatrix& U, const std::vector<int>& pivots, const FqMatrix& w) {
    FqMatrix coef(U.field(), U.cols(), 1);
    for (int t = 0; t < U.cols(); ++t) coef.set(t, 0, w.at(pivots[static_cast<std::size_t>(t)], 0));
    return U * coef == w;
}

}  // namespace

std::vector<Subrep> enumerate_submodules(const FqRep& x, const DimVector& d) {
    const CycleQuiver& q = x.quiver;
    if (!d.leq(x.dims)) throw std::invalid_argument("enumerate_submodules: d exceeds dims(x)");
    std::vector<std::vector<FqMatrix>> per_vertex;
    for (int v = 0; v < q.n; ++v) per_vertex.push_back(enumerate_subspaces(x.field, x.dims[v], d[v]));

    std::vector<Subrep> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(q.n), 0);
    while (true) {
        bool ok = true;
        for (int v = 0; v < q.n && ok; ++v) {
            const FqMatrix& U = per_vertex[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]];
            const FqMatrix& W = per_vertex[static_cast<std::size_t>(q.next(v))][pick[static_cast<std::size_t>(q.next(v))]];
            std::vector<int> wpiv;
            W.column_echelon(&wpiv);  // W is already echelon; just read pivots
            FqMatrix img = x.arrows[static_cast<std::size_t>(v)] * U;
            for (int c = 0; c < img.cols() && ok; ++c) ok = in_span(W, wpiv, img.column(c));
        }
        if (ok) {
            Subrep s;
            for (int v = 0; v < q.n; ++v) {
                std::vector<int> piv;
                FqMatrix U = per_vertex[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]].column_echelon(&piv);
                s.bases.push_back(std::move(U));
                s.pivots.push_back(std::move(piv));
            }
            out.push_back(std::move(s));
        }
        // vertex-0-major odometer
        int v = q.n - 1;
        while (v >= 0 && ++pick[static_cast<std::size_t>(v)] == per_vertex[static_cast<std::size_t>(v)].size())
            pick[static_cast<std::size_t>(v--)] = 0;
        if (v < 0) break;
    }
    return out;
}

FqRep sub_as_rep(const FqRep& x, const Subrep& u) {
    const CycleQuiver& q = x.quiver;
    DimVector d = u.dims(q.n);
    std::vector<FqMatrix> arrows;
    for (int v = 0; v < q.n; ++v) {
        int w = q.next(v);
        const FqMatrix& Uv = u.bases[static_cast<std::size_t>(v)];
        const FqMatrix& Uw = u.bases[static_cast<std::size_t>(w)];
        FqMatrix img = x.arrows[static_cast<std::size_t>(v)] * Uv;
        FqMatrix c(x.field, d[w], d[v]);
        for (int col = 0; col < img.cols(); ++col) {
            FqMatrix wcol = img.column(col);
            for (int t = 0; t < Uw.cols(); ++t)
                c.set(t, col, wcol.at(u.pivots[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)], 0));
            if (!(Uw * c.column(col) == wcol))
                throw std::domain_error("sub_as_rep: subspace tuple is not arrow-invariant");
        }
        arrows.push_back(std::move(c));
    }
    return FqRep(q, x.field, std::move(d), std::move(arrows));
}

FqRep quotient_rep(const FqRep& x, const Subrep& u) {
    const CycleQuiver& q = x.quiver;
    // complement coordinates: rows not covered by echelon pivots
    std::vector<std::vector<int>> comp(static_cast<std::size_t>(q.n));
    DimVector d = DimVector::zero(q.n);
    for (int v = 0; v < q.n; ++v) {
        std::vector<bool> is_piv(static_cast<std::size_t>(x.dims[v]), false);
        for (int r : u.pivots[static_cast<std::size_t>(v)]) is_piv[static_cast<std::size_t>(r)] = true;
        for (int r = 0; r < x.dims[v]; ++r)
            if (!is_piv[static_cast<std::size_t>(r)]) comp[static_cast<std::size_t>(v)].push_back(r);
        d[v] = static_cast<int>(comp[static_cast<std::size_t>(v)].size());
    }
    // reduce w modulo span(U): subtract the U-combination read off the pivot rows
    auto project = [&](int v, const FqMatrix& w) {
        const FqMatrix& U = u.bases[static_cast<std::size_t>(v)];
        FqMatrix coef(x.field, U.cols(), 1);
        for (int t = 0; t < U.cols(); ++t)
            coef.set(t, 0, w.at(u.pivots[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)], 0));
        return w - U * coef;
    };
    std::vector<FqMatrix> arrows;
    for (int v = 0; v < q.n; ++v) {
        int w = q.next(v);
        FqMatrix a(x.field, d[w], d[v]);
        for (int c = 0; c < d[v]; ++c) {
            FqMatrix img = project(w, x.arrows[static_cast<std::size_t>(v)].column(comp[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]));
            for (int r = 0; r < d[w]; ++r) a.set(r, c, img.at(comp[static_cast<std::size_t>(w)][static_cast<std::size_t>(r)], 0));
        }
        arrows.push_back(std::move(a));
    }
    return FqRep(q, x.field, std::move(d), std::move(arrows));
}

const std::map<Multipartition, BigInt>& hall_distribution(const Multipartition& X, const Multipartition& N, int p) {
    static std::mutex mu;
    static std::map<std::string, std::map<Multipartition, BigInt>> cache;
    std::string key = std::to_string(X.n()) + "|" + std::to_string(p) + "|" + X.to_string() + "|" + N.to_string();
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::map<Multipartition, BigInt> dist;
    FqRep rep = canonical_rep(X, PrimeField(p));
    DimVector dn = dim_vector(N);
    if (dn.leq(rep.dims)) {
        for (const Subrep& u : enumerate_submodules(rep, dn)) {
            if (classify(sub_as_rep(rep, u)) != N) continue;
            dist[classify(quotient_rep(rep, u))] += 1;
        }
    }
    std::scoped_lock lock(mu);
    return cache.emplace(std::move(key), std::move(dist)).first->second;
}

BigInt hall_number_brute(const Multipartition& X, const Multipartition& M, const Multipartition& N, int p) {
    if (!(dim_vector(M) + dim_vector(N) == dim_vector(X))) return 0;
    const auto& dist = hall_distribution(X, N, p);
    auto it = dist.find(M);
    return it == dist.end() ? BigInt(0) : it->second;
}

ExtProbe ext_probe(const Multipartition& X, const Multipartition& M, const Multipartition& N,
                   const std::vector<int>& probes) {
    if (probes.empty()) throw std::invalid_argument("ext_probe: need at least one probe prime");
    ExtProbe r;
    if (!(dim_vector(M) + dim_vector(N) == dim_vector(X))) return r;
    bool any_zero = false;
    for (int p : probes) {
        BigInt c = hall_number_brute(X, M, N, p);
        if (c > 0)
            r.exists = true;
        else
            any_zero = true;
        r.counts.emplace_back(p, std::move(c));
    }
    r.disagreement = r.exists && any_zero;
    return r;
}

bool ext_exists(const Multipartition& X, const Multipartition& M, const Multipartition& N,
                const std::vector<int>& probes) {
    return ext_probe(X, M, N, probes).exists;
}

std::vector<int> first_primes(int count) {
    std::vector<int> out;
    for (int x = 2; static_cast<int>(out.size()) < count; ++x) {
        bool prime = true;
        for (int d = 2; d * d <= x; ++d)
            if (x % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(x);
    }
    return out;
}

}  // namespace cyclichall
