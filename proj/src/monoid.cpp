#include "cyclichall/monoid.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace cyclichall {

namespace {

// hom dimensions between indecomposables are field-independent; evaluate
// once over F_2 and cache
int hom_indec(const CycleQuiver& q, int i, int l, int j, int m) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int, int>, int> cache;
    auto key = std::make_tuple(q.n, i, l, j, m);
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PrimeField f(2);
    int h = hom_dim(canonical_rep(Multipartition::indecomposable(q, i, l), f),
                    canonical_rep(Multipartition::indecomposable(q, j, m), f));
    std::scoped_lock lock(mu);
    return cache.emplace(key, h).first->second;
}

}  // namespace

int hom_dim_classes(const Multipartition& a, const Multipartition& b) {
    if (a.quiver() != b.quiver()) throw std::invalid_argument("hom_dim_classes: quiver mismatch");
    int h = 0;
    for (auto [i, l] : a.summands())
        for (auto [j, m] : b.summands()) h += hom_indec(a.quiver(), i, l, j, m);
    return h;
}

bool deg_leq(const Multipartition& M, const Multipartition& N) {
    if (M.quiver() != N.quiver()) throw std::invalid_argument("deg_leq: quiver mismatch");
    if (!(dim_vector(M) == dim_vector(N))) return false;
    const CycleQuiver& q = M.quiver();
    int D = M.total();
    for (int i = 0; i < q.n; ++i)
        for (int l = 1; l <= D; ++l) {
            Multipartition I = Multipartition::indecomposable(q, i, l);
            if (hom_dim_classes(I, M) > hom_dim_classes(I, N)) return false;
        }
    return true;
}

int end_dim(const Multipartition& m) { return hom_dim_classes(m, m); }

int orbit_dim(const Multipartition& m) {
    int s = 0;
    for (int d : dim_vector(m).entries) s += d * d;
    return s - end_dim(m);
}

Multipartition generic_extension(const Multipartition& M, const Multipartition& N) {
    if (M.quiver() != N.quiver()) throw std::invalid_argument("generic_extension: quiver mismatch");
    const CycleQuiver& q = M.quiver();
    DimVector d = dim_vector(M) + dim_vector(N);
    const Multipartition* best = nullptr;
    int best_orbit = -1;
    bool tie = false;
    std::vector<Multipartition> classes = enumerate_classes(q, d);
    for (const Multipartition& X : classes) {
        if (!ext_exists(X, M, N)) continue;
        int o = orbit_dim(X);
        if (o > best_orbit) {
            best_orbit = o;
            best = &X;
            tie = false;
        } else if (o == best_orbit) {
            tie = true;
        }
    }
    if (!best) throw std::runtime_error("generic_extension: no extension found (split class missing?)");
    if (tie) throw std::runtime_error("generic_extension: tie at maximal orbit dimension for " + M.to_string() +
                                      " * " + N.to_string());
    return *best;
}

IsoClassSet eval_word(const CycleQuiver& q, const Word& w) {
    IsoClassSet s{DimVector::zero(q.n), {Multipartition(q)}};
    for (const Letter& l : w) {
        Multipartition N = Multipartition::semisimple(q, l);
        IsoClassSet next{s.grade + dim_vector(N), {}};
        for (const Multipartition& X : enumerate_classes(q, next.grade))
            for (const Multipartition& M : s.members)
                if (ext_exists(X, M, N)) {
                    next.members.insert(X);
                    break;
                }
        s = std::move(next);
    }
    return s;
}

IsoClassSet iso_classes(const MonoidElement& a) {
    const CycleQuiver& q = a.generator.quiver();
    IsoClassSet s{dim_vector(a.generator), {}};
    for (const Multipartition& Y : enumerate_classes(q, s.grade))
        if (deg_leq(a.generator, Y)) s.members.insert(Y);
    return s;
}

HallElement psi(const MonoidElement& a) {
    IsoClassSet s = iso_classes(a);
    HallElement e(a.generator.quiver(), s.grade);
    for (const Multipartition& m : s.members) e.add_term(m, 1);
    return e;
}

Multipartition word_generator(const CycleQuiver& q, const Word& w) {
    Multipartition g(q);
    for (const Letter& l : w) g = generic_extension(g, Multipartition::semisimple(q, l));
    return g;
}

}  // namespace cyclichall
