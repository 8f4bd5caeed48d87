#include "cyclichall/verify.hpp"

#include <random>

#include "cyclichall/closed_form.hpp"
#include "cyclichall/parallel.hpp"

namespace cyclichall {

using json = nlohmann::ordered_json;

json Report::to_json() const {
    json j;
    j["check"] = check;
    j["instances"] = instances;
    j["failures"] = json::array();
    for (const auto& f : failures) j["failures"].push_back(f);
    return j;
}

void Report::merge(const Report& other) {
    instances += other.instances;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::vector<Multipartition> classes_up_to(const CycleQuiver& q, int bound) {
    std::vector<Multipartition> out;
    // grades in (total, lex) order, classes in the documented order inside
    std::vector<DimVector> grades;
    DimVector d = DimVector::zero(q.n);
    auto rec = [&](auto&& self, int v, int rest) -> void {
        if (v == q.n) {
            grades.push_back(d);
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            d[v] = e;
            self(self, v + 1, rest - e);
        }
        d[v] = 0;
    };
    for (int total = 0; total <= bound; ++total) {
        grades.clear();
        rec(rec, 0, total);
        for (auto& g : grades)
            if (g.total() == total)
                for (auto& m : enumerate_classes(q, g)) out.push_back(std::move(m));
    }
    return out;
}

std::vector<Word> words_up_to(const CycleQuiver& q, int bound) {
    std::vector<Letter> letters;
    Letter l(static_cast<std::size_t>(q.n), 0);
    auto gen = [&](auto&& self, int v, int rest) -> void {
        if (v == q.n) {
            int s = 0;
            for (int x : l) s += x;
            if (s >= 1) letters.push_back(l);
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            l[static_cast<std::size_t>(v)] = e;
            self(self, v + 1, rest - e);
        }
        l[static_cast<std::size_t>(v)] = 0;
    };
    gen(gen, 0, bound);

    std::vector<Word> out;
    Word w;
    auto grow = [&](auto&& self, int budget) -> void {
        out.push_back(w);
        for (const Letter& cand : letters) {
            int s = 0;
            for (int x : cand) s += x;
            if (s > budget) continue;
            w.push_back(cand);
            self(self, budget - s);
            w.pop_back();
        }
    };
    grow(grow, bound);
    return out;
}

std::vector<Word> simple_words_up_to(const CycleQuiver& q, int max_len) {
    std::vector<Letter> letters;
    for (int i = 0; i < q.n; ++i) {
        Letter l(static_cast<std::size_t>(q.n), 0);
        l[static_cast<std::size_t>(i)] = 1;
        letters.push_back(std::move(l));
    }
    std::vector<Word> out;
    Word w;
    auto grow = [&](auto&& self) -> void {
        if (!w.empty()) out.push_back(w);
        if (static_cast<int>(w.size()) == max_len) return;
        for (const Letter& cand : letters) {
            w.push_back(cand);
            self(self);
            w.pop_back();
        }
    };
    grow(grow);
    return out;
}

namespace {

template <typename Item, typename Fn>
Report sweep(std::string check, const std::vector<Item>& items, int jobs, Fn&& fn) {
    std::vector<Report> parts(items.size());
    parallel_for(items.size(), jobs, [&](std::size_t i) {
        parts[i].check = check;
        try {
            fn(items[i], parts[i]);
        } catch (const std::exception& e) {
            parts[i].failures.push_back(json{{"error", e.what()}});
        }
    });
    Report r;
    r.check = std::move(check);
    for (const auto& p : parts) r.merge(p);
    return r;
}

json witness(std::initializer_list<std::pair<const char*, std::string>> fields) {
    json j;
    for (const auto& [k, v] : fields) j[k] = v;
    return j;
}

}  // namespace

Report verify_corollary2(const CycleQuiver& q, int dim_bound, const std::vector<int>& primes, int jobs) {
    // every insertion (pi, a, k), the split case (l = 1) included, with
    // dim(rho) <= dim_bound
    struct Instance {
        Multipartition pi, rho;
        int a, k, l;
    };
    std::vector<Instance> items;
    for (const Multipartition& pi : classes_up_to(q, dim_bound - 1))
        for (int a = 0; a < q.n; ++a) {
            int src = q.prev(a);
            for (int k = 1; k <= pi.component(src).num_parts(); ++k) {
                Multipartition rho = insert_pi(pi, a, k);
                items.push_back({pi, rho, a, k, pi.component(src).part(k) + 1});
            }
            // split extension: new part of length 1, virtual position m+1
            Multipartition rho = pi.direct_sum(Multipartition::indecomposable(q, a, 1));
            items.push_back({pi, rho, a, pi.component(src).num_parts() + 1, 1});
        }

    return sweep("corollary2", items, jobs, [&](const Instance& it, Report& r) {
        IntPolynomial f = closed_form_simple_l(it.rho, it.a, it.l);
        Multipartition S = Multipartition::indecomposable(q, it.a, 1);
        for (int p : primes) {
            ++r.instances;
            BigInt brute = hall_number_brute(it.rho, it.pi, S, p);
            if (f(p) != brute)
                r.failures.push_back(witness({{"rho", it.rho.to_string()},
                                              {"pi", it.pi.to_string()},
                                              {"a", std::to_string(it.a)},
                                              {"k", std::to_string(it.k)},
                                              {"poly", f.to_string()},
                                              {"p", std::to_string(p)},
                                              {"brute", brute.str()}}));
        }
        // the (rho, a, k) entry point must agree whenever it is unambiguous
        auto reversals = reverse_insertions(it.rho, it.a, it.k);
        bool unique = true;
        for (std::size_t i = 1; i < reversals.size(); ++i)
            if (reversals[i].first != reversals[0].first) unique = false;
        if (unique && closed_form_simple(it.rho, it.a, it.k) != f)
            r.failures.push_back(witness({{"rho", it.rho.to_string()},
                                          {"k", std::to_string(it.k)},
                                          {"error", "closed_form_simple disagrees with the l-based form"}}));
    });
}

Report verify_dichotomy(const CycleQuiver& q, int dim_bound, const std::vector<int>& primes, int jobs) {
    struct Instance {
        Multipartition X;
        std::vector<int> nvec;
    };
    std::vector<Instance> items;
    for (const Multipartition& X : classes_up_to(q, dim_bound)) {
        std::vector<int> nvec(static_cast<std::size_t>(q.n), 0);
        auto rec = [&](auto&& self, int v) -> void {
            if (v == q.n) {
                items.push_back({X, nvec});
                return;
            }
            for (int a = 0; a <= X.component(v).num_parts(); ++a) {
                nvec[static_cast<std::size_t>(v)] = a;
                self(self, v + 1);
            }
        };
        rec(rec, 0);
    }

    return sweep("dichotomy", items, jobs, [&](const Instance& it, Report& r) {
        Multipartition Q = q_semisimple(it.X, it.nvec);
        Multipartition N = Multipartition::semisimple(q, it.nvec);
        DimVector dm = dim_vector(it.X) - dim_vector(N);
        for (const Multipartition& M : enumerate_classes(q, dm)) {
            for (int p : primes) {
                ++r.instances;
                BigInt c = hall_number_brute(it.X, M, N, p) % p;
                bool is_q = M == Q;
                if (!((c == 0 && !is_q) || (c == 1 && is_q)))
                    r.failures.push_back(witness({{"X", it.X.to_string()},
                                                  {"N", N.to_string()},
                                                  {"M", M.to_string()},
                                                  {"p", std::to_string(p)},
                                                  {"residue", c.str()},
                                                  {"Q", Q.to_string()}}));
            }
        }
    });
}

Report verify_theorem7(const CycleQuiver& q, int dim_bound, const std::vector<int>& primes, int jobs) {
    std::vector<Word> words = words_up_to(q, dim_bound);
    return sweep("theorem7", words, jobs, [&](const Word& w, Report& r) {
        ++r.instances;
        auto ctm = constant_term_mod(q, w, primes);
        IsoClassSet ew = eval_word(q, w);
        for (const auto& [X, res] : ctm) {
            bool in_monoid = ew.members.contains(X);
            bool match = (res == ModResidue::One && in_monoid) || (res == ModResidue::Zero && !in_monoid);
            if (!match)
                r.failures.push_back(witness(
                    {{"word", word_to_string(w)},
                     {"class", X.to_string()},
                     {"mod_q", res == ModResidue::One ? "1" : (res == ModResidue::Zero ? "0" : "inconsistent")},
                     {"in_monoid", in_monoid ? "true" : "false"}}));
        }
        // single-generator representation: [A_w] must be the degeneration
        // set of the folded generic extension
        Multipartition g = word_generator(q, w);
        IsoClassSet closure = iso_classes(MonoidElement{g});
        if (!(closure == ew))
            throw std::runtime_error("single-generator cross-check failed for word " + word_to_string(w) +
                                     " with generator " + g.to_string());
    });
}

Report verify_degeneration(const CycleQuiver& q, int dim_bound, int samples, unsigned seed, int jobs) {
    // corollary: every quotient by a semisimple degenerates to Q(X,N)
    struct Instance {
        Multipartition X;
        std::vector<int> nvec;
    };
    std::vector<Instance> items;
    for (const Multipartition& X : classes_up_to(q, dim_bound)) {
        std::vector<int> nvec(static_cast<std::size_t>(q.n), 0);
        auto rec = [&](auto&& self, int v) -> void {
            if (v == q.n) {
                items.push_back({X, nvec});
                return;
            }
            for (int a = 0; a <= X.component(v).num_parts(); ++a) {
                nvec[static_cast<std::size_t>(v)] = a;
                self(self, v + 1);
            }
        };
        rec(rec, 0);
    }
    Report r = sweep("degeneration", items, jobs, [&](const Instance& it, Report& rr) {
        Multipartition Q = q_semisimple(it.X, it.nvec);
        Multipartition N = Multipartition::semisimple(q, it.nvec);
        DimVector dm = dim_vector(it.X) - dim_vector(N);
        for (const Multipartition& M : enumerate_classes(q, dm)) {
            if (!ext_exists(it.X, M, N)) continue;
            ++rr.instances;
            if (!deg_leq(M, Q))
                rr.failures.push_back(witness({{"X", it.X.to_string()},
                                               {"N", N.to_string()},
                                               {"M", M.to_string()},
                                               {"Q", Q.to_string()},
                                               {"error", "M does not degenerate to Q(X,N)"}}));
        }
    });

    // sampled check: M/h(S) <=deg M/gh(S) for random h, g over F_2
    PrimeField f2(2);
    std::mt19937 rng(seed);
    std::vector<Multipartition> pool;
    for (const Multipartition& m : classes_up_to(q, dim_bound))
        if (m.total() >= 1) pool.push_back(m);

    auto line_subrep = [&](const FqRep& rep, int vertex, const FqMatrix& vec) {
        Subrep u;
        for (int v = 0; v < q.n; ++v) {
            FqMatrix span = v == vertex ? vec : FqMatrix(f2, rep.dims[v], 0);
            std::vector<int> piv;
            u.bases.push_back(span.column_echelon(&piv));
            u.pivots.push_back(std::move(piv));
        }
        return u;
    };

    int done = 0;
    while (done < samples) {
        const Multipartition& M = pool[rng() % pool.size()];
        std::vector<int> socle;
        for (int v = 0; v < q.n; ++v)
            if (M.component(v).num_parts() > 0) socle.push_back(v);
        int i = socle[rng() % socle.size()];
        FqRep rep = canonical_rep(M, f2);
        FqRep s = canonical_rep(Multipartition::indecomposable(q, i, 1), f2);
        auto hb = hom_basis(s, rep);
        auto eb = hom_basis(rep, rep);

        auto combine = [&](const std::vector<std::vector<FqMatrix>>& basis) {
            std::vector<FqMatrix> t;
            for (int v = 0; v < q.n; ++v) t.push_back(FqMatrix(f2, basis[0][static_cast<std::size_t>(v)].rows(),
                                                               basis[0][static_cast<std::size_t>(v)].cols()));
            for (const auto& b : basis)
                if (rng() % 2)
                    for (int v = 0; v < q.n; ++v) t[static_cast<std::size_t>(v)] = t[static_cast<std::size_t>(v)] + b[static_cast<std::size_t>(v)];
            return t;
        };

        FqMatrix h(f2, rep.dims[i], 1);
        for (int tries = 0; tries < 50 && h.is_zero(); ++tries) h = combine(hb)[static_cast<std::size_t>(i)];
        if (h.is_zero()) continue;
        FqMatrix gh(f2, rep.dims[i], 1);
        for (int tries = 0; tries < 50 && gh.is_zero(); ++tries) {
            auto g = combine(eb);
            gh = g[static_cast<std::size_t>(i)] * h;
        }
        if (gh.is_zero()) continue;

        ++done;
        ++r.instances;
        Multipartition a = classify(quotient_rep(rep, line_subrep(rep, i, h)));
        Multipartition b = classify(quotient_rep(rep, line_subrep(rep, i, gh)));
        if (!deg_leq(a, b))
            r.failures.push_back(witness({{"M", M.to_string()},
                                          {"vertex", std::to_string(i)},
                                          {"M/h", a.to_string()},
                                          {"M/gh", b.to_string()},
                                          {"error", "M/h(S) does not degenerate to M/gh(S)"}}));
    }
    return r;
}

Report verify_psi(const CycleQuiver& q, int dim_bound, const std::vector<int>& primes, int jobs) {
    Report r;
    r.check = "psi";

    // unitriangularity: coefficient 1 at the generator, support exactly the
    // up-set in the degeneration order
    std::vector<Multipartition> classes = classes_up_to(q, dim_bound);
    Report uni = sweep("psi", classes, jobs, [&](const Multipartition& X, Report& rr) {
        ++rr.instances;
        HallElement e = psi(MonoidElement{X});
        bool ok = e.coeff(X) == 1;
        for (const auto& [Y, c] : e.terms()) ok = ok && c == 1 && deg_leq(X, Y);
        for (const Multipartition& Y : enumerate_classes(q, dim_vector(X)))
            if (deg_leq(X, Y) && e.coeff(Y) != 1) ok = false;
        if (!ok)
            rr.failures.push_back(witness({{"X", X.to_string()}, {"error", "psi support is not the up-set of X"}}));
    });
    r.merge(uni);

    // graded dimensions and injectivity: one orbit closure per class, with
    // pairwise distinct indicator vectors
    std::map<std::string, std::vector<HallElement>> by_grade;
    for (const Multipartition& X : classes) by_grade[dim_vector(X).to_string()].push_back(psi(MonoidElement{X}));
    for (const auto& [grade, elems] : by_grade) {
        ++r.instances;
        bool distinct = true;
        for (std::size_t i = 0; i < elems.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < elems.size() && distinct; ++j)
                if (elems[i] == elems[j]) distinct = false;
        if (!distinct)
            r.failures.push_back(witness({{"grade", grade}, {"error", "psi is not injective on orbit closures"}}));
    }

    // homomorphism on simple-only words (the composition-monoid restriction)
    std::vector<Word> words = simple_words_up_to(q, std::min(dim_bound, 4));
    Report hom = sweep("psi", words, jobs, [&](const Word& w, Report& rr) {
        ++rr.instances;
        Multipartition g = word_generator(q, w);
        HallElement img = psi(MonoidElement{g});
        auto ctm = constant_term_mod(q, w, primes);
        IsoClassSet ew = eval_word(q, w);
        for (const auto& [X, res] : ctm) {
            bool in_img = img.coeff(X) == 1;
            bool expected = res == ModResidue::One;
            if (in_img != expected || res == ModResidue::Inconsistent || ew.members.contains(X) != in_img) {
                rr.failures.push_back(witness({{"word", word_to_string(w)},
                                               {"class", X.to_string()},
                                               {"error", "psi(A_w) disagrees with u_w mod q"}}));
            }
        }
    });
    r.merge(hom);
    return r;
}

}  // namespace cyclichall
