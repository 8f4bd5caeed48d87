#pragma once

#include <nlohmann/json.hpp>

#include "cyclichall/monoid.hpp"

namespace cyclichall {

struct Report {
    std::string check;
    long long instances = 0;
    std::vector<nlohmann::ordered_json> failures;

    bool ok() const { return failures.empty(); }
    nlohmann::ordered_json to_json() const;
    void merge(const Report& other);
};

// all classes with total dimension in [0, bound], deterministic order
std::vector<Multipartition> classes_up_to(const CycleQuiver& q, int bound);
// all words of non-zero semisimple letters with total dimension <= bound,
// empty word included, deterministic order
std::vector<Word> words_up_to(const CycleQuiver& q, int bound);
// restriction to single-simple letters, non-empty, length <= max_len
std::vector<Word> simple_words_up_to(const CycleQuiver& q, int max_len);

// closed-form Hall numbers for simple extensions vs brute force
Report verify_corollary2(const CycleQuiver& q, int dim_bound, const std::vector<int>& primes = {2, 3, 5},
                         int jobs = 1);
// mod-p dichotomy of Hall numbers with a semisimple submodule
Report verify_dichotomy(const CycleQuiver& q, int dim_bound, const std::vector<int>& primes = {2, 3},
                        int jobs = 1);
// word monomials mod q vs the monoid word evaluation, plus the
// single-generator cross-check (a cross-check failure aborts)
Report verify_theorem7(const CycleQuiver& q, int dim_bound, const std::vector<int>& primes = {2, 3},
                       int jobs = 1);
// exhaustive quotient degenerations and sampled endomorphism degenerations
Report verify_degeneration(const CycleQuiver& q, int dim_bound, int samples = 200, unsigned seed = 12345,
                           int jobs = 1);
// unitriangularity, graded dimensions, injectivity, and the restriction to
// simple-only words
Report verify_psi(const CycleQuiver& q, int dim_bound, const std::vector<int>& primes = {2, 3}, int jobs = 1);

}  // namespace cyclichall
