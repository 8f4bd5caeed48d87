#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclichall {

// Oriented cycle with n vertices and one arrow i -> i+1 (mod n).
// n = 1 is the loop (Jordan) quiver.
struct CycleQuiver {
    int n = 1;

    explicit CycleQuiver(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("CycleQuiver: n must be >= 1");
    }
    int next(int v) const { return (v + 1) % n; }
    int prev(int v) const { return (v + n - 1) % n; }
    // reduce an arbitrary integer to a vertex index
    int vertex(int v) const { return ((v % n) + n) % n; }

    friend bool operator==(const CycleQuiver&, const CycleQuiver&) = default;
};

// Weakly decreasing sequence of positive parts; the empty partition is zero.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    // sorts descending and drops zero parts
    static Partition from_unsorted(std::vector<int> parts);

    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int k) const {  // 1-based
        if (k < 1 || k > num_parts()) throw std::out_of_range("Partition::part");
        return parts_[static_cast<std::size_t>(k - 1)];
    }
    int total() const;
    const std::vector<int>& parts() const { return parts_; }

    // p(k): delete the k-th part (1-based)
    Partition removed(int k) const;
    // parts at 1-based positions [lo, hi], clipped to the actual range
    Partition slice(int lo, int hi) const;
    // subtract one from every part, dropping parts that become zero
    Partition decremented() const;
    // multiset union, re-sorted
    Partition merged(const Partition& other) const;
    Partition with_part(int part) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
};

// n non-negative integers, one per vertex.
struct DimVector {
    std::vector<int> entries;

    DimVector() = default;
    explicit DimVector(std::vector<int> e) : entries(std::move(e)) {}
    static DimVector zero(int n) { return DimVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int size() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return entries[static_cast<std::size_t>(i)]; }
    int total() const;

    DimVector operator+(const DimVector& o) const;
    DimVector operator-(const DimVector& o) const;
    bool leq(const DimVector& o) const;  // entrywise

    friend bool operator==(const DimVector&, const DimVector&) = default;
    std::string to_string() const;
};

// n-tuple of partitions; component i lists lengths of indecomposable
// summands S_i[l] with socle S_i. Canonical name of an isomorphism class.
class Multipartition {
public:
    explicit Multipartition(CycleQuiver q) : quiver_(q), comps_(static_cast<std::size_t>(q.n)) {}
    Multipartition(CycleQuiver q, std::vector<Partition> comps) : quiver_(q), comps_(std::move(comps)) {
        if (static_cast<int>(comps_.size()) != q.n)
            throw std::invalid_argument("Multipartition: wrong number of components");
    }
    // the indecomposable S_i[l]
    static Multipartition indecomposable(CycleQuiver q, int socle_vertex, int length);
    // a_i parts equal to 1 at component i
    static Multipartition semisimple(CycleQuiver q, const std::vector<int>& mults);

    const CycleQuiver& quiver() const { return quiver_; }
    int n() const { return quiver_.n; }
    const Partition& component(int i) const { return comps_[static_cast<std::size_t>(i)]; }
    const std::vector<Partition>& components() const { return comps_; }
    Multipartition with_component(int i, Partition p) const;

    int total() const;  // sum of all parts = module length
    bool is_zero() const { return total() == 0; }
    // direct sum: componentwise multiset union
    Multipartition direct_sum(const Multipartition& other) const;

    // list of (socle vertex, length) summands, one entry per part
    std::vector<std::pair<int, int>> summands() const;

    // text form ((3,1),(2),())
    std::string to_string() const;
    static Multipartition parse(CycleQuiver q, const std::string& text);

    friend bool operator==(const Multipartition&, const Multipartition&) = default;
    // deterministic total order used everywhere classes are listed
    friend std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b);

private:
    CycleQuiver quiver_;
    std::vector<Partition> comps_;
};

// A letter is a non-zero vector of n multiplicities (a semisimple class);
// a word is a finite sequence of letters.
using Letter = std::vector<int>;
using Word = std::vector<Letter>;

DimVector letter_dim(const CycleQuiver& q, const Letter& l);
DimVector word_dim(const CycleQuiver& q, const Word& w);
std::string word_to_string(const Word& w);
Word parse_word(const CycleQuiver& q, const std::string& text);  // "1,0;0,1"

// ---- operations ----

// S_i[l] is supported on vertices i, i-1, ..., i-l+1 (socle at i).
DimVector dim_vector(const Multipartition& m);

// pi_{a,k}: delete the k-th part of pi^(a-1) and push the incremented part
// into pi^(a). 1-based k; throws if k is out of range.
Multipartition insert_pi(const Multipartition& pi, int a, int k);

// Q(X,k) for X = S_i[p]: S_{i-1}[p_{1..k} - 1] (+) S_i[p_{k+1..m}].
Multipartition q_single(const CycleQuiver& q, int i, const Partition& p, int k);

// Q(X,N) for semisimple N with multiplicities nvec: direct sum of the
// per-component quotients. Throws if some a_i exceeds the socle multiplicity.
Multipartition q_semisimple(const Multipartition& x, const std::vector<int>& nvec);

// All classes with the given dimension vector, each exactly once, in the
// documented deterministic order (componentwise, larger partitions first).
std::vector<Multipartition> enumerate_classes(const CycleQuiver& q, const DimVector& d);

// all partitions of s, descending-lex order: (s), (s-1,1), ..., (1,...,1)
std::vector<Partition> partitions_of(int s);

}  // namespace cyclichall
