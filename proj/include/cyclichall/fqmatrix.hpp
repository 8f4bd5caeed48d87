#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclichall {

// Arithmetic in Z/p for a prime p. Elements are ints in [0, p).
struct PrimeField {
    int p = 2;

    explicit PrimeField(int p_) : p(p_) {
        if (p < 2) throw std::invalid_argument("PrimeField: p must be >= 2");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("PrimeField: p must be prime");
    }
    int reduce(long long x) const {
        long long r = x % p;
        return static_cast<int>(r < 0 ? r + p : r);
    }
    int add(int a, int b) const { return (a + b) % p; }
    int sub(int a, int b) const { return (a - b + p) % p; }
    int mul(int a, int b) const { return static_cast<int>(static_cast<long long>(a) * b % p); }
    int neg(int a) const { return a == 0 ? 0 : p - a; }
    int inv(int a) const;  // extended Euclid; throws on 0

    friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

// Dense matrix over a prime field, row-major.
class FqMatrix {
public:
    FqMatrix() : field_(2) {}
    FqMatrix(PrimeField f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("FqMatrix: negative shape");
    }
    static FqMatrix identity(PrimeField f, int n);
    static FqMatrix from_rows(PrimeField f, const std::vector<std::vector<int>>& rows);

    const PrimeField& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) { a_[static_cast<std::size_t>(r) * cols_ + c] = field_.reduce(v); }

    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix operator+(const FqMatrix& o) const;
    FqMatrix operator-(const FqMatrix& o) const;
    bool is_zero() const;

    FqMatrix hstack(const FqMatrix& o) const;
    FqMatrix column(int c) const;
    FqMatrix columns(const std::vector<int>& idx) const;

    int rank() const;
    FqMatrix inverse() const;  // throws on singular
    // basis of { x : Ax = 0 } as columns
    FqMatrix nullspace() const;
    // solve A x = b for a single column b; throws if inconsistent
    FqMatrix solve(const FqMatrix& b) const;

    // Reduced column echelon form of the column span: pivot rows strictly
    // increasing left to right, pivot entries 1, pivot rows clear elsewhere,
    // zeros above each pivot. Unique per subspace.
    FqMatrix column_echelon(std::vector<int>* pivot_rows = nullptr) const;

    std::string to_string() const;  // bracketed row-major debug form
    std::string key() const;        // compact cache key

    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

private:
    PrimeField field_;
    int rows_ = 0, cols_ = 0;
    std::vector<int> a_;
};

// All column-echelon representatives of k-dimensional subspaces of F_p^dim,
// grouped by Grassmannian cell (pivot set in lexicographic order, then free
// entries in odometer order). Deterministic.
std::vector<FqMatrix> enumerate_subspaces(PrimeField f, int dim, int k);

}  // namespace cyclichall
