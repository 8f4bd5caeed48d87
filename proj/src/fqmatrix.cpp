#include "cyclichall/fqmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace cyclichall {

int PrimeField::inv(int a) const {
    if (a % p == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
    int t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        int q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    return t < 0 ? t + p : t;
}

FqMatrix FqMatrix::identity(PrimeField f, int n) {
    FqMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::from_rows(PrimeField f, const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    FqMatrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("FqMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, f.reduce(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
    return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (field_ != o.field_ || cols_ != o.rows_) throw std::invalid_argument("FqMatrix::operator*: shape mismatch");
    FqMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.set(i, j, field_.add(r.at(i, j), field_.mul(v, o.at(k, j))));
        }
    return r;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("FqMatrix::operator+: shape mismatch");
    FqMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(r.a_[i], o.a_[i]);
    return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("FqMatrix::operator-: shape mismatch");
    FqMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(r.a_[i], o.a_[i]);
    return r;
}

bool FqMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
}

FqMatrix FqMatrix::hstack(const FqMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_) throw std::invalid_argument("FqMatrix::hstack: shape mismatch");
    FqMatrix r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
    }
    return r;
}

FqMatrix FqMatrix::column(int c) const { return columns({c}); }

FqMatrix FqMatrix::columns(const std::vector<int>& idx) const {
    FqMatrix r(field_, rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.set(i, static_cast<int>(j), at(i, idx[j]));
    return r;
}

namespace {

// in-place reduced row echelon form; returns pivot column indices
std::vector<int> rref(FqMatrix& m) {
    const PrimeField& f = m.field();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j) {
                int t = m.at(row, j);
                m.set(row, j, m.at(sel, j));
                m.set(sel, j, t);
            }
        int iv = f.inv(m.at(row, col));
        for (int j = 0; j < m.cols(); ++j) m.set(row, j, f.mul(m.at(row, j), iv));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            int c = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.set(i, j, f.sub(m.at(i, j), f.mul(c, m.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

FqMatrix transpose(const FqMatrix& m) {
    FqMatrix t(m.field(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.set(j, i, m.at(i, j));
    return t;
}

}  // namespace

int FqMatrix::rank() const {
    FqMatrix m = *this;
    return static_cast<int>(rref(m).size());
}

FqMatrix FqMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("FqMatrix::inverse: not square");
    FqMatrix aug = hstack(identity(field_, rows_));
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) != rows_) throw std::domain_error("FqMatrix::inverse: singular matrix");
    std::vector<int> idx(static_cast<std::size_t>(rows_));
    for (int j = 0; j < rows_; ++j) idx[static_cast<std::size_t>(j)] = cols_ + j;
    return aug.columns(idx);
}

FqMatrix FqMatrix::nullspace() const {
    FqMatrix m = *this;
    std::vector<int> piv = rref(m);
    std::vector<bool> is_piv(static_cast<std::size_t>(cols_), false);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
    std::vector<int> free;
    for (int c = 0; c < cols_; ++c)
        if (!is_piv[static_cast<std::size_t>(c)]) free.push_back(c);
    FqMatrix ns(field_, cols_, static_cast<int>(free.size()));
    for (std::size_t j = 0; j < free.size(); ++j) {
        ns.set(free[j], static_cast<int>(j), 1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            ns.set(piv[r], static_cast<int>(j), field_.neg(m.at(static_cast<int>(r), free[j])));
    }
    return ns;
}

FqMatrix FqMatrix::solve(const FqMatrix& b) const {
    if (b.rows_ != rows_) throw std::invalid_argument("FqMatrix::solve: shape mismatch");
    FqMatrix aug = hstack(b);
    std::vector<int> piv = rref(aug);
    for (int c : piv)
        if (c >= cols_) throw std::domain_error("FqMatrix::solve: inconsistent system");
    FqMatrix x(field_, cols_, b.cols_);
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < b.cols_; ++j) x.set(piv[r], j, aug.at(static_cast<int>(r), cols_ + j));
    return x;
}

FqMatrix FqMatrix::column_echelon(std::vector<int>* pivot_rows) const {
    FqMatrix t = transpose(*this);
    std::vector<int> piv = rref(t);
    FqMatrix e = transpose(t);
    std::vector<int> keep;
    for (int j = 0; j < static_cast<int>(piv.size()); ++j) keep.push_back(j);
    e = e.columns(keep);
    if (pivot_rows) *pivot_rows = piv;
    return e;
}

std::string FqMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::string FqMatrix::key() const {
    std::ostringstream os;
    os << rows_ << 'x' << cols_ << '@' << field_.p << ':';
    for (int v : a_) os << v << ',';
    return os.str();
}

std::vector<FqMatrix> enumerate_subspaces(PrimeField f, int dim, int k) {
    if (k < 0 || k > dim) throw std::invalid_argument("enumerate_subspaces: k out of range");
    std::vector<FqMatrix> out;
    std::vector<int> piv(static_cast<std::size_t>(k));
    // pivot rows r_0 < ... < r_{k-1}, lexicographic
    auto cells = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            // free slots: (row r, column t) with r > piv[t], r not a pivot
            std::vector<bool> is_piv(static_cast<std::size_t>(dim), false);
            for (int r : piv) is_piv[static_cast<std::size_t>(r)] = true;
            std::vector<std::pair<int, int>> slots;
            for (int t = 0; t < k; ++t)
                for (int r = piv[static_cast<std::size_t>(t)] + 1; r < dim; ++r)
                    if (!is_piv[static_cast<std::size_t>(r)]) slots.emplace_back(r, t);
            std::vector<int> vals(slots.size(), 0);
            while (true) {
                FqMatrix m(f, dim, k);
                for (int t = 0; t < k; ++t) m.set(piv[static_cast<std::size_t>(t)], t, 1);
                for (std::size_t s = 0; s < slots.size(); ++s) m.set(slots[s].first, slots[s].second, vals[s]);
                out.push_back(std::move(m));
                std::size_t carry = 0;
                while (carry < vals.size() && ++vals[carry] == f.p) vals[carry++] = 0;
                if (carry == vals.size()) break;
            }
            return;
        }
        for (int r = start; r < dim - (k - pos - 1); ++r) {
            piv[static_cast<std::size_t>(pos)] = r;
            self(self, pos + 1, r + 1);
        }
    };
    if (k == 0) {
        out.emplace_back(f, dim, 0);
        return out;
    }
    cells(cells, 0, 0);
    return out;
}

}  // namespace cyclichall
