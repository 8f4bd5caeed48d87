#include "cyclichall/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cyclichall {

// ---- Partition ----

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("Partition: negative part");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    Partition r;
    r.parts_ = std::move(parts);
    return r;
}

int Partition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::removed(int k) const {
    if (k < 1 || k > num_parts()) throw std::out_of_range("Partition::removed: index out of range");
    std::vector<int> p = parts_;
    p.erase(p.begin() + (k - 1));
    Partition r;
    r.parts_ = std::move(p);
    return r;
}

Partition Partition::slice(int lo, int hi) const {
    std::vector<int> p;
    for (int k = std::max(lo, 1); k <= std::min(hi, num_parts()); ++k)
        p.push_back(parts_[static_cast<std::size_t>(k - 1)]);
    Partition r;
    r.parts_ = std::move(p);
    return r;
}

Partition Partition::decremented() const {
    std::vector<int> p;
    for (int x : parts_)
        if (x > 1) p.push_back(x - 1);
    Partition r;
    r.parts_ = std::move(p);
    return r;
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), other.parts_.begin(), other.parts_.end());
    return from_unsorted(std::move(p));
}

Partition Partition::with_part(int part) const {
    if (part <= 0) throw std::invalid_argument("Partition::with_part: part must be positive");
    std::vector<int> p = parts_;
    p.push_back(part);
    return from_unsorted(std::move(p));
}

// Larger partitions first: compare parts elementwise (missing part = 0),
// the partition with the larger part at the first difference comes first.
// The empty partition is last. Gives (2) < (1,1) for n = 1.
std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    std::size_t m = std::max(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < m; ++i) {
        int pa = i < a.parts_.size() ? a.parts_[i] : 0;
        int pb = i < b.parts_.size() ? b.parts_[i] : 0;
        if (pa != pb) return pa > pb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// ---- DimVector ----

int DimVector::total() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

DimVector DimVector::operator+(const DimVector& o) const {
    if (entries.size() != o.entries.size()) throw std::invalid_argument("DimVector: size mismatch");
    DimVector r = *this;
    for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] += o.entries[i];
    return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
    if (entries.size() != o.entries.size()) throw std::invalid_argument("DimVector: size mismatch");
    DimVector r = *this;
    for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] -= o.entries[i];
    return r;
}

bool DimVector::leq(const DimVector& o) const {
    if (entries.size() != o.entries.size()) throw std::invalid_argument("DimVector: size mismatch");
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] > o.entries[i]) return false;
    return true;
}

std::string DimVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ',';
        os << entries[i];
    }
    os << ')';
    return os.str();
}

// ---- Multipartition ----

Multipartition Multipartition::indecomposable(CycleQuiver q, int socle_vertex, int length) {
    if (length < 1) throw std::invalid_argument("indecomposable: length must be >= 1");
    Multipartition m(q);
    m.comps_[static_cast<std::size_t>(q.vertex(socle_vertex))] = Partition({length});
    return m;
}

Multipartition Multipartition::semisimple(CycleQuiver q, const std::vector<int>& mults) {
    if (static_cast<int>(mults.size()) != q.n)
        throw std::invalid_argument("semisimple: wrong multiplicity count");
    Multipartition m(q);
    for (int i = 0; i < q.n; ++i) {
        if (mults[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("semisimple: negative multiplicity");
        m.comps_[static_cast<std::size_t>(i)] =
            Partition(std::vector<int>(static_cast<std::size_t>(mults[static_cast<std::size_t>(i)]), 1));
    }
    return m;
}

Multipartition Multipartition::with_component(int i, Partition p) const {
    Multipartition m = *this;
    m.comps_[static_cast<std::size_t>(quiver_.vertex(i))] = std::move(p);
    return m;
}

int Multipartition::total() const {
    int t = 0;
    for (const auto& c : comps_) t += c.total();
    return t;
}

Multipartition Multipartition::direct_sum(const Multipartition& other) const {
    if (quiver_ != other.quiver_) throw std::invalid_argument("direct_sum: quiver mismatch");
    Multipartition m = *this;
    for (int i = 0; i < quiver_.n; ++i)
        m.comps_[static_cast<std::size_t>(i)] =
            m.comps_[static_cast<std::size_t>(i)].merged(other.comps_[static_cast<std::size_t>(i)]);
    return m;
}

std::vector<std::pair<int, int>> Multipartition::summands() const {
    std::vector<std::pair<int, int>> s;
    for (int i = 0; i < quiver_.n; ++i)
        for (int l : comps_[static_cast<std::size_t>(i)].parts()) s.emplace_back(i, l);
    return s;
}

std::string Multipartition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < quiver_.n; ++i) {
        if (i) os << ',';
        os << '(';
        const auto& p = comps_[static_cast<std::size_t>(i)].parts();
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) os << ',';
            os << p[j];
        }
        os << ')';
    }
    os << ')';
    return os.str();
}

Multipartition Multipartition::parse(CycleQuiver q, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    std::size_t pos = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("Multipartition::parse: ") + why + " in '" + text + "'");
    };
    auto expect = [&](char c) {
        if (pos >= s.size() || s[pos] != c) fail("unexpected syntax");
        ++pos;
    };
    expect('(');
    std::vector<Partition> comps;
    for (int i = 0; i < q.n; ++i) {
        if (i) expect(',');
        expect('(');
        std::vector<int> parts;
        while (pos < s.size() && s[pos] != ')') {
            if (!parts.empty()) expect(',');
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected a number");
            parts.push_back(std::stoi(s.substr(start, pos - start)));
        }
        expect(')');
        try {
            comps.emplace_back(parts);
        } catch (const std::invalid_argument&) {
            fail("parts must be a weakly decreasing list of positive integers");
        }
    }
    expect(')');
    if (pos != s.size()) fail("trailing characters");
    return Multipartition(q, std::move(comps));
}

std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b) {
    if (a.quiver_.n != b.quiver_.n)
        return a.quiver_.n <=> b.quiver_.n;
    for (std::size_t i = 0; i < a.comps_.size(); ++i) {
        auto c = a.comps_[i] <=> b.comps_[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

// ---- words ----

DimVector letter_dim(const CycleQuiver& q, const Letter& l) {
    if (static_cast<int>(l.size()) != q.n) throw std::invalid_argument("letter_dim: size mismatch");
    return DimVector(l);
}

DimVector word_dim(const CycleQuiver& q, const Word& w) {
    DimVector d = DimVector::zero(q.n);
    for (const auto& l : w) d = d + letter_dim(q, l);
    return d;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < w[i].size(); ++j) {
            if (j) os << ',';
            os << w[i][j];
        }
    }
    return os.str();
}

Word parse_word(const CycleQuiver& q, const std::string& text) {
    Word w;
    if (text.empty()) return w;
    std::istringstream letters(text);
    std::string letter;
    while (std::getline(letters, letter, ';')) {
        Letter l;
        std::istringstream nums(letter);
        std::string num;
        while (std::getline(nums, num, ',')) l.push_back(std::stoi(num));
        if (static_cast<int>(l.size()) != q.n)
            throw std::invalid_argument("parse_word: letter '" + letter + "' needs " + std::to_string(q.n) +
                                        " multiplicities");
        bool zero = true;
        for (int x : l) {
            if (x < 0) throw std::invalid_argument("parse_word: negative multiplicity");
            if (x > 0) zero = false;
        }
        if (zero) throw std::invalid_argument("parse_word: empty letters are not allowed");
        w.push_back(std::move(l));
    }
    return w;
}

// ---- operations ----

DimVector dim_vector(const Multipartition& m) {
    const CycleQuiver& q = m.quiver();
    DimVector d = DimVector::zero(q.n);
    for (auto [i, l] : m.summands())
        for (int j = 0; j < l; ++j) d[q.vertex(i - j)] += 1;
    return d;
}

Multipartition insert_pi(const Multipartition& pi, int a, int k) {
    const CycleQuiver& q = pi.quiver();
    int av = q.vertex(a);
    int src = q.prev(av);
    const Partition& source = pi.component(src);
    if (k < 1 || k > source.num_parts())
        throw std::out_of_range("insert_pi: k out of range");
    int grown = source.part(k) + 1;
    if (src == av) {
        // loop quiver (or n = 1 wrap): delete and insert in the same component
        return pi.with_component(av, source.removed(k).with_part(grown));
    }
    return pi.with_component(src, source.removed(k))
        .with_component(av, pi.component(av).with_part(grown));
}

Multipartition q_single(const CycleQuiver& q, int i, const Partition& p, int k) {
    if (k < 0 || k > p.num_parts()) throw std::out_of_range("q_single: k out of range");
    int iv = q.vertex(i);
    int pv = q.prev(iv);
    Partition head = p.slice(1, k).decremented();
    Partition tail = p.slice(k + 1, p.num_parts());
    Multipartition m(q);
    if (pv == iv)
        return m.with_component(iv, head.merged(tail));
    return m.with_component(pv, head).with_component(iv, tail);
}

Multipartition q_semisimple(const Multipartition& x, const std::vector<int>& nvec) {
    const CycleQuiver& q = x.quiver();
    if (static_cast<int>(nvec.size()) != q.n)
        throw std::invalid_argument("q_semisimple: multiplicity count mismatch");
    Multipartition r(q);
    for (int i = 0; i < q.n; ++i) {
        int a = nvec[static_cast<std::size_t>(i)];
        if (a < 0 || a > x.component(i).num_parts())
            throw std::invalid_argument("q_semisimple: no embedding of the semisimple into the socle");
        r = r.direct_sum(q_single(q, i, x.component(i), a));
    }
    return r;
}

std::vector<Partition> partitions_of(int s) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, s, s);
    return out;
}

std::vector<Multipartition> enumerate_classes(const CycleQuiver& q, const DimVector& d) {
    if (d.size() != q.n) throw std::invalid_argument("enumerate_classes: dimension vector size mismatch");
    int total = d.total();
    std::vector<Multipartition> out;
    std::vector<Partition> comps(static_cast<std::size_t>(q.n));
    auto rec = [&](auto&& self, int comp, int rest) -> void {
        if (comp == q.n) {
            if (rest == 0) {
                Multipartition m(q, comps);
                if (dim_vector(m) == d) out.push_back(std::move(m));
            }
            return;
        }
        for (int s = 0; s <= rest; ++s)
            for (const Partition& p : partitions_of(s)) {
                comps[static_cast<std::size_t>(comp)] = p;
                self(self, comp + 1, rest - s);
            }
        comps[static_cast<std::size_t>(comp)] = Partition();
    };
    rec(rec, 0, total);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclichall
