#include "matrix.hpp"

#include <functional>

namespace duality {

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::runtime_error("PolyMatrix: shape mismatch");
    PolyMatrix p(ring_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < o.cols_; ++c) {
            Polynomial acc(ring_);
            for (int k = 0; k < cols_; ++k) acc = acc + at(r, k) * o.at(k, c);
            p.at(r, c) = acc;
        }
    return p;
}

bool PolyMatrix::is_zero() const {
    for (auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

PolyMatrix PolyMatrix::drop_row(int dr) const {
    PolyMatrix m(ring_, rows_ - 1, cols_);
    for (int r = 0, rr = 0; r < rows_; ++r) {
        if (r == dr) continue;
        for (int c = 0; c < cols_; ++c) m.at(rr, c) = at(r, c);
        ++rr;
    }
    return m;
}

PolyMatrix PolyMatrix::drop_col(int dc) const {
    PolyMatrix m(ring_, rows_, cols_ - 1);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0, cc = 0; c < cols_; ++c) {
            if (c == dc) continue;
            m.at(r, cc++) = at(r, c);
        }
    return m;
}

Polynomial PolyMatrix::det() const {
    if (rows_ != cols_) throw std::runtime_error("PolyMatrix: det of non-square");
    if (rows_ == 0) return Polynomial(ring_, Rational(1));
    if (rows_ == 1) return at(0, 0);
    Polynomial acc(ring_);
    PolyMatrix rest = drop_row(0);
    for (int c = 0; c < cols_; ++c) {
        if (at(0, c).is_zero()) continue;
        Polynomial cofactor = rest.drop_col(c).det();
        if (c % 2) cofactor = -cofactor;
        acc = acc + at(0, c) * cofactor;
    }
    return acc;
}

namespace {
void combos(int n, int k, std::vector<int>& cur, int start,
            const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == k) { fn(cur); return; }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        combos(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}
} // namespace

std::vector<Polynomial> PolyMatrix::minors(int r) const {
    std::vector<Polynomial> out;
    if (r == 0) { out.push_back(Polynomial(ring_, Rational(1))); return out; }
    if (r > rows_ || r > cols_) return out;
    std::vector<int> rsel, csel;
    combos(rows_, r, rsel, 0, [&](const std::vector<int>& rs) {
        std::vector<int> cur;
        combos(cols_, r, cur, 0, [&](const std::vector<int>& cs) {
            PolyMatrix sub(ring_, r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) sub.at(i, j) = at(rs[i], cs[j]);
            out.push_back(sub.det());
        });
    });
    return out;
}

int PolyMatrix::rank() const {
    // Ascend: once every r x r minor vanishes, so do all larger ones.
    int maxr = std::min(rows_, cols_);
    for (int r = 1; r <= maxr; ++r) {
        bool nonzero = false;
        for (auto& m : minors(r))
            if (!m.is_zero()) { nonzero = true; break; }
        if (!nonzero) return r - 1;
    }
    return maxr;
}

PolyMatrix identity_matrix(const RingPtr& ring, int n) {
    PolyMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial(ring, Rational(1));
    return m;
}

} // namespace duality
