#pragma once

// Dense and sparse matrices over an exact commutative coefficient type
// (Rational or RationalFunction). Tensor-leg indexing is leg-1-major:
// flat((i_1..i_k)) = sum (i_t - 1) * N^(k-t), indices 1-based.

#include "yangx/rational.hpp"

#include <map>
#include <vector>

namespace yangx {

template <class T>
struct DMat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    DMat() = default;
    DMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    static DMat identity(int n) {
        DMat m(n, n);
        for (int i = 0; i < n; ++i) m.a[(size_t)i * n + i] = T(1);
        return m;
    }

    T& at(int i, int j) { return a[(size_t)(i - 1) * cols + (j - 1)]; } // 1-based
    const T& at(int i, int j) const { return a[(size_t)(i - 1) * cols + (j - 1)]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!(x == T(0))) return false;
        return true;
    }

    DMat operator+(const DMat& o) const {
        assert(rows == o.rows && cols == o.cols);
        DMat r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] + o.a[i];
        return r;
    }
    DMat operator-(const DMat& o) const {
        assert(rows == o.rows && cols == o.cols);
        DMat r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] - o.a[i];
        return r;
    }
    DMat operator-() const {
        DMat r = *this;
        for (auto& x : r.a) x = -x;
        return r;
    }
    DMat operator*(const DMat& o) const {
        assert(cols == o.rows);
        DMat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const T& v = a[(size_t)i * cols + k];
                if (v == T(0)) continue;
                for (int j = 0; j < o.cols; ++j) {
                    const T& w = o.a[(size_t)k * o.cols + j];
                    if (w == T(0)) continue;
                    r.a[(size_t)i * o.cols + j] = r.a[(size_t)i * o.cols + j] + v * w;
                }
            }
        return r;
    }
    DMat operator*(const T& k) const {
        DMat r = *this;
        for (auto& x : r.a) x = x * k;
        return r;
    }
    bool operator==(const DMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const DMat& o) const { return !(*this == o); }
};

using QMat = DMat<Rational>;

template <class T>
struct SparseMat {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, T> e; // 0-based flat indices -> nonzero value

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c) {}

    static SparseMat identity(int n, const T& one = T(1)) {
        SparseMat m(n, n);
        for (int i = 0; i < n; ++i) m.e[{i, i}] = one;
        return m;
    }

    void add_entry(int r, int c, const T& v) {
        if (v == T(0)) return;
        auto it = e.find({r, c});
        if (it == e.end()) {
            e[{r, c}] = v;
        } else {
            it->second = it->second + v;
            if (it->second == T(0)) e.erase(it);
        }
    }

    SparseMat operator+(const SparseMat& o) const {
        assert(rows == o.rows && cols == o.cols);
        SparseMat r = *this;
        for (const auto& [rc, v] : o.e) r.add_entry(rc.first, rc.second, v);
        return r;
    }
    SparseMat operator-(const SparseMat& o) const {
        assert(rows == o.rows && cols == o.cols);
        SparseMat r = *this;
        for (const auto& [rc, v] : o.e) r.add_entry(rc.first, rc.second, -v);
        return r;
    }
    SparseMat operator*(const T& k) const {
        SparseMat r(rows, cols);
        if (k == T(0)) return r;
        for (const auto& [rc, v] : e) r.e[rc] = v * k;
        return r;
    }
    SparseMat operator*(const SparseMat& o) const {
        assert(cols == o.rows);
        SparseMat r(rows, o.cols);
        for (const auto& [rc, v] : e) {
            auto it = o.e.lower_bound({rc.second, 0});
            auto end = o.e.lower_bound({rc.second + 1, 0});
            for (; it != end; ++it) r.add_entry(rc.first, it->first.second, v * it->second);
        }
        return r;
    }
    bool operator==(const SparseMat& o) const {
        return rows == o.rows && cols == o.cols && e == o.e;
    }
    bool is_zero() const { return e.empty(); }
};

using SparseQ = SparseMat<Rational>;

// flat index of a tuple of 1-based leg indices, leg 1 most significant
inline int flat_index(const std::vector<int>& idx, int N) {
    int f = 0;
    for (int x : idx) {
        assert(x >= 1 && x <= N);
        f = f * N + (x - 1);
    }
    return f;
}

inline long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Embed an operator acting on k legs (dimension N each) into `total` legs,
// acting as identity elsewhere. positions: 1-based leg labels, distinct,
// in the order of the operator's own legs.
template <class T>
SparseMat<T> place_legs(const SparseMat<T>& op, const std::vector<int>& positions, int total, int N) {
    int k = (int)positions.size();
    assert(op.rows == ipow(N, k) && op.cols == op.rows);
    long dim = ipow(N, total);
    SparseMat<T> out((int)dim, (int)dim);

    std::vector<int> others;
    for (int p = 1; p <= total; ++p) {
        bool used = false;
        for (int q : positions) used |= (q == p);
        if (!used) others.push_back(p);
    }
    long rest = ipow(N, (int)others.size());

    std::vector<int> row_t(k), col_t(k), full_r(total), full_c(total);
    for (const auto& [rc, v] : op.e) {
        int r = rc.first, c = rc.second;
        for (int t = k - 1; t >= 0; --t) {
            row_t[t] = r % N + 1;
            r /= N;
            col_t[t] = c % N + 1;
            c /= N;
        }
        for (long m = 0; m < rest; ++m) {
            long mm = m;
            for (size_t t = others.size(); t-- > 0;) {
                full_r[others[t] - 1] = (int)(mm % N) + 1;
                mm /= N;
            }
            for (int t = 0; t < k; ++t) full_r[positions[t] - 1] = row_t[t];
            for (int p = 0; p < total; ++p) full_c[p] = full_r[p];
            for (int t = 0; t < k; ++t) full_c[positions[t] - 1] = col_t[t];
            out.e[{flat_index(full_r, N), flat_index(full_c, N)}] = v;
        }
    }
    return out;
}

} // namespace yangx
