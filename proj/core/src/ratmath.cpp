#include "sifs/ratmath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sifs {

Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

bool lex_less(const RatVec& a, const RatVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

bool lex_less_int(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

std::vector<double> to_double(const RatVec& v) {
    std::vector<double> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
    return r;
}

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

Rat dot(const IntVec& a, const RatVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec neg(const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) fail(ErrorCode::kDimensionMismatch, "IntMat mul shape");
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

IntVec mul(const IntMat& m, const IntVec& v) {
    if (m.cols != static_cast<int>(v.size()))
        fail(ErrorCode::kDimensionMismatch, "IntMat vec shape");
    IntVec r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_int(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

RatMat RatMat::transpose() const {
    RatMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat mul(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) fail(ErrorCode::kDimensionMismatch, "RatMat mul shape");
    RatMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

RatVec mul(const RatMat& m, const RatVec& v) {
    if (m.cols != static_cast<int>(v.size()))
        fail(ErrorCode::kDimensionMismatch, "RatMat vec shape");
    RatVec r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

RatVec mul(const RatMat& m, const IntVec& v) { return mul(m, to_rat(v)); }

namespace {

// Row-reduce in place; returns (rank, det-if-square). Columns beyond `cols`
// are carried along (augmented systems).
struct Elim {
    int rank;
    Rat determinant;
};

Elim eliminate(RatMat& m, int cols) {
    int r = 0;
    Rat detv = 1;
    for (int c = 0; c < cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) { detv = 0; continue; }
        if (piv != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            detv = -detv;
        }
        Rat p = m.at(r, c);
        detv *= p;
        for (int j = 0; j < m.cols; ++j) m.at(r, j) /= p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            Rat f = m.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    if (r < std::min(m.rows, cols)) detv = 0;
    return {r, detv};
}

} // namespace

Rat det(const RatMat& m) {
    if (m.rows != m.cols) fail(ErrorCode::kDimensionMismatch, "det needs square matrix");
    RatMat w = m;
    return eliminate(w, w.cols).determinant;
}

Int det(const IntMat& m) {
    Rat d = det(RatMat::from_int(m));
    return d.get_num();
}

RatMat inverse(const RatMat& m) {
    if (m.rows != m.cols) fail(ErrorCode::kDimensionMismatch, "inverse needs square matrix");
    int n = m.rows;
    RatMat w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, n + i) = 1;
    }
    Elim e = eliminate(w, n);
    if (e.rank < n) fail(ErrorCode::kInvalidInput, "singular matrix");
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = w.at(i, n + j);
    return inv;
}

RatVec solve(const RatMat& m, const RatVec& b) {
    if (m.rows != m.cols || m.rows != static_cast<int>(b.size()))
        fail(ErrorCode::kDimensionMismatch, "solve shape");
    int n = m.rows;
    RatMat w(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, n) = b[i];
    }
    Elim e = eliminate(w, n);
    if (e.rank < n) fail(ErrorCode::kInvalidInput, "singular system");
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = w.at(i, n);
    return x;
}

int rank(RatMat m) { return eliminate(m, m.cols).rank; }

std::vector<RatVec> nullspace(RatMat m) {
    int n = m.cols;
    eliminate(m, n);
    // Reduced row echelon form: each nonzero row leads with a 1 in its pivot
    // column, pivots strictly to the right as rows descend, zero rows last.
    std::vector<int> pivot_of_col(n, -1);
    for (int row = 0; row < m.rows; ++row) {
        int lead = -1;
        for (int c = 0; c < n; ++c)
            if (m.at(row, c) != 0) { lead = c; break; }
        if (lead < 0) break;
        pivot_of_col[lead] = row;
    }
    std::vector<RatVec> basis;
    for (int c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        RatVec v(n, Rat(0));
        v[c] = 1;
        for (int j = 0; j < n; ++j)
            if (pivot_of_col[j] >= 0) v[j] = -m.at(pivot_of_col[j], c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Int> char_poly(const IntMat& m) {
    if (m.rows != m.cols) fail(ErrorCode::kDimensionMismatch, "char_poly needs square matrix");
    int n = m.rows;
    RatMat a = RatMat::from_int(m);
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    RatMat mk = a;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // mk = a * (mk_prev + c[n-k+1] * I)
            RatMat t = mk;
            for (int i = 0; i < n; ++i) t.at(i, i) += c[n - k + 1];
            mk = mul(a, t);
        }
        Rat tr = 0;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        c[n - k] = -tr / k;
    }
    std::vector<Int> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (!is_integer(c[i])) fail(ErrorCode::kInvalidInput, "char_poly: non-integer coefficient");
        out[i] = c[i].get_num();
    }
    return out;
}

IntMat hnf_column_basis(const IntMat& g) {
    int d = g.rows, n = g.cols;
    IntMat w = g;
    auto col_sub = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < d; ++i) w.at(i, dst) -= q * w.at(i, src);
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < d; ++i) std::swap(w.at(i, x), w.at(i, y));
    };
    auto col_neg = [&](int x) {
        for (int i = 0; i < d; ++i) w.at(i, x) = -w.at(i, x);
    };
    int c = 0;
    std::vector<int> pivot_rows;
    for (int i = 0; i < d && c < n; ++i) {
        // Euclid over the entries of row i in columns c..n-1.
        while (true) {
            int jmin = -1;
            for (int j = c; j < n; ++j) {
                if (w.at(i, j) == 0) continue;
                if (jmin < 0 || cmp(abs(w.at(i, j)), abs(w.at(i, jmin))) < 0) jmin = j;
            }
            if (jmin < 0) break;
            bool reduced_any = false;
            for (int j = c; j < n; ++j) {
                if (j == jmin || w.at(i, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.at(i, j).get_mpz_t(), w.at(i, jmin).get_mpz_t());
                col_sub(j, jmin, q);
                reduced_any = true;
            }
            if (!reduced_any) {
                col_swap(c, jmin);
                break;
            }
        }
        if (w.at(i, c) == 0) continue; // row has no pivot
        if (w.at(i, c) < 0) col_neg(c);
        // Reduce pivot-row entries of earlier basis columns into [0, pivot).
        for (int k = 0; k < c; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.at(i, k).get_mpz_t(), w.at(i, c).get_mpz_t());
            col_sub(k, c, q);
        }
        pivot_rows.push_back(i);
        ++c;
    }
    IntMat basis(d, c);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < c; ++j) basis.at(i, j) = w.at(i, j);
    return basis;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::string vec_to_string(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

} // namespace sifs
