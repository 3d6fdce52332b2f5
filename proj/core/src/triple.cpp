#include "sifs/triple.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

namespace sifs {

DigitSet DigitSet::make(DigitSide side, std::vector<IntVec> vectors) {
    if (vectors.empty()) fail(ErrorCode::kInvalidInput, "digit set is empty");
    size_t d = vectors[0].size();
    bool has_zero = false;
    std::set<IntVec> seen;
    for (const IntVec& v : vectors) {
        if (v.size() != d) fail(ErrorCode::kDimensionMismatch, "digit dimension mismatch");
        if (!seen.insert(v).second) fail(ErrorCode::kInvalidInput, "duplicate digit vector");
        if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }))
            has_zero = true;
    }
    if (!has_zero) fail(ErrorCode::kInvalidInput, "digit set must contain the zero vector");
    DigitSet s;
    s.side = side;
    s.vectors = std::move(vectors);
    return s;
}

HadamardTriple HadamardTriple::make(IntMat R, std::vector<IntVec> B, std::vector<IntVec> L) {
    if (R.rows != R.cols) fail(ErrorCode::kDimensionMismatch, "R must be square");
    if (R.rows <= 0) fail(ErrorCode::kInvalidInput, "R must be nonempty");
    if (det(R) == 0) fail(ErrorCode::kInvalidInput, "R must have nonzero determinant");
    if (B.size() != L.size()) fail(ErrorCode::kInvalidInput, "#B must equal #L");
    HadamardTriple t;
    t.d = R.rows;
    t.N = static_cast<int>(B.size());
    t.R = std::move(R);
    t.B = DigitSet::make(DigitSide::kB, std::move(B));
    t.L = DigitSet::make(DigitSide::kL, std::move(L));
    for (const IntVec& v : t.B.vectors)
        if (static_cast<int>(v.size()) != t.d)
            fail(ErrorCode::kDimensionMismatch, "B digit dimension must match R");
    for (const IntVec& v : t.L.vectors)
        if (static_cast<int>(v.size()) != t.d)
            fail(ErrorCode::kDimensionMismatch, "L digit dimension must match R");
    return t;
}

Expansiveness expansiveness(const IntMat& R) {
    if (R.rows != R.cols) fail(ErrorCode::kDimensionMismatch, "expansiveness needs square R");
    const double kMargin = 1e-9;
    std::vector<Int> coeff = char_poly(R);
    int n = R.rows;
    // Rational roots on the unit circle are decidable exactly: a vanishing
    // value at +-1 means an eigenvalue of modulus one.
    Int at_one = 0, at_minus_one = 0;
    for (int i = 0; i <= n; ++i) {
        at_one += coeff[i];
        at_minus_one += (i % 2 == 0) ? coeff[i] : -coeff[i];
    }
    if (at_one == 0 || at_minus_one == 0) return Expansiveness::kNotExpansive;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeff[i].get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    bool all_outside = true;
    for (int i = 0; i < n; ++i) {
        double mod = std::abs(solver.eigenvalues()(i));
        if (std::abs(mod - 1.0) <= kMargin) return Expansiveness::kIndeterminate;
        if (mod < 1.0) all_outside = false;
    }
    return all_outside ? Expansiveness::kExpansive : Expansiveness::kNotExpansive;
}

bool is_expansive(const IntMat& R) {
    switch (expansiveness(R)) {
        case Expansiveness::kExpansive: return true;
        case Expansiveness::kNotExpansive: return false;
        default:
            fail(ErrorCode::kIndeterminate,
                 "eigenvalue within 1e-9 of the unit circle; refusing to decide");
    }
}

HadamardCheck check_hadamard(const HadamardTriple& t, double tol) {
    const int n = t.N;
    RatMat rinv = inverse(RatMat::from_int(t.R));
    std::vector<std::complex<double>> h(static_cast<size_t>(n) * n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        RatVec rb = mul(rinv, t.B.vectors[i]);
        for (int j = 0; j < n; ++j) {
            Rat e = rat_frac(dot(t.L.vectors[j], rb));
            h[static_cast<size_t>(i) * n + j] =
                scale * std::polar(1.0, 2.0 * M_PI * e.get_d());
        }
    }
    double defect = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            std::complex<double> s = 0.0;
            for (int i = 0; i < n; ++i)
                s += std::conj(h[static_cast<size_t>(i) * n + j]) * h[static_cast<size_t>(i) * n + k];
            if (j == k) s -= 1.0;
            defect = std::max(defect, std::abs(s));
        }
    return {defect < tol, defect};
}

namespace {

// Columns {R^k b : b in B, 0 <= k <= K}.
IntMat digit_orbit_columns(const HadamardTriple& t, int K) {
    IntMat cols(t.d, t.N * (K + 1));
    int c = 0;
    std::vector<IntVec> cur;
    for (const IntVec& b : t.B.vectors) cur.push_back(b);
    for (int k = 0; k <= K; ++k) {
        for (const IntVec& v : cur) {
            for (int i = 0; i < t.d; ++i) cols.at(i, c) = v[i];
            ++c;
        }
        if (k < K)
            for (IntVec& v : cur) v = mul(t.R, v);
    }
    return cols;
}

} // namespace

int regularity_rank(const HadamardTriple& t) {
    int prev = -1;
    for (int K = 0; K <= t.d + 1; ++K) {
        int r = rank(RatMat::from_int(digit_orbit_columns(t, K)));
        if (r < prev) fail(ErrorCode::kInvalidInput, "digit span rank decreased");
        if (r == prev) return r;
        prev = r;
    }
    return prev;
}

LatticeBasis digit_span_lattice(const HadamardTriple& t) {
    if (regularity_rank(t) < t.d)
        fail(ErrorCode::kNotRegular, "digit span does not have full rank");
    LatticeBasis prev = LatticeBasis::from_generators(digit_orbit_columns(t, t.d));
    // The subspace stabilizes by K = d; the lattice may refine further.
    // Each strict refinement divides the index in Z^d-like steps, so this
    // terminates; stabilization is permanent because R maps the span into
    // the next stage.
    for (int K = t.d + 1;; ++K) {
        LatticeBasis cur = LatticeBasis::from_generators(digit_orbit_columns(t, K));
        if (cur == prev) return cur;
        prev = cur;
    }
}

LatticeBasis dual_lattice(const HadamardTriple& t) {
    LatticeBasis span = digit_span_lattice(t);
    LatticeBasis dual = span.dual();
    // Exact postconditions: Z^d sits inside the dual, and R^T maps it into
    // itself.
    if (!dual.contains_lattice(LatticeBasis::standard(t.d)))
        fail(ErrorCode::kInvalidInput, "dual lattice postcondition failed: Z^d not contained");
    RatMat rt = RatMat::from_int(t.R.transpose());
    RatMat image = mul(rt, dual.basis());
    for (int j = 0; j < image.cols; ++j) {
        RatVec col(image.rows);
        for (int i = 0; i < image.rows; ++i) col[i] = image.at(i, j);
        if (!dual.contains(col))
            fail(ErrorCode::kInvalidInput, "dual lattice postcondition failed: not R^T invariant");
    }
    return dual;
}

} // namespace sifs
