#include "sifs/cycles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>

namespace sifs {

namespace {

Eigen::MatrixXd dual_inverse_matrix(const HadamardTriple& t) {
    RatMat inv = inverse(RatMat::from_int(t.R.transpose()));
    Eigen::MatrixXd a(t.d, t.d);
    for (int i = 0; i < t.d; ++i)
        for (int j = 0; j < t.d; ++j) a(i, j) = inv.at(i, j).get_d();
    return a;
}

Eigen::MatrixXd to_eigen(const std::vector<double>& w, int d) {
    Eigen::MatrixXd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = w[static_cast<size_t>(i) * d + j];
    return m;
}

} // namespace

double ContractionInfo::norm_of(const std::vector<double>& x) const {
    int d = static_cast<int>(x.size());
    double s = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s += x[i] * norm[static_cast<size_t>(i) * d + j] * x[j];
    return std::sqrt(std::max(0.0, s));
}

double ContractionInfo::norm_of(const RatVec& x) const { return norm_of(to_double(x)); }

ContractionInfo contraction_constant(const HadamardTriple& t) {
    if (!is_expansive(t.R)) fail(ErrorCode::kNotExpansive, "R is not expansive");
    const int d = t.d;
    Eigen::MatrixXd a = dual_inverse_matrix(t);
    ContractionInfo info;
    info.norm.assign(static_cast<size_t>(d) * d, 0.0);

    double op = a.jacobiSvd().singularValues()(0);
    if (op < 1.0 - 1e-9) {
        for (int i = 0; i < d; ++i) info.norm[static_cast<size_t>(i) * d + i] = 1.0;
        info.c = op;
        info.euclidean = true;
        return info;
    }
    // Adapted norm: W = sum_{k=0..K} (a^k)^T a^k until |a|_W < 1.
    Eigen::MatrixXd w = Eigen::MatrixXd::Identity(d, d);
    Eigen::MatrixXd pw = Eigen::MatrixXd::Identity(d, d); // a^k
    for (int k = 1; k <= 512; ++k) {
        pw = pw * a;
        w += pw.transpose() * pw;
        Eigen::MatrixXd lhs = a.transpose() * w * a;
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(lhs, w);
        double lam = ges.eigenvalues().maxCoeff();
        if (lam < 1.0 - 1e-9) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) info.norm[static_cast<size_t>(i) * d + j] = w(i, j);
            info.c = std::sqrt(lam);
            info.euclidean = false;
            return info;
        }
    }
    fail(ErrorCode::kNotExpansive, "no contractive norm found for (R^T)^{-1}");
}

SearchRegion make_search_region(const HadamardTriple& t) {
    SearchRegion region;
    region.metric = contraction_constant(t);
    double max_l = 0.0;
    for (const IntVec& l : t.L.vectors) {
        std::vector<double> v(t.d);
        for (int i = 0; i < t.d; ++i) v[i] = l[i].get_d();
        max_l = std::max(max_l, region.metric.norm_of(v));
    }
    double c = region.metric.c;
    double r = c * max_l / (1.0 - c) * (1.0 + 1e-6);
    // Round up to a rational with denominator 10^6 (strict inequality in the
    // radius bound).
    Int num(static_cast<long>(std::ceil(r * 1e6)) + 1);
    region.radius = make_rat(num, Int(1000000));
    region.radius_d = region.radius.get_d();
    return region;
}

std::vector<RatVec> candidate_points(const HadamardTriple& t, const SearchRegion& region,
                                     std::int64_t cap) {
    LatticeBasis dual = dual_lattice(t);
    RatMat basis = dual.basis();
    const int d = t.d;
    // Coefficient bounds: |k_i| <= r * sqrt((D^{-1} W^{-1} D^{-T})_{ii}).
    Eigen::MatrixXd bd(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) bd(i, j) = basis.at(i, j).get_d();
    Eigen::MatrixXd w = to_eigen(region.metric.norm, d);
    Eigen::MatrixXd binv = bd.inverse();
    Eigen::MatrixXd m = binv * w.inverse() * binv.transpose();
    std::vector<long> bound(d);
    std::int64_t box_count = 1;
    for (int i = 0; i < d; ++i) {
        bound[i] = static_cast<long>(std::floor(region.radius_d * std::sqrt(m(i, i)) * (1 + 1e-9))) + 1;
        box_count *= 2 * bound[i] + 1;
        if (box_count > cap) fail(ErrorCode::kCapExceeded, "candidate box exceeds cap");
    }
    std::vector<RatVec> out;
    std::vector<long> k(d, 0);
    for (int i = 0; i < d; ++i) k[i] = -bound[i];
    const double r_fuzz = region.radius_d * (1.0 + 1e-12) + 1e-12;
    while (true) {
        RatVec x(d, Rat(0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (k[j] != 0) x[i] += basis.at(i, j) * Rat(static_cast<long>(k[j]));
        if (region.metric.norm_of(x) <= r_fuzz && is_extreme_point(t, x))
            out.push_back(std::move(x));
        int axis = d - 1;
        while (axis >= 0) {
            if (k[axis] < bound[axis]) { ++k[axis]; break; }
            k[axis] = -bound[axis];
            --axis;
        }
        if (axis < 0) break;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<IntVec> ExtremeCycle::word_digits(const HadamardTriple& t) const {
    std::vector<IntVec> out;
    out.reserve(word.size());
    for (int idx : word) out.push_back(t.L.vectors[idx]);
    return out;
}

ExtremeCycle canonical_rotation(ExtremeCycle c) {
    const int p = c.length();
    int best = 0;
    auto rotation_less = [&](int a, int b) {
        for (int k = 0; k < p; ++k) {
            int wa = c.word[(a + k) % p], wb = c.word[(b + k) % p];
            if (wa != wb) return wa < wb;
        }
        // Equal word rotations cannot occur for distinct points (the word of
        // a cycle of distinct points is minimal); break ties by point order.
        return lex_less(c.points[a], c.points[b]);
    };
    for (int s = 1; s < p; ++s)
        if (rotation_less(s, best)) best = s;
    if (best == 0) return c;
    ExtremeCycle r;
    r.points.reserve(p);
    r.word.reserve(p);
    for (int k = 0; k < p; ++k) {
        r.points.push_back(c.points[(best + k) % p]);
        r.word.push_back(c.word[(best + k) % p]);
    }
    return r;
}

std::vector<ExtremeCycle> find_extreme_cycles(const HadamardTriple& t, std::int64_t cap) {
    if (t.N == 1) {
        // Single-digit system: the only orbit is the fixed point of tau_0.
        ExtremeCycle origin;
        origin.points = {RatVec(t.d, Rat(0))};
        origin.word = {0};
        return {origin};
    }
    SearchRegion region = make_search_region(t);
    std::vector<RatVec> cand = candidate_points(t, region, cap);
    MapFamily lmaps = MapFamily::l_side(t);

    std::map<RatVec, int, bool (*)(const RatVec&, const RatVec&)> index(&lex_less);
    for (size_t i = 0; i < cand.size(); ++i) index.emplace(cand[i], static_cast<int>(i));

    const int n = static_cast<int>(cand.size());
    // successor[i]: unique extreme transition inside the candidate set, or -1.
    std::vector<int> successor(n, -1), letter(n, -1);
    for (int i = 0; i < n; ++i) {
        int found = -1;
        for (int li = 0; li < t.N; ++li) {
            RatVec y = lmaps.tau(cand[i], li);
            if (!is_extreme_point(t, y)) continue;
            if (found >= 0)
                fail(ErrorCode::kInvalidInput, "QMF violation: two extreme successors");
            auto it = index.find(y);
            if (it != index.end()) {
                successor[i] = it->second;
                letter[i] = li;
            }
            found = li;
        }
    }

    std::vector<int> state(n, 0); // 0 unvisited, 1 on current path, 2 done
    std::vector<ExtremeCycle> cycles;
    for (int start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        std::vector<int> path;
        int cur = start;
        while (cur >= 0 && state[cur] == 0) {
            state[cur] = 1;
            path.push_back(cur);
            cur = successor[cur];
        }
        if (cur >= 0 && state[cur] == 1) {
            // Closed a new loop; extract it.
            size_t k = 0;
            while (path[k] != cur) ++k;
            ExtremeCycle c;
            for (size_t j = k; j < path.size(); ++j) {
                c.points.push_back(cand[path[j]]);
                c.word.push_back(letter[path[j]]);
            }
            cycles.push_back(canonical_rotation(std::move(c)));
        }
        for (int v : path) state[v] = 2;
    }
    std::sort(cycles.begin(), cycles.end(), [](const ExtremeCycle& a, const ExtremeCycle& b) {
        if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
        return lex_less(a.points[0], b.points[0]);
    });
    return cycles;
}

CycleCheck verify_cycle(const HadamardTriple& t, const ExtremeCycle& c) {
    const int p = c.length();
    if (p == 0 || c.word.size() != c.points.size()) return {false, "empty or ragged cycle"};
    for (int i = 0; i < p; ++i)
        if (c.word[i] < 0 || c.word[i] >= t.N) return {false, "word index out of range"};
    MapFamily lmaps = MapFamily::l_side(t);
    for (int i = 0; i < p; ++i) {
        if (lmaps.tau(c.points[i], c.word[i]) != c.points[(i + 1) % p])
            return {false, "transition does not close"};
        if (!is_extreme_point(t, c.points[i])) return {false, "point is not extreme"};
    }
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (c.points[i] == c.points[j]) return {false, "points not distinct"};
    ExtremeCycle canon = canonical_rotation(c);
    if (canon.word != c.word || canon.points != c.points)
        return {false, "word not in canonical rotation"};
    return {true, ""};
}

std::vector<double> invariant_box(const HadamardTriple& t) {
    const int d = t.d;
    Eigen::MatrixXd a = dual_inverse_matrix(t).cwiseAbs();
    Eigen::VectorXd m(d);
    for (int i = 0; i < d; ++i) {
        double mx = 0.0;
        for (const IntVec& l : t.L.vectors) mx = std::max(mx, std::abs(l[i].get_d()));
        m(i) = mx;
    }
    // h = (I - |A|)^{-1} |A| m solves h >= |A| (h + m) componentwise when the
    // spectral radius of |A| is < 1.
    Eigen::MatrixXd ia = Eigen::MatrixXd::Identity(d, d) - a;
    Eigen::VectorXd h = ia.partialPivLu().solve(a * m);
    for (int i = 0; i < d; ++i)
        if (!(h(i) >= 0.0) || !std::isfinite(h(i)))
            fail(ErrorCode::kBoxNotInvariant, "componentwise invariant box unavailable");
    // Verify: every corner of the box maps inside under every tau_l.
    MapFamily lmaps = MapFamily::l_side(t);
    for (int li = 0; li < t.N; ++li) {
        for (int corner = 0; corner < (1 << d); ++corner) {
            std::vector<double> x(d);
            for (int i = 0; i < d; ++i) x[i] = ((corner >> i) & 1) ? h(i) : -h(i);
            std::vector<double> y = lmaps.tau(x, li);
            for (int i = 0; i < d; ++i)
                if (std::abs(y[i]) > h(i) + 1e-9)
                    fail(ErrorCode::kBoxNotInvariant, "box corner escapes under tau");
        }
    }
    std::vector<double> out(d);
    for (int i = 0; i < d; ++i) out[i] = h(i);
    return out;
}

} // namespace sifs
