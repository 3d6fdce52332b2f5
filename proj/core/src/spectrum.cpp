#include "sifs/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace sifs {

std::optional<int> SpectrumSet::find(const RatVec& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x, lex_less);
    if (it != elements.end() && *it == x) return static_cast<int>(it - elements.begin());
    return std::nullopt;
}

std::vector<std::vector<double>> SpectrumSet::to_double() const {
    std::vector<std::vector<double>> out;
    out.reserve(elements.size());
    for (const RatVec& v : elements) out.push_back(sifs::to_double(v));
    return out;
}

namespace {

struct BfsNode {
    RatVec point;
    int parent;
    int letter;
    int seed;
};

SpectrumSet finish(std::vector<BfsNode> nodes, Truncation trunc, int depth, double radius,
                   std::string provenance) {
    // Sort by point, remapping parent indices.
    std::vector<int> order(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return lex_less(nodes[a].point, nodes[b].point); });
    std::vector<int> pos(nodes.size());
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    SpectrumSet s;
    s.truncation = trunc;
    s.depth = depth;
    s.radius = radius;
    s.provenance = std::move(provenance);
    s.elements.reserve(nodes.size());
    for (int o : order) {
        s.elements.push_back(nodes[o].point);
        s.parent.push_back(nodes[o].parent < 0 ? -1 : pos[nodes[o].parent]);
        s.letter.push_back(nodes[o].letter);
        s.seed.push_back(nodes[o].seed);
    }
    return s;
}

// Closure of -C under the sigma maps. keep() decides whether a discovered
// point is retained and expanded further.
template <typename Keep>
std::vector<BfsNode> bfs_closure(const HadamardTriple& t, const ExtremeCycle& cycle,
                                 int max_depth, std::int64_t cap, Keep keep) {
    MapFamily lmaps = MapFamily::l_side(t);
    std::map<RatVec, int, bool (*)(const RatVec&, const RatVec&)> seen(&lex_less);
    std::vector<BfsNode> nodes;
    std::deque<std::pair<int, int>> frontier; // node index, depth
    for (size_t i = 0; i < cycle.points.size(); ++i) {
        RatVec seed = neg(cycle.points[i]);
        if (seen.count(seed)) continue;
        seen.emplace(seed, static_cast<int>(nodes.size()));
        frontier.emplace_back(static_cast<int>(nodes.size()), 0);
        nodes.push_back({std::move(seed), -1, -1, static_cast<int>(i)});
    }
    while (!frontier.empty()) {
        auto [id, depth] = frontier.front();
        frontier.pop_front();
        if (max_depth >= 0 && depth >= max_depth) continue;
        for (int li = 0; li < t.N; ++li) {
            RatVec child = lmaps.sigma(nodes[id].point, li);
            if (seen.count(child)) continue;
            if (!keep(child)) continue;
            if (static_cast<std::int64_t>(nodes.size()) >= cap)
                fail(ErrorCode::kCapExceeded, "spectrum generation exceeds cap");
            seen.emplace(child, static_cast<int>(nodes.size()));
            frontier.emplace_back(static_cast<int>(nodes.size()), depth + 1);
            nodes.push_back({std::move(child), id, li, nodes[id].seed});
        }
    }
    return nodes;
}

} // namespace

SpectrumSet generate_lambda(const HadamardTriple& t, const ExtremeCycle& cycle, int depth,
                            std::int64_t cap) {
    if (depth < 0) fail(ErrorCode::kInvalidInput, "depth must be >= 0");
    auto nodes = bfs_closure(t, cycle, depth, cap, [](const RatVec&) { return true; });
    return finish(std::move(nodes), Truncation::kDepth, depth, 0.0, "cycle");
}

SpectrumSet generate_lambda_radius(const HadamardTriple& t, const ExtremeCycle& cycle,
                                   double radius, std::int64_t cap) {
    if (radius < 0) fail(ErrorCode::kInvalidInput, "radius must be >= 0");
    // Points are explored while their adapted norm stays below the larger of
    // the ball bound and the escape radius: beyond the escape radius every
    // sigma image is strictly farther out, so nothing inside the target ball
    // descends from a pruned point.
    ContractionInfo metric = contraction_constant(t);
    double max_l = 0.0;
    for (const IntVec& l : t.L.vectors) {
        std::vector<double> v(t.d);
        for (int i = 0; i < t.d; ++i) v[i] = l[i].get_d();
        max_l = std::max(max_l, metric.norm_of(v));
    }
    double escape = metric.c * max_l / (1.0 - metric.c);
    // Euclidean ball of the target radius sits inside the metric ball of
    // radius * sqrt(lambda_max(W)); the trace bounds lambda_max from above.
    double trace_w = 0.0;
    for (int i = 0; i < t.d; ++i) trace_w += metric.norm[static_cast<size_t>(i) * t.d + i];
    double keep_bound = std::max(radius * std::sqrt(trace_w), escape) * (1.0 + 1e-9) + 1e-9;
    auto nodes = bfs_closure(t, cycle, -1, cap, [&](const RatVec& x) {
        return metric.norm_of(x) <= keep_bound;
    });
    // Emit only the points inside the Euclidean ball.
    std::vector<BfsNode> kept;
    std::vector<int> remap(nodes.size(), -1);
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (norm2(to_double(nodes[i].point)) > radius * (1.0 + 1e-12)) continue;
        remap[i] = static_cast<int>(kept.size());
        kept.push_back(nodes[i]);
    }
    for (BfsNode& n : kept)
        if (n.parent >= 0) n.parent = remap[n.parent]; // -1 when the parent fell outside
    return finish(std::move(kept), Truncation::kRadius, 0, radius, "cycle");
}

SpectrumSet external_lattice_spectrum(const LatticeBasis& lattice, double radius,
                                      std::int64_t cap) {
    const int d = lattice.dim();
    RatMat basis = lattice.basis();
    // Coefficient bounds via rows of the inverse basis.
    RatMat inv = inverse(basis);
    std::vector<long> bound(d);
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) {
        double row = 0.0;
        for (int j = 0; j < d; ++j) row += inv.at(i, j).get_d() * inv.at(i, j).get_d();
        bound[i] = static_cast<long>(std::floor(radius * std::sqrt(row) * (1 + 1e-9))) + 1;
        count *= 2 * bound[i] + 1;
        if (count > cap) fail(ErrorCode::kCapExceeded, "lattice ball exceeds cap");
    }
    std::vector<BfsNode> nodes;
    std::vector<long> k(d);
    for (int i = 0; i < d; ++i) k[i] = -bound[i];
    while (true) {
        RatVec x(d, Rat(0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (k[j] != 0) x[i] += basis.at(i, j) * Rat(static_cast<long>(k[j]));
        if (norm2(to_double(x)) <= radius * (1.0 + 1e-12))
            nodes.push_back({std::move(x), -1, -1, -1});
        int axis = d - 1;
        while (axis >= 0) {
            if (k[axis] < bound[axis]) { ++k[axis]; break; }
            k[axis] = -bound[axis];
            --axis;
        }
        if (axis < 0) break;
    }
    return finish(std::move(nodes), Truncation::kRadius, 0, radius, "external");
}

std::optional<std::pair<int, RatVec>> peel(const HadamardTriple& t, const LatticeBasis& dual,
                                           const RatVec& lambda) {
    RatMat rt_inv = inverse(RatMat::from_int(t.R.transpose()));
    std::optional<std::pair<int, RatVec>> found;
    for (int li = 0; li < t.N; ++li) {
        RatVec shifted(lambda.size());
        for (size_t i = 0; i < lambda.size(); ++i)
            shifted[i] = lambda[i] - Rat(t.L.vectors[li][i]);
        RatVec pre = mul(rt_inv, shifted);
        if (!dual.contains(pre)) continue;
        if (found)
            fail(ErrorCode::kInvalidInput, "digit separation violated: two peels");
        found = std::make_pair(li, std::move(pre));
    }
    return found;
}

WordState encode(const HadamardTriple& t, const ExtremeCycle& cycle, const RatVec& lambda,
                 int max_steps) {
    LatticeBasis dual = dual_lattice(t);
    if (!dual.contains(lambda))
        fail(ErrorCode::kNotInLambda, "point is not on the dual lattice");
    std::vector<RatVec> neg_cycle;
    for (const RatVec& x : cycle.points) neg_cycle.push_back(neg(x));
    Word prefix;
    RatVec cur = lambda;
    for (int step = 0; step <= max_steps; ++step) {
        for (size_t j = 0; j < neg_cycle.size(); ++j) {
            if (cur == neg_cycle[j]) {
                // Tail: cycle word starting at phase j.
                Word tail;
                const int p = cycle.length();
                for (int k = 0; k < p; ++k) tail.push_back(cycle.word[(j + k) % p]);
                return WordState::make(std::move(prefix), std::move(tail));
            }
        }
        auto step_peel = peel(t, dual, cur);
        if (!step_peel) fail(ErrorCode::kNotInLambda, "peeling failed before reaching the cycle");
        prefix.push_back(step_peel->first);
        cur = std::move(step_peel->second);
    }
    fail(ErrorCode::kNotInLambda, "peeling did not terminate in the step budget");
}

RatVec s_forward(const HadamardTriple& t, int letter, const RatVec& lambda) {
    return MapFamily::l_side(t).sigma(lambda, letter);
}

std::optional<RatVec> s_adjoint(const HadamardTriple& t, const LatticeBasis& dual, int letter,
                                const RatVec& lambda) {
    if (!dual.contains(lambda))
        fail(ErrorCode::kNotInDualLattice, "point is not on the dual lattice");
    auto p = peel(t, dual, lambda);
    if (!p) fail(ErrorCode::kNotInDualLattice, "point has no dual-lattice preimage");
    if (p->first != letter) return std::nullopt;
    return p->second;
}

std::optional<RatVec> s_adjoint(const HadamardTriple& t, int letter, const RatVec& lambda) {
    return s_adjoint(t, dual_lattice(t), letter, lambda);
}

CuntzDefects cuntz_defect(const HadamardTriple& t, const SpectrumSet& spectrum) {
    LatticeBasis dual = dual_lattice(t);
    MapFamily lmaps = MapFamily::l_side(t);
    CuntzDefects d;
    for (const RatVec& lam : spectrum.elements) {
        // S_l^* S_{l'} e_lam = delta_{l l'} e_lam: push forward, peel back.
        for (int lp = 0; lp < t.N; ++lp) {
            RatVec fwd = lmaps.sigma(lam, lp);
            auto back = peel(t, dual, fwd);
            if (!back || back->first != lp || back->second != lam) d.iso_defect = 1.0;
        }
        // sum_l S_l S_l^* e_lam = e_lam: exactly the peel letter survives.
        auto p = peel(t, dual, lam);
        if (!p) {
            d.completeness_defect = 1.0;
            continue;
        }
        if (!spectrum.find(p->second)) {
            // Radius truncation cut the preimage; skip rather than report a
            // spurious defect.
            d.skipped.push_back(vec_to_string(lam));
            continue;
        }
        if (lmaps.sigma(p->second, p->first) != lam) d.completeness_defect = 1.0;
    }
    return d;
}

double orthogonality_defect(const HadamardTriple& t, const SpectrumSet& spectrum,
                            int mu_depth) {
    auto pts = spectrum.to_double();
    double defect = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            std::vector<double> diff(pts[i].size());
            for (size_t k = 0; k < diff.size(); ++k) diff[k] = pts[i][k] - pts[j][k];
            defect = std::max(defect, std::abs(mu_hat_value(t, diff, mu_depth)));
        }
    return defect;
}

double completeness_function(const HadamardTriple& t, const SpectrumSet& spectrum,
                             const std::vector<double>& point, int mu_depth) {
    double sum = 0.0;
    for (const auto& lam : spectrum.to_double()) {
        std::vector<double> arg(point.size());
        for (size_t k = 0; k < arg.size(); ++k) arg[k] = point[k] + lam[k];
        sum += std::norm(mu_hat_value(t, arg, mu_depth));
    }
    return sum;
}

} // namespace sifs
