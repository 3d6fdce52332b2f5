#include "sifs/transfer.hpp"

#include <algorithm>
#include <cmath>

namespace sifs {

size_t GridFunction::node_count() const {
    size_t n = 1;
    for (int r : resolution) n *= static_cast<size_t>(r);
    return n;
}

std::vector<double> GridFunction::node(const std::vector<int>& idx) const {
    std::vector<double> x(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) {
        double step = 2.0 * half_width[i] / (resolution[i] - 1);
        x[i] = -half_width[i] + idx[i] * step;
    }
    return x;
}

namespace {

size_t flat_index(const std::vector<int>& idx, const std::vector<int>& res) {
    size_t f = 0;
    for (size_t i = 0; i < idx.size(); ++i) f = f * static_cast<size_t>(res[i]) + idx[i];
    return f;
}

} // namespace

double& GridFunction::at(const std::vector<int>& idx) { return values[flat_index(idx, resolution)]; }
double GridFunction::at(const std::vector<int>& idx) const { return values[flat_index(idx, resolution)]; }

double GridFunction::eval(const std::vector<double>& x) const {
    const int d = dim();
    std::vector<int> base(d);
    std::vector<double> frac(d);
    for (int i = 0; i < d; ++i) {
        double step = 2.0 * half_width[i] / (resolution[i] - 1);
        double u = (std::clamp(x[i], -half_width[i], half_width[i]) + half_width[i]) / step;
        int b = static_cast<int>(std::floor(u));
        b = std::clamp(b, 0, resolution[i] - 2);
        base[i] = b;
        frac[i] = u - b;
    }
    double acc = 0.0;
    std::vector<int> idx(d);
    for (int corner = 0; corner < (1 << d); ++corner) {
        double w = 1.0;
        for (int i = 0; i < d; ++i) {
            int bit = (corner >> i) & 1;
            idx[i] = base[i] + bit;
            w *= bit ? frac[i] : (1.0 - frac[i]);
        }
        if (w != 0.0) acc += w * at(idx);
    }
    return acc;
}

GridFunction GridFunction::sample(const std::vector<double>& half_width,
                                  const std::vector<int>& resolution, const ScalarField& f) {
    for (int r : resolution)
        if (r < 2) fail(ErrorCode::kInvalidInput, "grid resolution must be >= 2");
    GridFunction g;
    g.half_width = half_width;
    g.resolution = resolution;
    g.values.resize(g.node_count());
    const int d = g.dim();
    std::vector<int> idx(d, 0);
    for (size_t flat = 0; flat < g.values.size(); ++flat) {
        g.values[flat] = f(g.node(idx));
        for (int i = d - 1; i >= 0; --i) {
            if (++idx[i] < resolution[i]) break;
            idx[i] = 0;
        }
    }
    return g;
}

double apply_transfer_point(const HadamardTriple& t, const ScalarField& f,
                            const std::vector<double>& x) {
    MapFamily lmaps = MapFamily::l_side(t);
    double s = 0.0;
    for (int li = 0; li < t.N; ++li) {
        std::vector<double> y = lmaps.tau(x, li);
        double w = std::norm(chi_b(t, y));
        if (w != 0.0) s += w * f(y);
    }
    return s;
}

GridFunction apply_transfer_grid(const HadamardTriple& t, const GridFunction& f) {
    GridFunction out = f;
    MapFamily lmaps = MapFamily::l_side(t);
    const int d = f.dim();
    std::vector<int> idx(d, 0);
    for (size_t flat = 0; flat < out.values.size(); ++flat) {
        std::vector<double> x = f.node(idx);
        double s = 0.0;
        for (int li = 0; li < t.N; ++li) {
            std::vector<double> y = lmaps.tau(x, li);
            double w = std::norm(chi_b(t, y));
            if (w != 0.0) s += w * f.eval(y);
        }
        out.values[flat] = s;
        for (int i = d - 1; i >= 0; --i) {
            if (++idx[i] < f.resolution[i]) break;
            idx[i] = 0;
        }
    }
    return out;
}

TransferIteration iterate_transfer(const HadamardTriple& t, const GridFunction& f0, int n) {
    // The box must be forward invariant under every tau_l: check corners.
    MapFamily lmaps = MapFamily::l_side(t);
    const int d = f0.dim();
    for (int li = 0; li < t.N; ++li)
        for (int corner = 0; corner < (1 << d); ++corner) {
            std::vector<double> x(d);
            for (int i = 0; i < d; ++i)
                x[i] = ((corner >> i) & 1) ? f0.half_width[i] : -f0.half_width[i];
            std::vector<double> y = lmaps.tau(x, li);
            for (int i = 0; i < d; ++i)
                if (std::abs(y[i]) > f0.half_width[i] + 1e-9)
                    fail(ErrorCode::kBoxNotInvariant, "grid box is not invariant under tau");
        }
    TransferIteration it;
    it.result = f0;
    for (int k = 0; k < n; ++k) {
        GridFunction next = apply_transfer_grid(t, it.result);
        double delta = 0.0;
        for (size_t i = 0; i < next.values.size(); ++i)
            delta = std::max(delta, std::abs(next.values[i] - it.result.values[i]));
        it.sup_deltas.push_back(delta);
        it.result = std::move(next);
    }
    return it;
}

HarmonicReport harmonic_defect(const HadamardTriple& t, const ScalarField& f,
                               const std::vector<std::vector<double>>& samples, double tol) {
    HarmonicReport r;
    r.samples = samples.size();
    bool first = true;
    for (const auto& x : samples) {
        double delta = apply_transfer_point(t, f, x) - f(x);
        if (first) {
            r.min_delta = r.max_delta = delta;
            first = false;
        } else {
            r.min_delta = std::min(r.min_delta, delta);
            r.max_delta = std::max(r.max_delta, delta);
        }
        r.max_defect = std::max(r.max_defect, std::abs(delta));
    }
    if (r.max_defect <= tol)
        r.sign = HarmonicSign::kHarmonic;
    else if (r.min_delta >= -tol)
        r.sign = HarmonicSign::kSubharmonic;
    else
        r.sign = HarmonicSign::kNeither;
    return r;
}

std::string to_string(HarmonicSign s) {
    switch (s) {
        case HarmonicSign::kHarmonic: return "harmonic";
        case HarmonicSign::kSubharmonic: return "subharmonic";
        default: return "neither";
    }
}

std::vector<std::vector<double>> sample_grid(const std::vector<double>& half_width,
                                             int n_per_axis) {
    const int d = static_cast<int>(half_width.size());
    std::vector<std::vector<double>> out;
    std::vector<int> idx(d, 0);
    while (true) {
        std::vector<double> x(d);
        for (int i = 0; i < d; ++i)
            x[i] = -half_width[i] + 2.0 * half_width[i] * (idx[i] + 0.5) / n_per_axis;
        out.push_back(x);
        int axis = d - 1;
        while (axis >= 0) {
            if (++idx[axis] < n_per_axis) break;
            idx[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    return out;
}

} // namespace sifs
