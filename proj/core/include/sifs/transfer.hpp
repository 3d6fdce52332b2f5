#pragma once

// The weighted averaging (transfer) operator of the dual system:
// (Rf)(x) = sum_l |chi_B(tau_l x)|^2 f(tau_l x), its grid iteration on an
// invariant box, and harmonicity diagnostics for closed-form functions.

#include <functional>
#include <string>
#include <vector>

#include "sifs/cycles.hpp"
#include "sifs/ifs.hpp"

namespace sifs {

using ScalarField = std::function<double(const std::vector<double>&)>;

struct GridFunction {
    std::vector<double> half_width; // box is the product of [-h_i, h_i]
    std::vector<int> resolution;    // nodes per axis, >= 2
    std::vector<double> values;     // row-major, last axis fastest

    int dim() const { return static_cast<int>(half_width.size()); }
    size_t node_count() const;
    std::vector<double> node(const std::vector<int>& idx) const;
    double& at(const std::vector<int>& idx);
    double at(const std::vector<int>& idx) const;
    // Multilinear interpolation; arguments are clamped to the box.
    double eval(const std::vector<double>& x) const;

    static GridFunction sample(const std::vector<double>& half_width,
                               const std::vector<int>& resolution, const ScalarField& f);
};

double apply_transfer_point(const HadamardTriple& t, const ScalarField& f,
                            const std::vector<double>& x);

GridFunction apply_transfer_grid(const HadamardTriple& t, const GridFunction& f);

struct TransferIteration {
    GridFunction result;
    std::vector<double> sup_deltas; // sup |f_{k+1} - f_k| per application
};

// n applications on the grid. The box must satisfy tau_l(box) inside box for
// every l; throws kBoxNotInvariant otherwise.
TransferIteration iterate_transfer(const HadamardTriple& t, const GridFunction& f0, int n);

enum class HarmonicSign { kHarmonic, kSubharmonic, kNeither };

struct HarmonicReport {
    double max_defect = 0.0; // max |Rf - f|
    double min_delta = 0.0;  // min (Rf - f)
    double max_delta = 0.0;  // max (Rf - f)
    HarmonicSign sign = HarmonicSign::kNeither;
    size_t samples = 0;
};

HarmonicReport harmonic_defect(const HadamardTriple& t, const ScalarField& f,
                               const std::vector<std::vector<double>>& samples,
                               double tol = 1e-9);

std::string to_string(HarmonicSign s);

// Uniform sample grid over the box [-h, h], n_per_axis points per axis,
// offset half a cell from the faces.
std::vector<std::vector<double>> sample_grid(const std::vector<double>& half_width,
                                             int n_per_axis);

} // namespace sifs
