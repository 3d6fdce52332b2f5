#pragma once

// Candidate spectra generated from extreme cycles: the closure of -C under
// the expanding maps sigma_l(x) = R^T x + l, the word encoding of each
// generated point, and the numeric certificates (pairwise orthogonality
// defect, completeness function) for truncated exponential families.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "sifs/cuntz.hpp"
#include "sifs/cycles.hpp"

namespace sifs {

enum class Truncation { kDepth, kRadius };

struct SpectrumSet {
    std::vector<RatVec> elements; // sorted lex, distinct
    // Generation witness per element (parallel to elements): BFS parent and
    // the letter applied last, -1 for seeds.
    std::vector<int> parent;
    std::vector<int> letter;
    std::vector<int> seed; // index into the generating cycle, -1 for external sets
    Truncation truncation = Truncation::kDepth;
    int depth = 0;
    double radius = 0.0;
    std::string provenance; // "cycle" or "external"

    size_t size() const { return elements.size(); }
    std::optional<int> find(const RatVec& x) const;
    std::vector<std::vector<double>> to_double() const;
};

// Breadth-first closure of -C under all sigma_l, at most `depth`
// applications, exact and deduplicated.
SpectrumSet generate_lambda(const HadamardTriple& t, const ExtremeCycle& cycle, int depth,
                            std::int64_t cap = 1000000);

// Same closure filtered to the Euclidean ball of the given radius. Frontier
// points are pruned only once escape is certain, so the result contains
// every element of the full set inside the ball.
SpectrumSet generate_lambda_radius(const HadamardTriple& t, const ExtremeCycle& cycle,
                                   double radius, std::int64_t cap = 1000000);

// Points of a lattice inside the Euclidean ball of the given radius, as an
// externally supplied spectrum.
SpectrumSet external_lattice_spectrum(const LatticeBasis& lattice, double radius,
                                      std::int64_t cap = 1000000);

// Word encoding of lambda in Lambda(C): peels sigma-digits (the dual-lattice
// preimage is unique per step) until the orbit -C is reached; the repeating
// tail is the cycle word at the phase where the peel lands.
// Throws kNotInLambda when peeling fails or does not terminate.
WordState encode(const HadamardTriple& t, const ExtremeCycle& cycle, const RatVec& lambda,
                 int max_steps = 4096);

// Forward action sigma_l on a dual-lattice point.
RatVec s_forward(const HadamardTriple& t, int letter, const RatVec& lambda);
// Adjoint action: if lambda = sigma_{l'}(lambda') with lambda' in the dual
// lattice, the (unique) l' is compared with `letter`; mismatch annihilates.
// Throws kNotInDualLattice when lambda has no dual-lattice preimage.
std::optional<RatVec> s_adjoint(const HadamardTriple& t, int letter, const RatVec& lambda);
std::optional<RatVec> s_adjoint(const HadamardTriple& t, const LatticeBasis& dual, int letter,
                                const RatVec& lambda);
// The unique peel (letter, preimage); nullopt when none exists.
std::optional<std::pair<int, RatVec>> peel(const HadamardTriple& t, const LatticeBasis& dual,
                                           const RatVec& lambda);

// Cuntz-relation bookkeeping on the exponential basis indexed by a truncated
// generated set: forward is sigma_l, the adjoint peels the unique digit.
// Both defects are decided by exact lattice arithmetic; states whose peel
// falls outside a radius truncation are skipped and listed.
CuntzDefects cuntz_defect(const HadamardTriple& t, const SpectrumSet& spectrum);

// max over distinct pairs of |mu_hat(lambda - lambda')| at the given depth.
double orthogonality_defect(const HadamardTriple& t, const SpectrumSet& spectrum,
                            int mu_depth = 50);

// sum_{lambda} |mu_hat(t + lambda)|^2, summed in sorted element order.
double completeness_function(const HadamardTriple& t, const SpectrumSet& spectrum,
                             const std::vector<double>& point, int mu_depth = 50);

} // namespace sifs
