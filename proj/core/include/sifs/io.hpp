#pragma once

// File formats: the triple JSON schema, CSV point/graph data, and the JSON
// report fragments shared by the command-line tool.

#include <string>
#include <vector>

#include <json.hpp>

#include "sifs/cycles.hpp"
#include "sifs/spectrum.hpp"
#include "sifs/transfer.hpp"
#include "sifs/triple.hpp"

namespace sifs {

// Schema: {"d": int, "R": [[int]] (row-major), "B": [[int]], "L": [[int]]}.
// B[0] and L[0] must be the zero vector. Throws kInvalidInput / kIo.
HadamardTriple triple_from_json(const nlohmann::json& j);
HadamardTriple triple_from_json_text(const std::string& text);
HadamardTriple triple_from_json_file(const std::string& path);
nlohmann::json triple_to_json(const HadamardTriple& t);

// [{"points": [[[num,den],...]], "word": [[int,...],...], "length": p}]
nlohmann::json cycles_to_json(const HadamardTriple& t, const std::vector<ExtremeCycle>& cycles);

nlohmann::json intertwiner_to_json(const Word& w, const Word& w_prime,
                                   const IntertwinerSpace& space);

// CSV with header x1,...,xd; floating mirror at 17 significant digits.
std::string point_cloud_csv(const PointCloud& cloud);
std::string point_cloud_csv(const std::vector<std::vector<double>>& points);
// CSV with header lam1,...,lamd.
std::string spectrum_csv(const SpectrumSet& s);
// CSV t1,...,td,re,im,abs2 for a batch of transform evaluations.
std::string mu_hat_csv(const HadamardTriple& t, const std::vector<std::vector<double>>& points,
                       int mu_depth);
// Grid values CSV plus a JSON sidecar {box, resolution}.
std::string grid_csv(const GridFunction& g);
nlohmann::json grid_sidecar(const GridFunction& g);

std::string format_double(double v); // 17 significant digits

void write_file(const std::string& path, const std::string& contents);

} // namespace sifs
