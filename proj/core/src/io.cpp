#include "sifs/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sifs {

using nlohmann::json;

namespace {

IntVec parse_int_vec(const json& j) {
    if (!j.is_array()) fail(ErrorCode::kInvalidInput, "expected an array of integers");
    IntVec v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) fail(ErrorCode::kInvalidInput, "expected integer entries");
        v.push_back(Int(static_cast<long>(e.get<long long>())));
    }
    return v;
}

std::vector<IntVec> parse_vec_list(const json& j, const char* name) {
    if (!j.is_array() || j.empty())
        fail(ErrorCode::kInvalidInput, std::string(name) + " must be a nonempty array");
    std::vector<IntVec> out;
    for (const auto& e : j) out.push_back(parse_int_vec(e));
    return out;
}

bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

long long to_int64(const Int& v, const char* what) {
    if (!v.fits_slong_p()) fail(ErrorCode::kInvalidInput, std::string(what) + " exceeds int64");
    return v.get_si();
}

} // namespace

HadamardTriple triple_from_json(const json& j) {
    for (const char* key : {"d", "R", "B", "L"})
        if (!j.contains(key)) fail(ErrorCode::kInvalidInput, std::string("missing key ") + key);
    int d = j.at("d").get<int>();
    if (d < 1) fail(ErrorCode::kInvalidInput, "d must be positive");
    const json& rj = j.at("R");
    if (!rj.is_array() || static_cast<int>(rj.size()) != d)
        fail(ErrorCode::kInvalidInput, "R must be a d x d array");
    IntMat r(d, d);
    for (int i = 0; i < d; ++i) {
        IntVec row = parse_int_vec(rj.at(i));
        if (static_cast<int>(row.size()) != d)
            fail(ErrorCode::kInvalidInput, "R must be a d x d array");
        for (int k = 0; k < d; ++k) r.at(i, k) = row[k];
    }
    std::vector<IntVec> b = parse_vec_list(j.at("B"), "B");
    std::vector<IntVec> l = parse_vec_list(j.at("L"), "L");
    if (!is_zero(b[0])) fail(ErrorCode::kInvalidInput, "B[0] must be the zero vector");
    if (!is_zero(l[0])) fail(ErrorCode::kInvalidInput, "L[0] must be the zero vector");
    return HadamardTriple::make(std::move(r), std::move(b), std::move(l));
}

HadamardTriple triple_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) fail(ErrorCode::kInvalidInput, "malformed JSON");
    return triple_from_json(j);
}

HadamardTriple triple_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::kIo, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return triple_from_json_text(ss.str());
}

json triple_to_json(const HadamardTriple& t) {
    json j;
    j["d"] = t.d;
    json r = json::array();
    for (int i = 0; i < t.d; ++i) {
        json row = json::array();
        for (int k = 0; k < t.d; ++k) row.push_back(to_int64(t.R.at(i, k), "R entry"));
        r.push_back(row);
    }
    j["R"] = r;
    auto digits = [](const DigitSet& s) {
        json a = json::array();
        for (const IntVec& v : s.vectors) {
            json row = json::array();
            for (const Int& x : v) row.push_back(to_int64(x, "digit entry"));
            a.push_back(row);
        }
        return a;
    };
    j["B"] = digits(t.B);
    j["L"] = digits(t.L);
    return j;
}

json cycles_to_json(const HadamardTriple& t, const std::vector<ExtremeCycle>& cycles) {
    json out = json::array();
    for (const ExtremeCycle& c : cycles) {
        json jc;
        json pts = json::array();
        for (const RatVec& x : c.points) {
            json coords = json::array();
            for (const Rat& q : x)
                coords.push_back(json::array({to_int64(q.get_num(), "cycle numerator"),
                                              to_int64(q.get_den(), "cycle denominator")}));
            pts.push_back(coords);
        }
        jc["points"] = pts;
        json word = json::array();
        for (const IntVec& l : c.word_digits(t)) {
            json digit = json::array();
            for (const Int& x : l) digit.push_back(to_int64(x, "word digit"));
            word.push_back(digit);
        }
        jc["word"] = word;
        jc["length"] = c.length();
        out.push_back(jc);
    }
    return out;
}

json intertwiner_to_json(const Word& w, const Word& w_prime, const IntertwinerSpace& space) {
    json j;
    j["w"] = word_str(w);
    j["w_prime"] = word_str(w_prime);
    j["dimension"] = space.dimension;
    json basis = json::array();
    for (const RatMat& m : space.basis) {
        json rows = json::array();
        for (int i = 0; i < m.rows; ++i) {
            json row = json::array();
            for (int k = 0; k < m.cols; ++k) row.push_back(rat_to_string(m.at(i, k)));
            rows.push_back(row);
        }
        basis.push_back(rows);
    }
    j["basis"] = basis;
    return j;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string csv_points(const std::vector<std::vector<double>>& pts, const std::string& stem) {
    std::ostringstream os;
    if (!pts.empty()) {
        for (size_t i = 0; i < pts[0].size(); ++i) os << (i ? "," : "") << stem << (i + 1);
        os << "\n";
    }
    for (const auto& p : pts) {
        for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << format_double(p[i]);
        os << "\n";
    }
    return os.str();
}

} // namespace

std::string point_cloud_csv(const PointCloud& cloud) {
    std::vector<std::vector<double>> pts;
    pts.reserve(cloud.points.size());
    for (const RatVec& x : cloud.points) pts.push_back(to_double(x));
    return csv_points(pts, "x");
}

std::string point_cloud_csv(const std::vector<std::vector<double>>& points) {
    return csv_points(points, "x");
}

std::string spectrum_csv(const SpectrumSet& s) { return csv_points(s.to_double(), "lam"); }

std::string mu_hat_csv(const HadamardTriple& t, const std::vector<std::vector<double>>& points,
                       int mu_depth) {
    std::ostringstream os;
    if (!points.empty()) {
        for (size_t i = 0; i < points[0].size(); ++i) os << "t" << (i + 1) << ",";
        os << "re,im,abs2\n";
    }
    for (const auto& p : points) {
        std::complex<double> v = mu_hat_value(t, p, mu_depth);
        for (double c : p) os << format_double(c) << ",";
        os << format_double(v.real()) << "," << format_double(v.imag()) << ","
           << format_double(std::norm(v)) << "\n";
    }
    return os.str();
}

std::string grid_csv(const GridFunction& g) {
    std::ostringstream os;
    os << "value\n";
    for (double v : g.values) os << format_double(v) << "\n";
    return os.str();
}

json grid_sidecar(const GridFunction& g) {
    json j;
    j["box"] = g.half_width;
    j["resolution"] = g.resolution;
    return j;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::kIo, "cannot write " + path);
    out << contents;
}

} // namespace sifs
