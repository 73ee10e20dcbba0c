#include "octolin/json_io.hpp"

#include <fstream>

namespace octolin {

using nlohmann::json;

json to_json(const Octonion& p) {
    json a = json::array();
    for (int i = 0; i < 8; ++i) a.push_back(p[i]);
    return a;
}

json to_json(const OVector& x) {
    json a = json::array();
    for (const auto& p : x) a.push_back(to_json(p));
    return a;
}

json to_json(const OMatrix& t) {
    json a = json::array();
    for (std::size_t i = 0; i < t.rows(); ++i) a.push_back(to_json(t.row(i)));
    return a;
}

json to_json(const Frame& f) {
    json a = json::array();
    for (const auto& v : f) a.push_back(to_json(v));
    return a;
}

json to_json(const FrameReport& r) {
    return json{{"orthonormal", r.orthonormal},
                {"associative", r.associative},
                {"weak_associative", r.weak_associative},
                {"complete", r.complete},
                {"max_gram_residual", r.max_gram_residual},
                {"max_assoc_residual", r.max_assoc_residual}};
}

json to_json(const ClassificationReport& r) {
    return json{{"is_paralinear_residual", r.is_paralinear_residual},
                {"gram_TTstar_residual", r.gram_TTstar_residual},
                {"gram_TstarT_residual", r.gram_TstarT_residual},
                {"rows_weak_assoc", r.rows_weak_assoc},
                {"cols_weak_assoc", r.cols_weak_assoc},
                {"real_composition_identity", r.real_composition_identity},
                {"norm_preserving", r.norm_preserving},
                {"is_isometry", r.is_isometry},
                {"kernel_dim", r.kernel_dim},
                {"kernel_is_O_submodule", r.kernel_is_O_submodule},
                {"is_partial_isometry", r.is_partial_isometry}};
}

json to_json(const Iso2Decomposition& d) {
    return json{{"p", to_json(d.p)},
                {"J", to_json(d.j)},
                {"U", to_json(d.u)},
                {"residual", d.residual}};
}

json to_json(const StiefelReport& r) {
    return json{{"y", to_json(r.y)}, {"dim_OOy", r.dim_OOy}, {"fiber_dim", r.fiber_dim}};
}

Octonion octonion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 8)
        throw ParseError("octonion must be an array of exactly 8 numbers");
    std::array<double, 8> c{};
    for (std::size_t i = 0; i < 8; ++i) {
        if (!j[i].is_number()) throw ParseError("octonion coordinates must be numbers");
        c[i] = j[i].get<double>();
    }
    return Octonion(c);
}

OVector ovector_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("vector must be a nonempty array of octonions");
    std::vector<Octonion> entries;
    entries.reserve(j.size());
    for (const auto& e : j) entries.push_back(octonion_from_json(e));
    return OVector(std::move(entries));
}

OMatrix omatrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("matrix must be a nonempty array of rows");
    std::vector<OVector> rows;
    rows.reserve(j.size());
    for (const auto& r : j) rows.push_back(ovector_from_json(r));
    return OMatrix(std::move(rows));
}

Frame frame_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("frame must be a nonempty array of vectors");
    std::vector<OVector> vs;
    vs.reserve(j.size());
    for (const auto& v : j) vs.push_back(ovector_from_json(v));
    return Frame(std::move(vs));
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

} // namespace

OMatrix load_matrix(const std::string& path) { return omatrix_from_json(parse_file(path)); }
Frame load_frame(const std::string& path) { return frame_from_json(parse_file(path)); }
OVector load_vector(const std::string& path) { return ovector_from_json(parse_file(path)); }

} // namespace octolin
