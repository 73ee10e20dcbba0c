#ifndef OCTOLIN_JSON_IO_HPP
#define OCTOLIN_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "octolin/classify.hpp"
#include "octolin/frame.hpp"
#include "octolin/omatrix.hpp"
#include "octolin/octonion.hpp"
#include "octolin/ovector.hpp"

namespace octolin {

// Wire formats: an octonion is an array of exactly 8 numbers [r0,...,r7];
// a vector is an array of octonions; a matrix is an array of rows; a frame
// is an array of vectors. Reports serialize with their field names.

nlohmann::json to_json(const Octonion& p);
nlohmann::json to_json(const OVector& x);
nlohmann::json to_json(const OMatrix& t);
nlohmann::json to_json(const Frame& f);
nlohmann::json to_json(const FrameReport& r);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const Iso2Decomposition& d);
nlohmann::json to_json(const StiefelReport& r);

Octonion octonion_from_json(const nlohmann::json& j);
OVector ovector_from_json(const nlohmann::json& j);
OMatrix omatrix_from_json(const nlohmann::json& j);
Frame frame_from_json(const nlohmann::json& j);

OMatrix load_matrix(const std::string& path);
Frame load_frame(const std::string& path);
OVector load_vector(const std::string& path);

} // namespace octolin

#endif // OCTOLIN_JSON_IO_HPP
