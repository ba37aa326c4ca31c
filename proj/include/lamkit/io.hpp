#pragma once

#include "lamkit/cubioid.hpp"

#include <json.hpp>

#include <string>

namespace lamkit {

using json = nlohmann::ordered_json;

json to_json(const LaminationSlice& s);
LaminationSlice slice_from_json(const json& j);

json to_json(const GapDescriptor& g);
GapDescriptor descriptor_from_json(const json& j);

/// Slice fields plus an optional "metadata" array.
json to_json(const CertifiedSlice& s);
CertifiedSlice certified_from_json(const json& j);

/// {"major", "type", "period", "edges", "vassal"?}; edges exclude the major.
json to_json(const QuadGap& u, int depth);
/// Reads "Fa", "Fb", a critical chord (regular or periodic type) or a
/// periodic-type major.
QuadGap parse_gap(std::string_view text);
QuadGap quadgap_from_json(const json& j);

json to_json(const RotationalSet& g);
json to_json(const MembershipReport& r);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lamkit
