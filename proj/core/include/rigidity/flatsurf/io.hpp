#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/flatsurf/foliation.hpp"
#include "rigidity/flatsurf/origami.hpp"

namespace rigidity::flatsurf {

RIGIDITY_DEFINE_ERROR(ParseError);

// { "n": int, "h": [1-indexed images], "v": [...] }
Origami parse_origami(std::string_view json_text);
Origami read_origami(const std::filesystem::path& path);
std::string origami_to_json(const Origami& o);

// "theta,value" header, one row per sample, 15 significant digits.
std::string profile_csv(const std::vector<ProfileSample>& samples);

}  // namespace rigidity::flatsurf
