// presets.hpp — shipped experiment configs reproducing the reference figures

#pragma once

#include <string>
#include <vector>

#include "bigeo/errors.hpp"

namespace bigeo::presets {

struct Preset {
    std::string name;
    std::string summary;
    std::string config_text;
};

const std::vector<Preset>& all();
const Preset& by_name(const std::string& name); // throws config_error if unknown

} // namespace bigeo::presets
