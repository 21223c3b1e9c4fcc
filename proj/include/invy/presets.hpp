#pragma once

#include <string_view>
#include <vector>

namespace invy {

// Built-in parameter sets.  `config` is a scenario-file fragment (drive,
// decay, initial) in the same JSON schema the CLI accepts.
struct Preset {
    const char* name;
    const char* figure;  // which published panel the parameters reproduce
    const char* label;   // human summary for list-presets
    const char* config;
};

const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name);

}  // namespace invy
