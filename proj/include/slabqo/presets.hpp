#pragma once

#include <string>
#include <vector>

#include "slabqo/config.hpp"

namespace slabqo::cli {

enum class FigureId { fig2, fig3a, fig3b, fig4a, fig4b, fig5, fig6a, fig6b, custom };

FigureId parse_figure(const std::string& name);
std::string to_string(FigureId id);
std::vector<FigureId> all_figures();

/// Built-in key set for a figure. A config file and --set overrides are layered on top.
Config preset_defaults(FigureId id);

}  // namespace slabqo::cli
