#pragma once

#include <string>
#include <vector>

#include "cli/table.hpp"

namespace qcat::cli {

const std::vector<std::string>& figure_ids();

/// q values used by the multi-curve presets (fig2, fig5a, fig5b).
std::vector<double> default_q_list();

/// Data behind one figure panel. Throws std::invalid_argument for an unknown id
/// or an empty q list.
///
///   fig1a  even cat, q = 0.8, GUR sides against |alpha|
///   fig1b  even cat, |alpha| = 0.8, GUR sides against q
///   fig2   even cat, var_y / var_x / G against |alpha| per q
///   fig3   even cat, |alpha| = 0.9, var_y and G against q
///   fig4a  q = 0.9, |alpha| = 2.1, P_n of the coherent and even cat states
///   fig4b  as fig4a with |alpha| = 1.8
///   fig5a  even cat Mandel parameter per q plus the ordinary q = 1 curve
///   fig5b  odd cat, as fig5a
Table figure_table(const std::string& id, const std::vector<double>& q_list = default_q_list(),
                   int steps = 200);

}  // namespace qcat::cli
