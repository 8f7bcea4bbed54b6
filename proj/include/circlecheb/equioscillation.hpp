#pragma once

#include <vector>

namespace circlecheb {

/// Alternation structure of a real function on the circle.
///
/// For sampled functions (equioscillation_detect) `points` are the alternating
/// near-extremal angles, `signs` strictly alternate and `order` is half their
/// count. For a potential's local-minima report (local_minima_report) `points`
/// are the per-arc minimizers, `values` the local minima, `signs` is empty,
/// `sup_norm` is the largest local minimum and `order` is the number of arcs.
struct EquioscillationReport {
    std::vector<double> points;
    std::vector<int> signs;
    std::vector<double> values;
    double sup_norm = 0.0;
    double deviation = 0.0;
    int order = 0;
};

}  // namespace circlecheb
