#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mesur/inference/engine.hpp"

namespace mesur::metrics {

enum class MetricKind { ImpactFactor, UsageImpactFactor };

/// "ImpactFactor" / "UsageImpactFactor".
std::string_view metric_kind_name(MetricKind kind);

struct MetricRequest {
    MetricKind kind = MetricKind::ImpactFactor;
    rdf::Term object;  // group root
    int year = 0;
    /// Publication window; defaults to [year - 2, year - 1].
    std::optional<inference::YearRange> window;
    inference::PartOfMode part_of = inference::PartOfMode::Transitive;
    /// Fractional digits of the stored value.
    int precision = 6;

    inference::YearRange effective_window() const;
};

struct MetricResult {
    MetricKind kind = MetricKind::ImpactFactor;
    rdf::Term object;
    int year = 0;
    inference::YearRange window;
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 0;
    std::string value;  // numerator / denominator at the requested precision
    rdf::Term node;     // the NumericMetric node written to the store
};

/// Citations in `year` to the group's units published within the window,
/// divided by the number of those units. A citation is a distinct
/// (source unit, sink unit) pair of a Citation node whose source unit has a
/// Publishes dated `year`.
///
/// Throws NotFoundError for an object absent from the store, InvalidArgument
/// for a window that is empty or does not precede the year, and MetricError
/// (writing nothing) when the window holds no units.
MetricResult impact_factor(const MetricRequest& request, inference::InferenceEngine& engine);

/// Uses contexts dated `year` whose document is one of the group's units
/// published within the window, divided by the number of those units.
/// Errors as for impact_factor.
MetricResult usage_impact_factor(const MetricRequest& request, inference::InferenceEngine& engine);

/// Dispatches on request.kind.
MetricResult compute_metric(const MetricRequest& request, inference::InferenceEngine& engine);

}  // namespace mesur::metrics
