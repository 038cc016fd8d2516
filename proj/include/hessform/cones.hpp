#pragma once

#include <optional>

#include "hessform/curvature.hpp"
#include "hessform/form.hpp"

namespace hessform {

/// Pointwise membership record for the positive cone {f > 0} and the index
/// cone (f > 0 with Lorentzian Hessian).
struct ConeClassification {
    std::vector<Rational> point;
    Rational f_value;
    Signature hessian_signature;  // of the raw Hessian d^2f, not the scaled metric
    bool in_positive_cone = false;
    bool in_index_cone = false;
};

ConeClassification classify_point(const Form& f, std::span<const Rational> point);

enum class ConeKind { Positive, Index };

struct SampleStats {
    int requested = 0;
    int accepted = 0;
    long tried = 0;
};

/// Rejection-samples rational points from the box [lo,hi]^n, keeping members
/// of the requested cone. Deterministic for a fixed seed; may return fewer
/// than requested (see the stats).
std::pair<std::vector<std::vector<Rational>>, SampleStats> sample_cone(
    const Form& f, ConeKind which, int count, uint64_t seed, const Rational& lo,
    const Rational& hi, long max_tries = 0);

struct ConeComparisonReport {
    int checked = 0;
    int discrepancies = 0;
    std::vector<std::vector<Rational>> witnesses;  // first few positive-but-not-index points
};

/// For samples from the positive cone, counts the ones that fail index-cone
/// membership.
ConeComparisonReport cone_comparison(const Form& f,
                                     const std::vector<std::vector<Rational>>& samples);

enum class ScanMode { SurfaceCurvature, FullTensor };

struct ScanRow {
    std::vector<Rational> point;
    Rational f_value;
    Signature hessian_signature;
    std::optional<Rational> k_m;      // SurfaceCurvature mode
    bool tensor_zero = false;         // FullTensor mode
    bool skipped = false;
    std::string skip_reason;
};

struct ScanTable {
    std::vector<ScanRow> rows;
    int evaluated = 0;
    int skipped = 0;
    int positive = 0, negative = 0, zero = 0;  // sign counts of K_M
    std::optional<Rational> k_min, k_max;
};

/// Per-sample level-surface curvature (arity 3) or full-tensor vanishing
/// data, with min/max and sign counts aggregated.
ScanTable curvature_scan(const Form& f, const std::vector<std::vector<Rational>>& samples,
                         ScanMode mode);

}  // namespace hessform
