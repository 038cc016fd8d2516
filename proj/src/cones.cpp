#include "hessform/cones.hpp"

#include "hessform/rng.hpp"

namespace hessform {

namespace {

bool all_zero(std::span<const Rational> v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

ConeClassification classify_point(const Form& f, std::span<const Rational> point) {
    if (!f.is_homogeneous() || f.degree() < 2)
        throw std::invalid_argument("classify_point: need a homogeneous form of degree >= 2");
    if (static_cast<int>(point.size()) != f.arity())
        throw std::invalid_argument("classify_point: point length mismatch");
    if (all_zero(point)) throw std::invalid_argument("classify_point: point must be nonzero");

    const int n = f.arity();
    ConeClassification c;
    c.point.assign(point.begin(), point.end());
    c.f_value = f.evaluate(point);

    RationalMatrix h(n, n);
    for (int i = 0; i < n; ++i) {
        const Form fi = f.derivative(i);
        for (int j = i; j < n; ++j) {
            h.at(i, j) = fi.derivative(j).evaluate(point);
            if (j != i) h.at(j, i) = h.at(i, j);
        }
    }
    c.hessian_signature = signature(h);
    c.in_positive_cone = c.f_value.sign() > 0;
    c.in_index_cone = c.in_positive_cone && c.hessian_signature.positives == 1 &&
                      c.hessian_signature.negatives == n - 1;
    return c;
}

std::pair<std::vector<std::vector<Rational>>, SampleStats> sample_cone(
    const Form& f, ConeKind which, int count, uint64_t seed, const Rational& lo,
    const Rational& hi, long max_tries) {
    if (count < 1) throw std::invalid_argument("sample_cone: count must be >= 1");
    if (max_tries <= 0) max_tries = std::max(2000L, 500L * count);

    SampleRng rng(seed);
    SampleStats stats{count, 0, 0};
    std::vector<std::vector<Rational>> accepted;
    const int n = f.arity();

    while (stats.accepted < count && stats.tried < max_tries) {
        ++stats.tried;
        auto pt = rng.point_in_box(n, lo, hi);
        if (all_zero(pt)) continue;
        const ConeClassification c = classify_point(f, pt);
        const bool keep = (which == ConeKind::Positive) ? c.in_positive_cone : c.in_index_cone;
        if (keep) {
            accepted.push_back(std::move(pt));
            ++stats.accepted;
        }
    }
    return {std::move(accepted), stats};
}

ConeComparisonReport cone_comparison(const Form& f,
                                     const std::vector<std::vector<Rational>>& samples) {
    ConeComparisonReport rep;
    for (const auto& pt : samples) {
        const ConeClassification c = classify_point(f, pt);
        ++rep.checked;
        if (!c.in_index_cone) {
            ++rep.discrepancies;
            if (rep.witnesses.size() < 5) rep.witnesses.push_back(pt);
        }
    }
    return rep;
}

ScanTable curvature_scan(const Form& f, const std::vector<std::vector<Rational>>& samples,
                         ScanMode mode) {
    if (mode == ScanMode::SurfaceCurvature && f.arity() != 3)
        throw std::invalid_argument("curvature_scan: surface-curvature mode needs arity 3");

    ScanTable table;
    for (const auto& pt : samples) {
        ScanRow row;
        row.point = pt;
        const ConeClassification c = classify_point(f, pt);
        row.f_value = c.f_value;
        row.hessian_signature = c.hessian_signature;
        try {
            if (mode == ScanMode::SurfaceCurvature) {
                const PlaneSpec plane = level_set_tangent_plane(f, pt);
                row.k_m = sectional_curvature_on_m(f, pt, plane);
            } else {
                row.tensor_zero = curvature_tensor_at(f, pt).is_zero();
            }
        } catch (const std::exception& e) {
            row.skipped = true;
            row.skip_reason = e.what();
        }
        if (row.skipped) {
            ++table.skipped;
        } else {
            ++table.evaluated;
            if (row.k_m) {
                const int s = row.k_m->sign();
                if (s > 0) ++table.positive;
                else if (s < 0) ++table.negative;
                else ++table.zero;
                if (!table.k_min || *row.k_m < *table.k_min) table.k_min = *row.k_m;
                if (!table.k_max || *row.k_m > *table.k_max) table.k_max = *row.k_m;
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace hessform
