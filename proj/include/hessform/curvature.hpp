#pragma once

#include <optional>

#include "hessform/form.hpp"

namespace hessform {

/// The scaled Hessian metric -1/(d(d-1)) d^2f evaluated at a rational point.
struct MetricSample {
    std::vector<Rational> point;
    int degree = 0;
    RationalMatrix g{0, 0};
    Signature sig;
    bool nondegenerate = false;
};

/// Exact curvature tensor components R_ijkl at a point, all n^4 of them.
/// Index symmetries and the first Bianchi identity are asserted on
/// construction.
class CurvatureTensor {
public:
    CurvatureTensor(int n, std::vector<Rational> r, std::vector<Rational> point)
        : n_(n), r_(std::move(r)), point_(std::move(point)) {}

    int dimension() const { return n_; }
    const std::vector<Rational>& point() const { return point_; }

    const Rational& at(int i, int j, int k, int l) const {
        return r_[((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l];
    }

    bool is_zero() const {
        for (const auto& v : r_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    int n_;
    std::vector<Rational> r_;
    std::vector<Rational> point_;
};

/// A 2-plane at a point, given by two spanning tangent vectors.
struct PlaneSpec {
    std::vector<Rational> u, v;
};

MetricSample metric_at(const Form& f, std::span<const Rational> point);

/// Christoffel symbols of the first kind for the scaled metric:
/// -1/(2d(d-1)) f_ijk, fully symmetric. Flattened n^3 array, index
/// (i*n + j)*n + k.
std::vector<Rational> christoffel_first(const Form& f, std::span<const Rational> point);

CurvatureTensor curvature_tensor_at(const Form& f, std::span<const Rational> point);

/// R(u,v,u,v) normalized by the metric Gram determinant; basis-independent.
Rational sectional_curvature(const Form& f, std::span<const Rational> point,
                             const PlaneSpec& plane);

/// Curvature of the level hypersurface through the ray of `point`, evaluated
/// at a ray representative: f * K_ambient - d^2/4 for planes tangent to the
/// level set. Homogeneous of degree 0 along rays.
Rational sectional_curvature_on_m(const Form& f, std::span<const Rational> point,
                                  const PlaneSpec& plane);

/// Exact tangent plane of the level set at a point with nonzero gradient
/// (arity 3: the unique one; otherwise the first two kernel vectors).
PlaneSpec level_set_tangent_plane(const Form& f, std::span<const Rational> point);

struct RoutePointResult {
    std::vector<Rational> point;
    Rational k_m_tensor;
    Rational k_m_covariant;
    bool equal = false;
};

struct RouteCheckReport {
    std::vector<RoutePointResult> points;
    bool pass() const {
        if (points.empty()) return false;
        for (const auto& p : points)
            if (!p.equal) return false;
        return true;
    }
};

/// Cross-validates the tensor route for the level-surface curvature against
/// the covariant formula -d^2/4 + d^2(d-1)^2/(4(d-2)^2) S(f) f^2 / H(f)^2 at
/// the given points (ternary, d >= 3, H and f nonzero at each point).
RouteCheckReport covariant_curvature_check(const Form& f,
                                           const std::vector<std::vector<Rational>>& points);

struct FlatnessVerdict {
    bool flat = false;
    int samples_checked = 0;
    long tried = 0;
    std::optional<std::vector<Rational>> witness;  // nonflat point, when found
    std::string note;
};

/// Evaluates the full tensor exactly at seeded pseudo-random rational points
/// with nondegenerate metric. FLAT when all vanish; the note records the
/// degree-bound rationale for trusting generic-sample vanishing.
FlatnessVerdict flatness_certificate(const Form& f, int sample_count, uint64_t seed);

/// Central-difference transcription of the general curvature formulas
/// (Christoffel symbols from metric derivatives, tensor from second metric
/// derivatives plus Gamma*Gamma terms), compared against the closed form.
/// Returns the max deviation over index tuples, measured against
/// max(1, ||R_exact||_inf).
double fd_curvature_oracle(const Form& f, std::span<const double> point, double step);

struct ScalingCheckReport {
    struct Entry {
        Rational scale;
        Rational lhs;  // K(c*point) * c^d
        Rational rhs;  // K(point)
        Rational k_m_at_scaled;
        bool ok = false;
    };
    std::vector<Entry> entries;
    bool pass() const {
        if (entries.empty()) return false;
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }
};

/// Verifies K(c*point) = c^(-d) K(point) for each scale and that the
/// level-surface curvature is constant along the ray. The plane must be
/// tangent to the level set at `point`.
ScalingCheckReport warp_scaling_check(const Form& f, std::span<const Rational> point,
                                      const PlaneSpec& plane,
                                      const std::vector<Rational>& scales);

struct LogMetricReport {
    int samples_checked = 0;
    double max_deviation = 0.0;
    bool pass = false;
};

/// Numeric check that (t,x) -> e^(t/sqrt(d)) x is an isometry from
/// R x (M, -d^2f|_M) onto (-d^2 log f) on the positive-f region; pushes a
/// tangent frame through the analytic differential and compares inner
/// products at each sample.
LogMetricReport log_metric_product_check(const Form& f,
                                         const std::vector<std::vector<Rational>>& samples,
                                         double tolerance);

}  // namespace hessform
