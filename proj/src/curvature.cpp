#include "hessform/curvature.hpp"

#include <cmath>

#include "hessform/covariants.hpp"
#include "hessform/rng.hpp"

namespace hessform {

namespace {

int homogeneous_degree(const Form& f, int min_degree, const char* who) {
    if (!f.is_homogeneous()) throw std::invalid_argument(std::string(who) + ": form not homogeneous");
    const int d = f.degree();
    if (d < min_degree)
        throw std::invalid_argument(std::string(who) + ": degree must be >= " +
                                    std::to_string(min_degree));
    return d;
}

bool all_zero(std::span<const Rational> v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

// f_ijk(point) for all index triples, flattened (i*n+j)*n+k.
std::vector<Rational> third_partials_at(const Form& f, std::span<const Rational> pt) {
    const int n = f.arity();
    std::vector<Rational> t(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i) {
        const Form fi = f.derivative(i);
        for (int j = i; j < n; ++j) {
            const Form fij = fi.derivative(j);
            for (int k = j; k < n; ++k) {
                const Rational v = fij.derivative(k).evaluate(pt);
                const int idx[3] = {i, j, k};
                int p[3] = {0, 1, 2};
                // all permutations of a sorted triple
                do {
                    t[((static_cast<size_t>(idx[p[0]]) * n) + idx[p[1]]) * n + idx[p[2]]] = v;
                } while (std::next_permutation(p, p + 3));
            }
        }
    }
    return t;
}

RationalMatrix hessian_value_at(const Form& f, std::span<const Rational> pt) {
    const int n = f.arity();
    RationalMatrix h(n, n);
    for (int i = 0; i < n; ++i) {
        const Form fi = f.derivative(i);
        for (int j = i; j < n; ++j) {
            h.at(i, j) = fi.derivative(j).evaluate(pt);
            if (j != i) h.at(j, i) = h.at(i, j);
        }
    }
    return h;
}

Rational metric_pairing(const RationalMatrix& g, std::span<const Rational> u,
                        std::span<const Rational> v) {
    Rational s;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) s += g.at(i, j) * u[i] * v[j];
    return s;
}

std::vector<Rational> scale_point(std::span<const Rational> p, const Rational& c) {
    std::vector<Rational> r(p.begin(), p.end());
    for (auto& x : r) x *= c;
    return r;
}

}  // namespace

MetricSample metric_at(const Form& f, std::span<const Rational> point) {
    const int d = homogeneous_degree(f, 2, "metric_at");
    if (static_cast<int>(point.size()) != f.arity())
        throw std::invalid_argument("metric_at: point length mismatch");
    if (all_zero(point)) throw std::invalid_argument("metric_at: point must be nonzero");

    MetricSample s;
    s.point.assign(point.begin(), point.end());
    s.degree = d;
    s.g = hessian_value_at(f, point).scaled(Rational(-1, static_cast<long>(d) * (d - 1)));
    s.sig = signature(s.g);
    s.nondegenerate = (s.sig.zeros == 0);
    return s;
}

std::vector<Rational> christoffel_first(const Form& f, std::span<const Rational> point) {
    const int d = homogeneous_degree(f, 2, "christoffel_first");
    std::vector<Rational> t = third_partials_at(f, point);
    const Rational c(-1, 2L * d * (d - 1));
    for (auto& v : t) v *= c;
    return t;
}

CurvatureTensor curvature_tensor_at(const Form& f, std::span<const Rational> point) {
    const int d = homogeneous_degree(f, 2, "curvature_tensor_at");
    const int n = f.arity();
    const MetricSample m = metric_at(f, point);
    if (!m.nondegenerate) throw std::domain_error("curvature_tensor_at: degenerate metric");
    const RationalMatrix ginv = inverse(m.g);
    const std::vector<Rational> t = third_partials_at(f, point);
    auto f3 = [&](int i, int j, int k) -> const Rational& {
        return t[(static_cast<size_t>(i) * n + j) * n + k];
    };

    const Rational dd(static_cast<long>(d) * (d - 1));
    const Rational prefactor = Rational(-1) / (Rational(4) * dd * dd);

    std::vector<Rational> r(static_cast<size_t>(n) * n * n * n);
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l, ++idx) {
                    Rational sum;
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q) {
                            if (ginv.at(p, q).is_zero()) continue;
                            sum += ginv.at(p, q) *
                                   (f3(j, l, p) * f3(i, k, q) - f3(i, l, p) * f3(j, k, q));
                        }
                    r[idx] = prefactor * sum;
                }

    CurvatureTensor tensor(n, std::move(r), std::vector<Rational>(point.begin(), point.end()));
    // index symmetries and first Bianchi must hold exactly
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Rational& v = tensor.at(i, j, k, l);
                    if (v != -tensor.at(j, i, k, l) || v != -tensor.at(i, j, l, k) ||
                        v != tensor.at(k, l, i, j))
                        throw std::logic_error("curvature_tensor_at: symmetry violated");
                    Rational bianchi =
                        v + tensor.at(i, k, l, j) + tensor.at(i, l, j, k);
                    if (!bianchi.is_zero())
                        throw std::logic_error("curvature_tensor_at: Bianchi identity violated");
                }
    return tensor;
}

Rational sectional_curvature(const Form& f, std::span<const Rational> point,
                             const PlaneSpec& plane) {
    const int n = f.arity();
    if (static_cast<int>(plane.u.size()) != n || static_cast<int>(plane.v.size()) != n)
        throw std::invalid_argument("sectional_curvature: plane dimension mismatch");
    const MetricSample m = metric_at(f, point);
    if (!m.nondegenerate) throw std::domain_error("sectional_curvature: degenerate metric");
    const Rational guu = metric_pairing(m.g, plane.u, plane.u);
    const Rational gvv = metric_pairing(m.g, plane.v, plane.v);
    const Rational guv = metric_pairing(m.g, plane.u, plane.v);
    const Rational gram = guu * gvv - guv * guv;
    if (gram.is_zero()) throw std::domain_error("sectional_curvature: degenerate plane");

    const CurvatureTensor r = curvature_tensor_at(f, point);
    Rational num;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (plane.u[i].is_zero() && plane.v[i].is_zero()) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Rational& rv = r.at(i, j, k, l);
                    if (rv.is_zero()) continue;
                    num += rv * plane.u[i] * plane.v[j] * plane.u[k] * plane.v[l];
                }
        }
    return num / gram;
}

Rational sectional_curvature_on_m(const Form& f, std::span<const Rational> point,
                                  const PlaneSpec& plane) {
    const int d = homogeneous_degree(f, 2, "sectional_curvature_on_m");
    const Rational fval = f.evaluate(point);
    if (fval.is_zero()) throw std::domain_error("sectional_curvature_on_m: f vanishes at point");
    for (const auto* vec : {&plane.u, &plane.v}) {
        Rational pairing;
        for (int i = 0; i < f.arity(); ++i) pairing += (*vec)[i] * f.derivative(i).evaluate(point);
        if (!pairing.is_zero())
            throw std::invalid_argument("sectional_curvature_on_m: plane not tangent to level set");
    }
    const Rational k_ambient = sectional_curvature(f, point, plane);
    return fval * k_ambient - Rational(static_cast<long>(d) * d, 4);
}

PlaneSpec level_set_tangent_plane(const Form& f, std::span<const Rational> point) {
    const int n = f.arity();
    RationalMatrix grad(1, n);
    for (int i = 0; i < n; ++i) grad.at(0, i) = f.derivative(i).evaluate(point);
    if (grad.is_zero())
        throw std::domain_error("level_set_tangent_plane: gradient vanishes at point");
    const auto basis = nullspace(grad);
    if (basis.size() < 2)
        throw std::domain_error("level_set_tangent_plane: tangent space too small");
    return {basis[0], basis[1]};
}

RouteCheckReport covariant_curvature_check(const Form& f,
                                           const std::vector<std::vector<Rational>>& points) {
    if (f.arity() != 3) throw std::invalid_argument("covariant_curvature_check: arity must be 3");
    const int d = homogeneous_degree(f, 3, "covariant_curvature_check");
    const Form h = hessian_det(f);
    const Form s = clebsch_covariant(f);
    const Rational dd(d), d1(d - 1), d2(d - 2);
    const Rational prefactor = dd * dd * d1 * d1 / (Rational(4) * d2 * d2);
    const Rational quarter_d2 = dd * dd / Rational(4);

    RouteCheckReport rep;
    for (const auto& pt : points) {
        const Rational fval = f.evaluate(pt);
        const Rational hval = h.evaluate(pt);
        if (fval.is_zero() || hval.is_zero())
            throw std::domain_error("covariant_curvature_check: H or f vanishes at a point");
        RoutePointResult r;
        r.point = pt;
        r.k_m_tensor = sectional_curvature_on_m(f, pt, level_set_tangent_plane(f, pt));
        r.k_m_covariant =
            -quarter_d2 + prefactor * s.evaluate(pt) * fval * fval / (hval * hval);
        r.equal = (r.k_m_tensor == r.k_m_covariant);
        rep.points.push_back(std::move(r));
    }
    return rep;
}

FlatnessVerdict flatness_certificate(const Form& f, int sample_count, uint64_t seed) {
    homogeneous_degree(f, 2, "flatness_certificate");
    const int n = f.arity();
    SampleRng rng(seed);
    const Rational lo(-3), hi(3);

    FlatnessVerdict verdict;
    const long max_tries = std::max(1000L, 400L * sample_count);
    while (verdict.samples_checked < sample_count && verdict.tried < max_tries) {
        ++verdict.tried;
        const auto pt = rng.point_in_box(n, lo, hi);
        if (all_zero(pt)) continue;
        MetricSample m;
        try {
            m = metric_at(f, pt);
        } catch (const std::exception&) {
            continue;
        }
        if (!m.nondegenerate) continue;
        const CurvatureTensor r = curvature_tensor_at(f, pt);
        ++verdict.samples_checked;
        if (!r.is_zero()) {
            verdict.flat = false;
            verdict.witness = pt;
            verdict.note = "nonzero curvature component at witness point";
            return verdict;
        }
    }
    if (verdict.samples_checked < sample_count) {
        verdict.flat = false;
        verdict.note = "could not find enough nondegenerate sample points (tried " +
                       std::to_string(verdict.tried) + ")";
        return verdict;
    }
    verdict.flat = true;
    verdict.note =
        "each det(g)*R_ijkl is a polynomial in the point of degree bounded by "
        "2(d-3)+(n-1)(d-2); exact vanishing at the sampled generic rational points "
        "certifies identical vanishing under that degree bound";
    return verdict;
}

double fd_curvature_oracle(const Form& f, std::span<const double> point, double step) {
    const int d = homogeneous_degree(f, 2, "fd_curvature_oracle");
    const int n = f.arity();
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("fd_curvature_oracle: point length mismatch");

    // symbolic second partials, numerically evaluated: the metric as a function
    std::vector<std::vector<Form>> hess(n, std::vector<Form>(n, Form(n)));
    for (int i = 0; i < n; ++i) {
        const Form fi = f.derivative(i);
        for (int j = i; j < n; ++j) {
            hess[i][j] = fi.derivative(j);
            if (j != i) hess[j][i] = hess[i][j];
        }
    }
    const double scale = -1.0 / (static_cast<double>(d) * (d - 1));
    auto g_at = [&](const std::vector<double>& p, int i, int j) {
        return scale * hess[i][j].evaluate(std::span<const double>(p));
    };

    std::vector<double> base(point.begin(), point.end());

    // metric inverse at the base point (the conditioning gate)
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = g_at(base, i, j);
    std::vector<std::vector<double>> ginv(n, std::vector<double>(n, 0.0));
    {
        auto a = g;
        for (int i = 0; i < n; ++i) ginv[i][i] = 1.0;
        double det = 1.0;
        for (int col = 0; col < n; ++col) {
            int piv = col;
            for (int r = col + 1; r < n; ++r)
                if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
            std::swap(a[col], a[piv]);
            std::swap(ginv[col], ginv[piv]);
            det *= a[col][col];
            if (a[col][col] == 0.0) break;
            const double p = 1.0 / a[col][col];
            for (int j = 0; j < n; ++j) {
                a[col][j] *= p;
                ginv[col][j] *= p;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                const double fct = a[r][col];
                if (fct == 0.0) continue;
                for (int j = 0; j < n; ++j) {
                    a[r][j] -= fct * a[col][j];
                    ginv[r][j] -= fct * ginv[col][j];
                }
            }
        }
        if (std::fabs(det) <= 1e-6)
            throw std::domain_error("fd_curvature_oracle: ill-conditioned metric");
    }

    const double h = step;
    auto shifted = [&](int a, double sa, int b, double sb) {
        std::vector<double> p = base;
        p[a] += sa;
        p[b] += sb;
        return p;
    };

    // first derivatives of the metric entries, central differences
    auto dg = [&](int i, int j, int k) {
        auto plus = shifted(k, h, k, 0.0);
        auto minus = shifted(k, -h, k, 0.0);
        return (g_at(plus, i, j) - g_at(minus, i, j)) / (2.0 * h);
    };
    // second derivatives of the metric entries
    auto d2g = [&](int i, int j, int k, int l) {
        return (g_at(shifted(k, h, l, h), i, j) - g_at(shifted(k, h, l, -h), i, j) -
                g_at(shifted(k, -h, l, h), i, j) + g_at(shifted(k, -h, l, -h), i, j)) /
               (4.0 * h * h);
    };

    std::vector<double> gamma(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                gamma[(static_cast<size_t>(i) * n + j) * n + k] =
                    0.5 * (dg(i, j, k) + dg(j, k, i) - dg(i, k, j));
    auto gam = [&](int i, int j, int k) { return gamma[(static_cast<size_t>(i) * n + j) * n + k]; };

    // exact closed form at the same float point, for comparison
    std::vector<double> t3(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Form fij = hess[i][j];
            for (int k = 0; k < n; ++k)
                t3[(static_cast<size_t>(i) * n + j) * n + k] =
                    fij.derivative(k).evaluate(std::span<const double>(base));
        }
    auto f3 = [&](int i, int j, int k) { return t3[(static_cast<size_t>(i) * n + j) * n + k]; };
    const double pref = -1.0 / (4.0 * d * d * (d - 1.0) * (d - 1.0));

    double max_exact = 0.0, max_dev = 0.0;
    std::vector<double> exact(static_cast<size_t>(n) * n * n * n);
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l, ++idx) {
                    double s = 0.0;
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q)
                            s += ginv[p][q] * (f3(j, l, p) * f3(i, k, q) - f3(i, l, p) * f3(j, k, q));
                    exact[idx] = pref * s;
                    max_exact = std::max(max_exact, std::fabs(exact[idx]));
                }
    const double denom = std::max(1.0, max_exact);

    idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l, ++idx) {
                    double second = -0.5 * (d2g(i, k, j, l) + d2g(j, l, i, k) - d2g(i, l, j, k) -
                                            d2g(j, k, i, l));
                    double gg = 0.0;
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q)
                            gg += ginv[p][q] *
                                  (gam(j, p, l) * gam(i, q, k) - gam(i, p, l) * gam(j, q, k));
                    const double numeric = second - gg;
                    max_dev = std::max(max_dev, std::fabs(numeric - exact[idx]) / denom);
                }
    return max_dev;
}

ScalingCheckReport warp_scaling_check(const Form& f, std::span<const Rational> point,
                                      const PlaneSpec& plane,
                                      const std::vector<Rational>& scales) {
    const int d = homogeneous_degree(f, 2, "warp_scaling_check");
    ScalingCheckReport rep;
    const Rational k_base = sectional_curvature(f, point, plane);
    const Rational k_m_base = sectional_curvature_on_m(f, point, plane);
    for (const Rational& c : scales) {
        if (c.sign() <= 0) throw std::invalid_argument("warp_scaling_check: scales must be positive");
        ScalingCheckReport::Entry e;
        e.scale = c;
        const auto scaled = scale_point(point, c);
        e.lhs = sectional_curvature(f, scaled, plane) * c.pow(d);
        e.rhs = k_base;
        e.k_m_at_scaled = sectional_curvature_on_m(f, scaled, plane);
        e.ok = (e.lhs == e.rhs) && (e.k_m_at_scaled == k_m_base);
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

LogMetricReport log_metric_product_check(const Form& f,
                                         const std::vector<std::vector<Rational>>& samples,
                                         double tolerance) {
    const int d = homogeneous_degree(f, 2, "log_metric_product_check");
    const int n = f.arity();
    const double sqrt_d = std::sqrt(static_cast<double>(d));

    std::vector<std::vector<Form>> hess(n, std::vector<Form>(n, Form(n)));
    std::vector<Form> grad;
    for (int i = 0; i < n; ++i) grad.push_back(f.derivative(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) hess[i][j] = grad[i].derivative(j);

    LogMetricReport rep;
    for (const auto& sample : samples) {
        std::vector<double> yv(n);
        for (int i = 0; i < n; ++i) yv[i] = sample[i].to_double();
        const double fy = f.evaluate(std::span<const double>(yv));
        if (fy <= 0.0)
            throw std::domain_error("log_metric_product_check: f must be positive at samples");

        // y = e^{t/sqrt(d)} x with f(x) = 1
        const double lambda = std::pow(fy, 1.0 / d);
        std::vector<double> xv(n);
        for (int i = 0; i < n; ++i) xv[i] = yv[i] / lambda;

        // tangent frame of M at x: kill the gradient component
        std::vector<double> gx(n);
        int jmax = 0;
        for (int i = 0; i < n; ++i) {
            gx[i] = grad[i].evaluate(std::span<const double>(xv));
            if (std::fabs(gx[i]) > std::fabs(gx[jmax])) jmax = i;
        }
        std::vector<std::vector<double>> frame;  // n-1 tangent vectors
        for (int i = 0; i < n; ++i) {
            if (i == jmax) continue;
            std::vector<double> v(n, 0.0);
            v[i] = 1.0;
            v[jmax] = -gx[i] / gx[jmax];
            frame.push_back(std::move(v));
        }

        // product metric blocks at (t, x)
        std::vector<std::vector<double>> hx(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                hx[i][j] = -hess[i][j].evaluate(std::span<const double>(xv));

        // log-Hessian metric at y
        const double fy2 = fy * fy;
        std::vector<double> gy(n);
        for (int i = 0; i < n; ++i) gy[i] = grad[i].evaluate(std::span<const double>(yv));
        std::vector<std::vector<double>> hy(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                hy[i][j] = -(hess[i][j].evaluate(std::span<const double>(yv)) * fy - gy[i] * gy[j]) / fy2;

        auto pair_y = [&](const std::vector<double>& u, const std::vector<double>& v) {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) s += hy[i][j] * u[i] * v[j];
            return s;
        };

        // analytic differential: d alpha(dt) = y/sqrt(d), d alpha(v) = lambda v
        std::vector<double> dt_image(n);
        for (int i = 0; i < n; ++i) dt_image[i] = yv[i] / sqrt_d;

        double dev = std::fabs(pair_y(dt_image, dt_image) - 1.0);
        for (size_t a = 0; a < frame.size(); ++a) {
            std::vector<double> va(n);
            for (int i = 0; i < n; ++i) va[i] = lambda * frame[a][i];
            dev = std::max(dev, std::fabs(pair_y(dt_image, va) - 0.0));
            for (size_t b = a; b < frame.size(); ++b) {
                std::vector<double> vb(n);
                for (int i = 0; i < n; ++i) vb[i] = lambda * frame[b][i];
                double expected = 0.0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) expected += hx[i][j] * frame[a][i] * frame[b][j];
                dev = std::max(dev, std::fabs(pair_y(va, vb) - expected));
            }
        }
        rep.max_deviation = std::max(rep.max_deviation, dev);
        ++rep.samples_checked;
    }
    rep.pass = rep.samples_checked > 0 && rep.max_deviation < tolerance;
    return rep;
}

}  // namespace hessform
