#include "exptrop/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <unsupported/Eigen/Polynomials>

#include "exptrop/rotundity.hpp"
#include "exptrop/tropical.hpp"

namespace exptrop {

namespace {

cplx horner(const std::vector<cplx>& c, cplx x) {
    cplx v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

cplx horner_derivative(const std::vector<cplx>& c, cplx x) {
    cplx v = 0;
    for (std::size_t k = c.size(); k-- > 1;) v = v * x + static_cast<double>(k) * c[k];
    return v;
}

double relative_residual(const ExpSum& f, const CVec& w) {
    const double mag = f.magnitude_laurent(w);
    return mag > 0 ? std::abs(f.eval_laurent(w)) / mag : std::abs(f.eval_laurent(w));
}

std::vector<double> float_exponent(const Term& t) {
    std::vector<double> e;
    for (const auto& c : t.exponent) e.push_back(c.re().to_double());
    return e;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

/// Coordinates whose exponent is not constant across the terms of f.
std::vector<std::size_t> occurring(const ExpSum& f) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < f.n(); ++k) {
        bool varies = false;
        for (const auto& t : f.terms()) varies |= t.exponent[k] != f.terms()[0].exponent[k];
        if (varies) out.push_back(k);
    }
    return out;
}

/// Roots in the coordinate k of f with the other coordinates fixed to w.
std::vector<cplx> roots_in(const ExpSum& f, std::size_t k, const CVec& w) {
    long lo = 0;
    long hi = 0;
    bool first = true;
    for (std::size_t t = 0; t < f.size(); ++t) {
        const long e = f.integer_exponent(t)[k];
        lo = first ? e : std::min(lo, e);
        hi = first ? e : std::max(hi, e);
        first = false;
    }
    std::vector<cplx> coeffs(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (std::size_t t = 0; t < f.size(); ++t) {
        const auto e = f.integer_exponent(t);
        cplx c = f.terms()[t].coeff.to_complex();
        for (std::size_t j = 0; j < f.n(); ++j)
            if (j != k && e[j] != 0) c *= std::pow(w[j], static_cast<double>(e[j]));
        coeffs[static_cast<std::size_t>(e[k] - lo)] += c;
    }
    std::vector<cplx> out;
    for (cplx r : polynomial_roots(coeffs))
        if (std::abs(r) > 0 && std::isfinite(r.real()) && std::isfinite(r.imag())) out.push_back(r);
    return out;
}

bool triangle(double a, double b, double c) {
    const double slack = 1e-12 * (a + b + c);
    return a <= b + c + slack && b <= a + c + slack && c <= a + b + slack;
}

/// Exact certificate for two- and three-term polynomials whose exponent differences have full rank.
std::optional<std::optional<CVec>> few_term_witness(const ExpSum& f, const std::vector<double>& x) {
    const std::size_t n = f.n();
    const std::size_t m = f.size();
    if (m != 2 && m != 3) return std::nullopt;
    std::vector<std::vector<double>> e;
    std::vector<double> mod;
    std::vector<double> arg;
    for (const auto& t : f.terms()) {
        e.push_back(float_exponent(t));
        const cplx c = t.coeff.to_complex();
        mod.push_back(std::abs(c) * std::exp(dot(e.back(), x)));
        arg.push_back(std::arg(c));
    }
    // Target phases of the term values so that they sum to zero.
    std::vector<double> target(m);
    if (m == 2) {
        if (std::abs(mod[0] - mod[1]) > 1e-12 * (mod[0] + mod[1])) return std::optional<CVec>();
        target = {0.0, M_PI};
    } else {
        if (!triangle(mod[0], mod[1], mod[2])) return std::optional<CVec>();
        const double cphi = std::clamp((mod[2] * mod[2] - mod[0] * mod[0] - mod[1] * mod[1]) / (2 * mod[0] * mod[1]),
                                       -1.0, 1.0);
        const cplx v1 = std::polar(mod[1], std::acos(cphi));
        const cplx v2 = -(mod[0] + v1);
        target = {0.0, std::arg(v1), std::arg(v2)};
    }
    // Solve (e_k - e_0) . theta = delta_k on a nonsingular minor.
    std::vector<std::vector<double>> D;
    std::vector<double> delta;
    for (std::size_t k = 1; k < m; ++k) {
        std::vector<double> d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = e[k][j] - e[0][j];
        D.push_back(d);
        delta.push_back(target[k] - arg[k] - (target[0] - arg[0]));
    }
    std::vector<double> theta(n, 0.0);
    if (m == 2) {
        std::size_t p = 0;
        while (p < n && D[0][p] == 0) ++p;
        if (p == n) return std::nullopt;
        theta[p] = delta[0] / D[0][p];
    } else {
        bool solved = false;
        for (std::size_t p = 0; p < n && !solved; ++p)
            for (std::size_t q = p + 1; q < n && !solved; ++q) {
                const double det = D[0][p] * D[1][q] - D[0][q] * D[1][p];
                if (std::abs(det) < 1e-12) continue;
                theta[p] = (delta[0] * D[1][q] - D[0][q] * delta[1]) / det;
                theta[q] = (D[0][p] * delta[1] - delta[0] * D[1][p]) / det;
                solved = true;
            }
        if (!solved) return std::nullopt;
    }
    CVec w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = std::polar(std::exp(x[j]), theta[j]);
    if (relative_residual(f, w) > 1e-9) return std::nullopt;
    return std::optional<CVec>(w);
}

struct PhaseSearch {
    const ExpSum& f;
    const std::vector<double>& x;
    std::size_t solved;
    std::vector<std::size_t> phased;

    /// Smallest |log|r| - x_k| over the roots r, and the corresponding point.
    std::pair<double, CVec> eval(const std::vector<double>& theta) const {
        CVec w(f.n());
        for (std::size_t j = 0; j < f.n(); ++j) w[j] = std::exp(x[j]);
        for (std::size_t i = 0; i < phased.size(); ++i) w[phased[i]] = std::polar(std::exp(x[phased[i]]), theta[i]);
        double best = INFINITY;
        CVec best_w = w;
        for (cplx r : roots_in(f, solved, w)) {
            const double gap = std::abs(std::log(std::abs(r)) - x[solved]);
            if (gap < best) {
                best = gap;
                best_w = w;
                best_w[solved] = r;
            }
        }
        return {best, best_w};
    }
};

}  // namespace

std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs) {
    while (!coeffs.empty() && coeffs.back() == cplx(0)) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    std::vector<cplx> roots;
    if (coeffs.size() == 2) {
        roots.push_back(-coeffs[0] / coeffs[1]);
    } else {
        Eigen::VectorXcd c(static_cast<Eigen::Index>(coeffs.size()));
        for (std::size_t k = 0; k < coeffs.size(); ++k) c[static_cast<Eigen::Index>(k)] = coeffs[k];
        Eigen::PolynomialSolver<cplx, Eigen::Dynamic> solver(c);
        for (Eigen::Index k = 0; k < solver.roots().size(); ++k) roots.push_back(solver.roots()[k]);
    }
    for (auto& r : roots) {
        for (int it = 0; it < 3; ++it) {
            const cplx d = horner_derivative(coeffs, r);
            if (d == cplx(0)) break;
            const cplx step = horner(coeffs, r) / d;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            r -= step;
        }
    }
    return roots;
}

AmoebaSample sample_amoeba(const Instance& inst, double t, std::size_t count, std::uint64_t seed,
                           const AmoebaOptions& opt) {
    if (inst.W.size() != 1) throw PreconditionError("unsupported W shape: amoeba sampling needs a single W polynomial");
    if (!(t > 1)) throw PreconditionError("the logarithm base t must exceed 1");
    const ExpSum& f = inst.W[0];
    const auto coords = occurring(f);
    if (coords.empty()) throw PreconditionError("unsupported W shape: no coordinate occurs in the polynomial");
    const double lt = std::log(t);

    AmoebaSample out;
    out.base = t;
    out.source = inst.name;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> logmod(-opt.radius, opt.radius);
    std::uniform_real_distribution<double> phase(0.0, 2 * M_PI);
    std::size_t draws = 0;
    std::size_t failures = 0;
    while (out.points.size() < count) {
        const std::size_t k = coords[draws % coords.size()];
        ++draws;
        CVec w(f.n());
        for (std::size_t j = 0; j < f.n(); ++j) {
            const double lm = logmod(rng);
            const double ph = phase(rng);
            w[j] = std::polar(std::exp(lm * lt), ph);
        }
        bool any = false;
        for (cplx r : roots_in(f, k, w)) {
            w[k] = r;
            const double res = relative_residual(f, w);
            if (!(res < 1e-9)) continue;
            FloatPoint p(f.n());
            for (std::size_t j = 0; j < f.n(); ++j) p[j] = std::log(std::abs(w[j])) / lt;
            out.points.push_back(std::move(p));
            out.max_residual = std::max(out.max_residual, res);
            any = true;
            if (out.points.size() == count) break;
        }
        if (!any) ++failures;
        if (draws >= 20 && 2 * failures > draws)
            throw PreconditionError("amoeba sampling: root finding failed for more than half of the draws");
    }
    return out;
}

bool amoeba_member_line(const std::vector<double>& x, cplx a, cplx b, cplx c) {
    if (x.size() != 2) throw DimensionMismatch("line amoeba membership is for points in R^2");
    if (a == cplx(0) || b == cplx(0) || c == cplx(0)) throw PreconditionError("line amoeba needs nonzero coefficients");
    return triangle(std::abs(a) * std::exp(x[0]), std::abs(b) * std::exp(x[1]), std::abs(c));
}

std::optional<CVec> amoeba_witness(const ExpSum& f, const std::vector<double>& x, double tol, std::uint64_t seed) {
    if (x.size() != f.n()) throw DimensionMismatch("point and polynomial arity differ");
    if (auto exact = few_term_witness(f, x)) return *exact;
    const auto coords = occurring(f);
    if (coords.empty()) return std::nullopt;
    PhaseSearch search{f, x, coords.back(), {}};
    for (std::size_t j = 0; j < f.n(); ++j)
        if (j != search.solved) search.phased.push_back(j);
    const std::size_t p = search.phased.size();

    std::vector<double> best_theta(p, 0.0);
    auto [best, best_w] = search.eval(best_theta);
    if (p == 1) {
        const int N = 1024;
        for (int k = 1; k < N; ++k) {
            const std::vector<double> th{2 * M_PI * k / N};
            auto [g, w] = search.eval(th);
            if (g < best) std::tie(best, best_w, best_theta) = std::tie(g, w, th);
        }
    } else if (p > 1) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> phase(0.0, 2 * M_PI);
        for (int k = 0; k < 4000; ++k) {
            std::vector<double> th(p);
            for (auto& v : th) v = phase(rng);
            auto [g, w] = search.eval(th);
            if (g < best) std::tie(best, best_w, best_theta) = std::tie(g, w, th);
        }
    }
    // Pattern search around the best phases.
    double step = p > 0 ? 2 * M_PI / 256 : 0;
    while (step > 1e-13 && best > 1e-14) {
        bool improved = false;
        for (std::size_t i = 0; i < p; ++i)
            for (double s : {step, -step}) {
                std::vector<double> th = best_theta;
                th[i] += s;
                auto [g, w] = search.eval(th);
                if (g < best) {
                    std::tie(best, best_w, best_theta) = std::tie(g, w, th);
                    improved = true;
                }
            }
        if (!improved) step /= 2;
    }
    if (best < tol && relative_residual(f, best_w) < 1e-9) return best_w;
    return std::nullopt;
}

std::vector<ConvergenceRow> convergence_experiment(const Instance& inst, const std::vector<double>& ts,
                                                   std::size_t count, std::uint64_t seed, const AmoebaOptions& opt,
                                                   double grid_step) {
    if (inst.W.size() != 1) throw PreconditionError("the convergence experiment needs a hypersurface W");
    const TropicalComplex trop = trop_hypersurface(inst.W[0]);
    const auto grid = sample_complex(trop.complex, opt.radius, grid_step);
    if (grid.empty()) throw PreconditionError("the tropicalization has no points in the sampling box");
    std::vector<ConvergenceRow> out;
    for (double t : ts) {
        const AmoebaSample s = sample_amoeba(inst, t, count, seed, opt);
        std::vector<FloatPoint> clipped;
        for (const auto& p : s.points)
            if (std::all_of(p.begin(), p.end(), [&](double v) { return std::abs(v) <= opt.radius; }))
                clipped.push_back(p);
        if (clipped.empty()) throw PreconditionError("no amoeba sample falls inside the box");
        out.push_back({t, hausdorff_distance(clipped, grid)});
    }
    return out;
}

RealTracePoint real_trace_point(const Instance& inst, std::uint64_t seed) {
    if (!inst.real_L()) throw PreconditionError("the real trace needs L defined over the reals");
    if (!inst.balanced()) throw PreconditionError("the real trace needs a balanced instance (dim L = #W)");
    if (!is_rotund(inst).rotund) throw PreconditionError("instance is not rotund (is_rotund = false)");
    if (!is_additively_free(inst.L, inst.n)) throw PreconditionError("instance is not additively free");
    const auto B = inst.basis();
    const std::size_t d = B.size();
    if (d == 0 || d > 2) throw PreconditionError("the real trace search handles dim L in {1, 2}");
    std::vector<std::vector<double>> Bf;
    for (const auto& b : B) {
        std::vector<double> v;
        for (const auto& c : b) v.push_back(c.re().to_double());
        Bf.push_back(v);
    }

    auto attempt = [&](const std::vector<double>& s) -> std::optional<RealTracePoint> {
        std::vector<double> x(inst.n, 0.0);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t k = 0; k < inst.n; ++k) x[k] += s[c] * Bf[c][k];
        RealTracePoint r;
        r.x = x;
        r.outer_approximation = inst.W.size() > 1;
        for (const auto& f : inst.W) {
            auto w = amoeba_witness(f, x, 1e-9, seed);
            if (!w) return std::nullopt;
            r.certificates.push_back(*w);
        }
        r.phase = std::arg(r.certificates[0][0]);
        return r;
    };

    const double delta = 0.01;
    const int reach = 2000;
    if (d == 1) {
        // Thin parts of the amoeba can fall between grid steps; they sit where the
        // dominant monomial switches, so such steps are refined by bisection to the tie.
        auto dominant = [&](double s) {
            const ExpSum& f = inst.W[0];
            std::size_t best = 0;
            double top = -INFINITY;
            for (std::size_t k = 0; k < f.terms().size(); ++k) {
                const Term& t = f.terms()[k];
                double v = std::log(std::abs(t.coeff.to_complex()));
                const auto e = float_exponent(t);
                for (std::size_t j = 0; j < inst.n; ++j) v += e[j] * s * Bf[0][j];
                if (v > top) top = v, best = k;
            }
            return best;
        };
        std::size_t prev_dom[2] = {dominant(0), dominant(0)};
        for (int k = 0; k <= reach; ++k)
            for (int sgn : {1, -1}) {
                if (k == 0 && sgn < 0) continue;
                const double s = sgn * k * delta;
                if (auto r = attempt({s})) return *r;
                const std::size_t dom = dominant(s);
                std::size_t& prev = prev_dom[sgn > 0 ? 0 : 1];
                if (k > 0 && dom != prev) {
                    double lo = s - sgn * delta;
                    double hi = s;
                    const std::size_t left = prev;
                    for (int it = 0; it < 60; ++it) {
                        const double mid = 0.5 * (lo + hi);
                        (dominant(mid) == left ? lo : hi) = mid;
                    }
                    if (auto r = attempt({0.5 * (lo + hi)})) return *r;
                }
                prev = dom;
            }
    } else {
        // Square rings of growing radius on the coefficient grid.
        for (int ring = 0; ring <= reach / 10; ++ring)
            for (int i = -ring; i <= ring; ++i)
                for (int j = -ring; j <= ring; ++j) {
                    if (std::max(std::abs(i), std::abs(j)) != ring) continue;
                    if (auto r = attempt({i * delta * 5, j * delta * 5})) return *r;
                }
    }
    throw NotFound("real trace search budget exhausted without meeting the amoeba");
}

}  // namespace exptrop
