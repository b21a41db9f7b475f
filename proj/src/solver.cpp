#include "exptrop/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "exptrop/amoeba.hpp"
#include "exptrop/rotundity.hpp"
#include "exptrop/tropical.hpp"

namespace exptrop {

namespace {

using EMat = Eigen::MatrixXcd;
using EVec = Eigen::VectorXcd;

double max_abs(const CVec& v) {
    double m = 0;
    for (cplx x : v) m = std::max(m, std::abs(x));
    return m;
}

bool finite(const CVec& v) {
    return std::all_of(v.begin(), v.end(), [](cplx x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

/// Least squares coefficients u with sum_c u_c basis[c] closest to z.
CVec coordinates_in(const std::vector<CVec>& basis, const CVec& z) {
    const std::size_t d = basis.size();
    if (d == 0) return {};
    EMat B(static_cast<Eigen::Index>(z.size()), static_cast<Eigen::Index>(d));
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t k = 0; k < z.size(); ++k) B(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c)) = basis[c][k];
    EVec rhs(static_cast<Eigen::Index>(z.size()));
    for (std::size_t k = 0; k < z.size(); ++k) rhs[static_cast<Eigen::Index>(k)] = z[k];
    const EVec u = B.colPivHouseholderQr().solve(rhs);
    return CVec(u.data(), u.data() + u.size());
}

std::string describe_cell(const Polyhedron& tau) {
    std::ostringstream os;
    os << "tau dim " << tau.dim() << " through (";
    const auto& p = tau.relint_point();
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? ", " : "") << p[k].to_double();
    os << ")";
    return os.str();
}

mpz_class lcm_of(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Scales a rational vector to a primitive integer vector.
std::vector<long> primitive(const std::vector<mpq_class>& v) {
    mpz_class den = 1;
    for (const auto& x : v) den = lcm_of(den, x.get_den());
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class k = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
        ints.push_back(k);
    }
    std::vector<long> out;
    for (auto& k : ints) {
        if (g != 0) k /= g;
        if (!k.fits_slong_p()) throw PreconditionError("integer row overflows a machine word");
        out.push_back(k.get_si());
    }
    return out;
}

mpq_class rational_of(const ExactReal& x) {
    if (!x.is_rational()) throw PreconditionError("expected a rational scalar");
    return x.rational_part();
}

}  // namespace

CVec SquareSystem::eval(const CVec& u) const {
    CVec out;
    for (const auto& eq : equations) {
        cplx s = 0;
        for (const auto& t : eq) {
            cplx e = 0;
            for (std::size_t c = 0; c < d; ++c) e += t.row[c] * u[c];
            s += t.coeff * std::exp(e);
        }
        out.push_back(s);
    }
    return out;
}

std::vector<CVec> SquareSystem::jacobian(const CVec& u) const {
    std::vector<CVec> J;
    for (const auto& eq : equations) {
        CVec row(d, 0.0);
        for (const auto& t : eq) {
            cplx e = 0;
            for (std::size_t c = 0; c < d; ++c) e += t.row[c] * u[c];
            const cplx v = t.coeff * std::exp(e);
            for (std::size_t c = 0; c < d; ++c) row[c] += t.row[c] * v;
        }
        J.push_back(row);
    }
    return J;
}

CVec SquareSystem::to_z(const CVec& u) const {
    CVec z(n, 0.0);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t k = 0; k < n; ++k) z[k] += u[c] * basis[c][k];
    return z;
}

SquareSystem build_square_system(const Instance& inst) {
    if (!inst.balanced())
        throw PreconditionError("square system needs a balanced instance (dim L = " + std::to_string(inst.dim_L()) +
                                ", #W = " + std::to_string(inst.W.size()) + ")");
    SquareSystem sys;
    sys.n = inst.n;
    sys.d = inst.dim_L();
    if (sys.d == 0) return sys;
    for (auto b : inst.basis()) {
        const auto lead = std::find_if(b.begin(), b.end(), [](const ExactComplex& x) { return !x.is_zero(); });
        const ExactComplex s = *lead;
        for (auto& x : b) x /= s;
        CVec f;
        for (const auto& x : b) f.push_back(x.to_complex());
        sys.basis_exact.push_back(std::move(b));
        sys.basis.push_back(std::move(f));
    }
    for (const auto& poly : inst.W) {
        std::vector<SystemTerm> eq;
        for (std::size_t j = 0; j < poly.size(); ++j) {
            const auto k = poly.integer_exponent(j);
            CVec row(sys.d, 0.0);
            for (std::size_t c = 0; c < sys.d; ++c)
                for (std::size_t i = 0; i < inst.n; ++i) row[c] += static_cast<double>(k[i]) * sys.basis[c][i];
            eq.push_back({poly.terms()[j].coeff.to_complex(), row});
        }
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

std::vector<std::pair<long, long>> convergents(const ExactReal& x, long Q) {
    if (Q < 1) throw PreconditionError("denominator bound Q must be at least 1");
    std::vector<std::pair<long, long>> out;
    // p_k = a_k p_{k-1} + p_{k-2}, likewise q_k.
    long p0 = 1, q0 = 0;
    long p1 = 0, q1 = 1;
    ExactReal r = x;
    for (int step = 0; step < 64; ++step) {
        const mpz_class a = r.floor();
        if (!a.fits_slong_p()) break;
        const long ai = a.get_si();
        const long p = ai * p0 + p1;
        const long q = ai * q0 + q1;
        if (q > Q) break;
        out.emplace_back(p, q);
        p1 = p0, q1 = q0, p0 = p, q0 = q;
        const ExactReal frac = r - ExactReal(mpq_class(a));
        if (frac.is_zero() || (!frac.is_exact() && std::abs(frac.to_double()) < 1e-12)) break;
        r = ExactReal(1) / frac;
    }
    return out;
}

RationalApproximation rational_approximation(const Instance& inst, long Q) {
    if (Q < 1) throw PreconditionError("denominator bound Q must be at least 1");
    if (!inst.real_L()) throw PreconditionError("rational approximation needs L defined over the reals");
    RationalApproximation out;
    out.Q = Q;
    for (const auto& lambda : inst.L) {
        // Pivot on the last rational entry (the last nonzero one if none is rational).
        std::size_t p = inst.n;
        for (std::size_t k = inst.n; k-- > 0;)
            if (!lambda[k].is_zero() && lambda[k].re().is_rational()) {
                p = k;
                break;
            }
        if (p == inst.n)
            for (std::size_t k = inst.n; k-- > 0;)
                if (!lambda[k].is_zero()) {
                    p = k;
                    break;
                }
        // lambda . z = 0  <=>  sum_{k != p} c_k z_k - z_p = 0 with c_k = -lambda_k / lambda_p.
        std::vector<mpq_class> row(inst.n, 0);
        row[p] = -1;
        for (std::size_t k = 0; k < inst.n; ++k) {
            if (k == p || lambda[k].is_zero()) continue;
            const ExactReal c = (-lambda[k] / lambda[p]).re();
            if (c.is_rational()) {
                row[k] = c.rational_part();
                continue;
            }
            const auto cf = convergents(c, Q);
            if (cf.empty()) throw PreconditionError("no convergent with denominator <= Q");
            out.convergents.push_back(cf.back());
            row[k] = mpq_class(cf.back().first, cf.back().second);
            row[k].canonicalize();
        }
        out.rows.push_back(primitive(row));
    }
    out.system = inst.W;
    for (const auto& r : out.rows) {
        std::vector<long> pos(inst.n, 0), neg(inst.n, 0);
        for (std::size_t k = 0; k < inst.n; ++k) (r[k] > 0 ? pos : neg)[k] = std::abs(r[k]);
        out.system.push_back(ExpSum::laurent(inst.n, {{ExactComplex(1), pos}, {ExactComplex(-1), neg}}));
    }
    if (out.rows.empty()) {
        for (std::size_t k = 0; k < inst.n; ++k) {
            std::vector<long> e(inst.n, 0);
            e[k] = 1;
            out.lattice.push_back(e);
        }
    } else {
        Matrix<ExactReal> M;
        for (const auto& r : out.rows) {
            RealVec v;
            for (long x : r) v.push_back(ExactReal(mpq_class(x)));
            M.push_back(v);
        }
        for (const auto& v : nullspace(M, inst.n)) {
            std::vector<mpq_class> q;
            for (const auto& x : v) q.push_back(rational_of(x));
            auto e = primitive(q);
            const auto lead = std::find_if(e.begin(), e.end(), [](long x) { return x != 0; });
            if (lead != e.end() && *lead < 0)
                for (auto& x : e) x = -x;
            out.lattice.push_back(e);
        }
    }
    const std::size_t d = out.lattice.size();
    for (const auto& poly : inst.W) {
        std::vector<std::pair<ExactComplex, std::vector<long>>> terms;
        for (std::size_t j = 0; j < poly.size(); ++j) {
            const auto k = poly.integer_exponent(j);
            std::vector<long> e(d, 0);
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t i = 0; i < inst.n; ++i) e[c] += k[i] * out.lattice[c][i];
            terms.emplace_back(poly.terms()[j].coeff, e);
        }
        out.reduced.push_back(ExpSum::laurent(d, terms));
    }
    return out;
}

std::vector<CVec> lift_rational_roots(const RationalApproximation& approx, const SquareSystem& sys) {
    if (approx.lattice.size() != 1 || sys.d != 1 || approx.reduced.size() != 1)
        throw PreconditionError("lifting rational roots handles dim L = 1");
    const ExpSum& g = approx.reduced[0];
    long lo = 0, hi = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const long e = g.integer_exponent(j)[0];
        lo = j ? std::min(lo, e) : e;
        hi = j ? std::max(hi, e) : e;
    }
    std::vector<cplx> coeffs(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (std::size_t j = 0; j < g.size(); ++j)
        coeffs[static_cast<std::size_t>(g.integer_exponent(j)[0] - lo)] += g.terms()[j].coeff.to_complex();
    std::vector<CVec> out;
    for (cplx v : polynomial_roots(coeffs)) {
        if (std::abs(v) == 0) continue;
        const cplx s = std::log(v);
        CVec z;
        for (long e : approx.lattice[0]) z.push_back(static_cast<double>(e) * s);
        out.push_back(coordinates_in(sys.basis, z));
    }
    return out;
}

std::vector<CVec> binomial_initial_solutions(const Instance& initial, std::size_t count) {
    const SquareSystem sys = build_square_system(initial);
    const std::size_t d = sys.d;
    EMat M(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    CVec logs;
    for (std::size_t j = 0; j < initial.W.size(); ++j) {
        const ExpSum& f = initial.W[j];
        if (f.size() != 2) throw PreconditionError("closed-form initial solutions need binomial W_tau");
        // c1 w^a + c2 w^b = 0  <=>  (a - b) . z = log(-c2 / c1) + 2 pi i m, with a the
        // lexicographically larger exponent (terms are sorted ascending).
        const auto& ta = sys.equations[j][1];
        const auto& tb = sys.equations[j][0];
        for (std::size_t c = 0; c < d; ++c)
            M(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)) = ta.row[c] - tb.row[c];
        logs.push_back(std::log(-tb.coeff / ta.coeff));
    }
    Eigen::FullPivLU<EMat> lu(M);
    if (d > 0 && !lu.isInvertible()) throw PreconditionError("binomial initial system is degenerate on L");
    std::vector<CVec> out;
    for (std::size_t h = 0; h < count; ++h) {
        const double m = -1.0 - static_cast<double>(h);
        EVec rhs(static_cast<Eigen::Index>(d));
        for (std::size_t j = 0; j < d; ++j) rhs[static_cast<Eigen::Index>(j)] = logs[j] + cplx(0, 2 * M_PI * m);
        const EVec u = d > 0 ? EVec(lu.solve(rhs)) : EVec();
        out.push_back(sys.to_z(CVec(u.data(), u.data() + u.size())));
    }
    return out;
}

std::vector<StartPoint> tropical_starts(const Instance& inst, std::size_t k, std::uint64_t seed) {
    const SquareSystem sys = build_square_system(inst);
    const std::size_t d = sys.d;
    std::vector<StartPoint> out;
    if (d == 0) return {StartPoint{{}, "trivial", std::nullopt}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-10, 10);

    if (inst.real_L()) {
        std::optional<RealTracePoint> trace;
        if (d <= 2) {
            try {
                trace = real_trace_point(inst, seed);
            } catch (const NotFound&) {
            }
        }
        if (trace) {
            CVec x(trace->x.begin(), trace->x.end());
            CVec s = coordinates_in(sys.basis, x);
            for (auto& c : s) c = c.real();
            if (d == 1) {
                // Phase of the certificate on the first coordinate of L, shifted by whole turns.
                const auto lead = std::find_if(sys.basis[0].begin(), sys.basis[0].end(), [](cplx b) { return b != 0.0; });
                const std::size_t j = static_cast<std::size_t>(lead - sys.basis[0].begin());
                const double theta = std::arg(trace->certificates[0][j]);
                for (int m = 0; out.size() < k / 4; m = m > 0 ? -m : 1 - m)
                    out.push_back({{s[0] + cplx(0, theta + 2 * M_PI * m)}, "real_trace", std::nullopt});
            }
            while (out.size() < k / 2) {
                CVec u = s;
                for (auto& c : u) c += cplx(0, box(rng));
                out.push_back({u, "real_trace", std::nullopt});
            }
        }
    } else {
        const auto cells = find_witness_cells(inst);
        std::vector<const WitnessCell*> binomial;
        for (const auto& c : cells)
            if (std::all_of(c.initial.W.begin(), c.initial.W.end(), [](const ExpSum& f) { return f.size() == 2; }))
                binomial.push_back(&c);
        if (!binomial.empty()) {
            const std::size_t per = std::max<std::size_t>(1, k / (2 * binomial.size()));
            // Interleave the families so every cell contributes its first members.
            std::vector<std::vector<CVec>> families;
            for (const auto* c : binomial) families.push_back(binomial_initial_solutions(c->initial, per));
            for (std::size_t h = 0; h < per && out.size() < k; ++h)
                for (std::size_t c = 0; c < binomial.size() && out.size() < k; ++c)
                    out.push_back({coordinates_in(sys.basis, families[c][h]), "witness_cell", describe_cell(binomial[c]->tau)});
        }
    }
    while (out.size() < k) {
        CVec u(d);
        for (auto& c : u) c = cplx(box(rng), box(rng));
        out.push_back({u, "random", std::nullopt});
    }
    out.resize(k);
    return out;
}

double SolutionCertificate::max_residual() const {
    double m = 0;
    for (double r : residuals) m = std::max(m, r);
    return m;
}

std::string NewtonCensus::to_string() const {
    std::ostringstream os;
    os << starts << " starts: " << converged << " converged (" << duplicates << " duplicates), " << singular
       << " singular, " << stalled << " stalled, " << exhausted << " hit the iteration limit";
    return os.str();
}

namespace {

/// Solution of J(u) step = -F, or nullopt when the Jacobian is singular.
std::optional<CVec> newton_step(const SquareSystem& sys, const CVec& u, const CVec& F) {
    const auto d = static_cast<Eigen::Index>(sys.d);
    if (d == 0) return std::nullopt;
    const auto rows = sys.jacobian(u);
    EMat J(d, d);
    EVec rhs(d);
    for (Eigen::Index a = 0; a < d; ++a) {
        rhs[a] = -F[static_cast<std::size_t>(a)];
        for (Eigen::Index b = 0; b < d; ++b) J(a, b) = rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    Eigen::FullPivLU<EMat> lu(J);
    if (!lu.isInvertible()) return std::nullopt;
    const EVec step = lu.solve(rhs);
    return CVec(step.data(), step.data() + step.size());
}

}  // namespace

std::vector<SolutionCertificate> newton_solve(const SquareSystem& sys, const std::vector<StartPoint>& starts,
                                              const NewtonOptions& opt, NewtonCensus* census) {
    if (!(opt.tol > 0)) throw PreconditionError("tolerance must be positive");
    NewtonCensus local;
    local.starts = starts.size();
    std::vector<SolutionCertificate> out;
    for (std::size_t si = 0; si < starts.size(); ++si) {
        CVec u = starts[si].u;
        if (u.size() != sys.d) throw DimensionMismatch("start has the wrong dimension");
        CVec F = sys.eval(u);
        double r = max_abs(F);
        std::vector<double> history{r};
        int iter = 0;
        enum { running, done, singular, stalled } state = running;
        while (state == running) {
            if (r < opt.tol) {
                // One polishing step, kept when it lowers the residual further.
                if (const auto step = newton_step(sys, u, F)) {
                    CVec trial = u;
                    for (std::size_t c = 0; c < sys.d; ++c) trial[c] += (*step)[c];
                    const CVec Ft = sys.eval(trial);
                    if (finite(Ft) && max_abs(Ft) < r) {
                        u = trial, F = Ft, r = max_abs(Ft);
                        history.push_back(r);
                    }
                }
                state = done;
                break;
            }
            if (iter == opt.max_iter || !std::isfinite(r)) break;
            const auto step = newton_step(sys, u, F);
            if (!step) {
                state = singular;
                break;
            }
            double lambda = 1;
            bool accepted = false;
            for (int h = 0; h <= opt.halvings; ++h, lambda /= 2) {
                CVec trial = u;
                for (std::size_t c = 0; c < sys.d; ++c) trial[c] += lambda * (*step)[c];
                const CVec Ft = sys.eval(trial);
                const double rt = max_abs(Ft);
                if (finite(Ft) && rt < r) {
                    u = trial, F = Ft, r = rt;
                    accepted = true;
                    break;
                }
            }
            ++iter;
            if (!accepted) {
                state = stalled;
                break;
            }
            history.push_back(r);
        }
        if (state == singular) {
            ++local.singular;
            continue;
        }
        if (state == stalled) {
            ++local.stalled;
            continue;
        }
        if (state == running) {
            ++local.exhausted;
            continue;
        }
        ++local.converged;
        const bool dup = std::any_of(out.begin(), out.end(), [&](const SolutionCertificate& c) {
            double dist = 0;
            for (std::size_t k = 0; k < u.size(); ++k) dist = std::max(dist, std::abs(c.u[k] - u[k]));
            return dist < opt.dedup;
        });
        if (dup) {
            ++local.duplicates;
            continue;
        }
        SolutionCertificate cert;
        cert.u = u;
        cert.z = sys.to_z(u);
        for (cplx zk : cert.z) cert.w.push_back(std::exp(zk));
        for (cplx f : F) cert.residuals.push_back(std::abs(f));
        cert.seed_cell = starts[si].seed_cell;
        cert.source = starts[si].source;
        cert.start_index = si;
        cert.iterations = iter;
        cert.residual_history = history;
        out.push_back(std::move(cert));
    }
    if (census) *census = local;
    return out;
}

namespace {

struct Winding {
    double total = 0;
    bool near_zero = false;
};

void track(const std::function<cplx(cplx)>& f, cplx a, cplx fa, cplx b, cplx fb, int depth, Winding& w) {
    const double turn = std::arg(fb / fa);
    if (std::abs(turn) < 0.3 || depth > 40) {
        w.total += turn;
        return;
    }
    const cplx m = 0.5 * (a + b);
    const cplx fm = f(m);
    if (std::abs(fm) < 1e-8) {
        w.near_zero = true;
        return;
    }
    track(f, a, fa, m, fm, depth + 1, w);
    track(f, m, fm, b, fb, depth + 1, w);
}

std::optional<int> winding(const std::function<cplx(cplx)>& f, Rect r) {
    const cplx corners[5] = {{r.re_lo, r.im_lo}, {r.re_hi, r.im_lo}, {r.re_hi, r.im_hi}, {r.re_lo, r.im_hi}, {r.re_lo, r.im_lo}};
    Winding w;
    for (int s = 0; s < 4; ++s) {
        const cplx a = corners[s];
        const cplx b = corners[s + 1];
        const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / 0.05)));
        cplx prev = a;
        cplx fprev = f(a);
        if (std::abs(fprev) < 1e-8) return std::nullopt;
        for (int k = 1; k <= steps; ++k) {
            const cplx p = a + (b - a) * (static_cast<double>(k) / steps);
            const cplx fp = f(p);
            if (std::abs(fp) < 1e-8) return std::nullopt;
            track(f, prev, fprev, p, fp, 0, w);
            if (w.near_zero) return std::nullopt;
            prev = p, fprev = fp;
        }
    }
    const double turns = w.total / (2 * M_PI);
    if (std::abs(turns - std::round(turns)) > 0.1) return std::nullopt;
    return static_cast<int>(std::lround(turns));
}

}  // namespace

int count_roots_rectangle(const std::function<cplx(cplx)>& f, Rect rect) {
    if (!(rect.re_lo < rect.re_hi && rect.im_lo < rect.im_hi)) throw PreconditionError("rectangle is empty");
    for (int attempt = 0; attempt <= 5; ++attempt) {
        // Irrational multiples keep successive contours from lining up with lattice-like root sets.
        const double eps = 1e-3 * attempt;
        const Rect r{rect.re_lo - eps * M_SQRT2, rect.re_hi + eps * M_E, rect.im_lo - eps * M_PI, rect.im_hi + eps * 1.7};
        if (auto n = winding(f, r)) return *n;
    }
    throw PreconditionError("contour passes within 1e-8 of a zero after 5 perturbations");
}

int count_roots_rectangle(const SquareSystem& sys, Rect rect) {
    if (sys.d != 1) throw PreconditionError("root counting handles dim L = 1");
    return count_roots_rectangle([&](cplx u) { return sys.eval({u})[0]; }, rect);
}

SolveResult solve(const Instance& inst, const SolveConfig& config) {
    inst.validate();
    SolveResult res;
    res.solved = inst;
    if (!inst.balanced()) {
        if (inst.dim_L() < inst.W.size())
            throw PreconditionError("dim L is smaller than #W; the generic intersection is empty");
        res.solved = reduce_dimension(inst, config.seed);
        res.reduced = true;
    }
    const Instance& work = res.solved;
    if (!is_additively_free(work.L, work.n)) throw PreconditionError("instance is not additively free");
    const RotundityReport rot = is_rotund(work);
    if (!rot.rotund) {
        std::string j;
        for (std::size_t k : rot.failing_J.value_or(std::vector<std::size_t>{})) j += (j.empty() ? "" : ", ") + std::to_string(k);
        throw PreconditionError("instance is not rotund (failing J = {" + j + "})");
    }
    if (config.preview_Q > 0 && work.real_L()) res.preview = rational_approximation(work, config.preview_Q);

    const SquareSystem sys = build_square_system(work);
    if (config.rect && sys.d != 1) throw PreconditionError("--rect needs dim L = 1");
    const auto starts = tropical_starts(work, config.starts, config.seed);
    auto certs = newton_solve(sys, starts, config.newton, &res.census);

    // Re-verify against the instance data itself.
    for (auto& c : certs) {
        c.residuals.clear();
        for (const auto& f : work.W) c.residuals.push_back(std::abs(f.eval_laurent(c.w)));
        c.l_residuals.clear();
        for (const auto& row : work.L) {
            cplx s = 0;
            for (std::size_t k = 0; k < work.n; ++k) s += row[k].to_complex() * c.z[k];
            c.l_residuals.push_back(std::abs(s));
        }
        if (c.max_residual() >= config.newton.tol) continue;
        if (std::any_of(c.l_residuals.begin(), c.l_residuals.end(), [](double x) { return x >= 1e-9; })) continue;
        if (config.rect) {
            const cplx u = c.u[0];
            if (u.real() < config.rect->re_lo || u.real() > config.rect->re_hi || u.imag() < config.rect->im_lo ||
                u.imag() > config.rect->im_hi)
                continue;
        }
        res.certificates.push_back(std::move(c));
    }
    if (res.certificates.empty()) throw NotFound("no solution found; " + res.census.to_string());
    return res;
}

}  // namespace exptrop
