#include "exptrop/rotundity.hpp"

#include <cmath>
#include <deque>
#include <numeric>

#include "exptrop/tropical.hpp"

namespace exptrop {

std::string to_string(RotundityMethod m) {
    switch (m) {
        case RotundityMethod::rado: return "rado";
        case RotundityMethod::mixed_volume: return "mixed_volume";
        case RotundityMethod::stable_intersection: return "stable_intersection";
    }
    return "unknown";
}

namespace {

struct Element {
    std::size_t set;
    std::size_t index;
};

bool independent(const std::vector<const ComplexVec*>& vs) {
    if (vs.empty()) return true;
    Matrix<ExactComplex> m;
    for (const auto* v : vs) m.push_back(*v);
    return rank(m) == vs.size();
}

std::vector<std::size_t> smallest_failing_subset(const std::vector<std::vector<ComplexVec>>& sets) {
    const std::size_t m = sets.size();
    for (std::size_t size = 1; size <= m; ++size) {
        // Subsets of the given size in lexicographic order.
        std::vector<std::size_t> J(size);
        std::iota(J.begin(), J.end(), 0);
        for (;;) {
            Matrix<ExactComplex> span;
            for (auto j : J) span.insert(span.end(), sets[j].begin(), sets[j].end());
            if ((span.empty() ? 0 : rank(span)) < size) return J;
            std::size_t i = size;
            while (i > 0 && J[i - 1] == m - size + i - 1) --i;
            if (i == 0) break;
            ++J[i - 1];
            for (std::size_t k = i; k < size; ++k) J[k] = J[k - 1] + 1;
        }
    }
    return {};
}

}  // namespace

RadoResult rado_check(const std::vector<std::vector<ComplexVec>>& sets, std::size_t dim) {
    if (sets.size() != dim) throw PreconditionError("rado_check needs exactly dim sets");
    for (const auto& s : sets)
        for (const auto& v : s)
            if (v.size() != dim) throw DimensionMismatch("vector length differs from dim");

    std::vector<Element> elems;
    for (std::size_t j = 0; j < sets.size(); ++j)
        for (std::size_t i = 0; i < sets[j].size(); ++i) elems.push_back({j, i});
    auto vec = [&](std::size_t e) -> const ComplexVec* { return &sets[elems[e].set][elems[e].index]; };

    std::vector<bool> in(elems.size(), false);
    std::vector<bool> set_used(sets.size(), false);
    auto current = [&](std::optional<std::size_t> drop, std::optional<std::size_t> add) {
        std::vector<const ComplexVec*> out;
        for (std::size_t e = 0; e < elems.size(); ++e)
            if (in[e] && e != drop) out.push_back(vec(e));
        if (add) out.push_back(vec(*add));
        return out;
    };

    // Greedy start.
    for (std::size_t e = 0; e < elems.size(); ++e) {
        if (set_used[elems[e].set]) continue;
        if (independent(current(std::nullopt, e))) {
            in[e] = true;
            set_used[elems[e].set] = true;
        }
    }

    // Augment along shortest paths in the exchange graph.
    for (;;) {
        std::size_t size = 0;
        for (bool b : in) size += b;
        if (size == sets.size()) break;
        const std::size_t N = elems.size();
        std::vector<bool> source(N, false), sink(N, false);
        for (std::size_t x = 0; x < N; ++x) {
            if (in[x]) continue;
            source[x] = independent(current(std::nullopt, x));
            sink[x] = !set_used[elems[x].set];
        }
        std::vector<long> parent(N, -2);
        std::deque<std::size_t> queue;
        for (std::size_t x = 0; x < N; ++x)
            if (source[x]) {
                parent[x] = -1;
                queue.push_back(x);
            }
        std::optional<std::size_t> end;
        while (!queue.empty() && !end) {
            const std::size_t u = queue.front();
            queue.pop_front();
            if (!in[u] && sink[u]) {
                end = u;
                break;
            }
            for (std::size_t w = 0; w < N; ++w) {
                if (parent[w] != -2) continue;
                bool edge = false;
                if (in[u] && !in[w]) {
                    edge = independent(current(u, w));  // I - u + w independent in the linear matroid
                } else if (!in[u] && in[w]) {
                    // I - w + u respects the partition matroid
                    edge = elems[w].set == elems[u].set || !set_used[elems[u].set];
                }
                if (edge) {
                    parent[w] = static_cast<long>(u);
                    queue.push_back(w);
                }
            }
        }
        if (!end) break;
        for (long e = static_cast<long>(*end); e >= 0; e = parent[e]) in[e] = !in[e];
        std::fill(set_used.begin(), set_used.end(), false);
        for (std::size_t e = 0; e < N; ++e)
            if (in[e]) set_used[elems[e].set] = true;
    }

    RadoResult res;
    std::size_t size = 0;
    for (bool b : in) size += b;
    if (size == sets.size()) {
        res.has_transversal = true;
        res.choice.assign(sets.size(), 0);
        for (std::size_t e = 0; e < elems.size(); ++e)
            if (in[e]) res.choice[elems[e].set] = elems[e].index;
    } else {
        res.failing_J = smallest_failing_subset(sets);
    }
    return res;
}

bool is_additively_free(const Matrix<ExactComplex>& L_rows, std::size_t n) {
    Instance probe;
    probe.n = n;
    probe.L = L_rows;
    const Matrix<ExactComplex> B = probe.basis();  // d vectors of length n
    if (B.empty()) return false;
    bool exact = true;
    for (const auto& b : B)
        for (const auto& x : b) exact &= x.is_exact();
    if (exact) {
        // q . b = 0 for every basis vector b, split along 1, sqrt(d), i, i sqrt(d).
        Matrix<ExactReal> split(n);
        for (const auto& b : B) {
            for (std::size_t k = 0; k < n; ++k) {
                const ExactReal& re = b[k].re();
                const ExactReal& im = b[k].im();
                split[k].emplace_back(re.rational_part());
                split[k].emplace_back(re.irrational_part());
                split[k].emplace_back(im.rational_part());
                split[k].emplace_back(im.irrational_part());
            }
        }
        return rank(split) == n;
    }
    // Float data: search for a small integer annihilator.
    std::vector<std::vector<std::complex<double>>> Bf;
    for (const auto& b : B) {
        std::vector<std::complex<double>> v;
        for (const auto& x : b) v.push_back(to_float(x));
        Bf.push_back(v);
    }
    const long H = n <= 3 ? 12 : 5;
    std::vector<long> q(n, -H);
    for (;;) {
        bool nonzero = false;
        for (long x : q) nonzero |= x != 0;
        if (nonzero) {
            bool kills = true;
            for (const auto& b : Bf) {
                std::complex<double> s = 0;
                double scale = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    s += static_cast<double>(q[k]) * b[k];
                    scale += std::abs(static_cast<double>(q[k]) * b[k]);
                }
                if (std::abs(s) > kNumericTolerance * std::max(1.0, scale)) {
                    kills = false;
                    break;
                }
            }
            if (kills) return false;
        }
        std::size_t k = 0;
        while (k < n && q[k] == H) q[k++] = -H;
        if (k == n) break;
        ++q[k];
    }
    return true;
}

RotundityReport is_rotund(const Instance& inst) {
    if (!inst.balanced())
        throw PreconditionError("rotundity is decided for balanced instances (dim L = #W); call reduce_dimension");
    RotundityReport rep;
    rep.method = RotundityMethod::rado;
    rep.numeric = inst.numeric();
    const Matrix<ExactComplex> B = inst.basis();
    const std::size_t d = inst.dim_L();
    std::vector<std::vector<ComplexVec>> sets;
    std::vector<std::vector<std::size_t>> vertex_of;
    for (const auto& f : inst.W) {
        const Polytope P = newton_polytope(f);
        const auto& V = P.vertices();
        std::vector<ComplexVec> A;
        std::vector<std::size_t> idx;
        for (std::size_t k = 1; k < V.size(); ++k) {
            ComplexVec proj(d, ExactComplex(0));
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t i = 0; i < inst.n; ++i) {
                    const ExactReal diff = V[k][i] - V[0][i];
                    if (!diff.is_zero()) proj[c] += ExactComplex(diff) * B[c][i];
                }
            A.push_back(std::move(proj));
            idx.push_back(k);
        }
        sets.push_back(std::move(A));
        vertex_of.push_back(std::move(idx));
    }
    const RadoResult r = rado_check(sets, d);
    rep.rotund = r.has_transversal;
    if (r.has_transversal) {
        std::vector<std::pair<std::size_t, std::size_t>> w;
        for (std::size_t j = 0; j < r.choice.size(); ++j) w.emplace_back(j, vertex_of[j][r.choice[j]]);
        rep.witness_basis = w;
    } else {
        rep.failing_J = r.failing_J;
    }
    return rep;
}

RotundityReport mixed_volume_check(const Instance& inst) {
    if (!inst.real_L()) throw PreconditionError("the mixed-volume criterion needs L defined over the reals");
    if (!inst.balanced()) throw PreconditionError("the mixed-volume criterion needs dim L = #W");
    if (inst.n > 4) throw PreconditionError("mixed volumes are computed for n <= 4");
    std::vector<Polytope> Ps;
    for (const auto& row : inst.L) {
        RealVec r;
        for (const auto& x : row) r.push_back(x.re());
        Ps.emplace_back(inst.n, std::vector<RealVec>{RealVec(inst.n, ExactReal(0)), r});
    }
    for (const auto& f : inst.W) Ps.push_back(newton_polytope(f));
    RotundityReport rep;
    rep.method = RotundityMethod::mixed_volume;
    rep.numeric = inst.numeric();
    rep.mixed_volume = mixed_volume(Ps);
    rep.rotund = !rep.mixed_volume->is_zero();
    return rep;
}

RotundityReport stable_intersection_check(const Instance& inst) {
    RotundityReport rep;
    rep.method = RotundityMethod::stable_intersection;
    rep.numeric = inst.numeric();
    rep.rotund = !collection_stable_intersection(inst).is_empty();
    return rep;
}

}  // namespace exptrop
