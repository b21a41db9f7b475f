#include <algorithm>
#include <cmath>
#include <set>

#include "exptrop/lp.hpp"
#include "exptrop/polyhedra.hpp"

namespace exptrop {

Ordering compare_vectors(const RealVec& a, const RealVec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? Ordering::lt : Ordering::gt;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Ordering o = compare_real(a[k], b[k]);
        if (o != Ordering::eq) return o;
    }
    return Ordering::eq;
}

namespace {

bool vec_equal(const RealVec& a, const RealVec& b) { return compare_vectors(a, b) == Ordering::eq; }

RealVec zeros(std::size_t n) { return RealVec(n, ExactReal(0)); }

}  // namespace

Polyhedron Polyhedron::make(std::size_t ambient, const Matrix<ExactReal>& A, const RealVec& b,
                            const Matrix<ExactReal>& E, const RealVec& f) {
    if (A.size() != b.size() || E.size() != f.size()) throw DimensionMismatch("constraint right-hand side length");
    for (const auto& r : A)
        if (r.size() != ambient) throw DimensionMismatch("inequality width differs from ambient dimension");
    for (const auto& r : E)
        if (r.size() != ambient) throw DimensionMismatch("equation width differs from ambient dimension");
    Polyhedron p;
    p.ambient_ = ambient;
    p.canonicalize(A, b, E, f);
    return p;
}

Polyhedron Polyhedron::whole_space(std::size_t ambient) { return make(ambient, {}, {}); }

Polyhedron Polyhedron::empty_set(std::size_t ambient) {
    Polyhedron p;
    p.ambient_ = ambient;
    p.empty_ = true;
    return p;
}

Polyhedron Polyhedron::point(const RealVec& p) {
    Matrix<ExactReal> E;
    for (std::size_t k = 0; k < p.size(); ++k) {
        RealVec row = zeros(p.size());
        row[k] = ExactReal(1);
        E.push_back(row);
    }
    return make(p.size(), {}, {}, E, p);
}

Polyhedron Polyhedron::ray(const RealVec& direction) {
    const std::size_t n = direction.size();
    Matrix<ExactReal> E = nullspace(Matrix<ExactReal>{direction}, n);
    RealVec neg = direction;
    for (auto& x : neg) x = -x;
    return make(n, {neg}, {ExactReal(0)}, E, RealVec(E.size(), ExactReal(0)));
}

Polyhedron Polyhedron::span(std::size_t ambient, const Matrix<ExactReal>& vectors) {
    Matrix<ExactReal> E = vectors.empty() ? Matrix<ExactReal>{} : nullspace(vectors, ambient);
    if (vectors.empty()) {
        for (std::size_t k = 0; k < ambient; ++k) {
            RealVec row = zeros(ambient);
            row[k] = ExactReal(1);
            E.push_back(row);
        }
    }
    return make(ambient, {}, {}, E, RealVec(E.size(), ExactReal(0)));
}

Polyhedron Polyhedron::hyperplane(const RealVec& normal) {
    return make(normal.size(), {}, {}, {normal}, {ExactReal(0)});
}

void Polyhedron::canonicalize(Matrix<ExactReal> A, RealVec b, Matrix<ExactReal> E, RealVec f) {
    const std::size_t n = ambient_;
    // Find implicit equalities and a relative-interior point. Each round maximizes the
    // total slack of the undecided inequalities; those with positive slack are genuine.
    std::vector<int> state(A.size(), 0);  // 0 undecided, 1 genuine, 2 implicit equality
    std::vector<RealVec> witnesses;
    for (;;) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (state[i] == 0) open.push_back(i);
        const std::size_t nv = n + open.size();
        Matrix<ExactReal> LA;
        RealVec Lb;
        for (std::size_t i = 0; i < A.size(); ++i) {
            RealVec row = A[i];
            row.resize(nv, ExactReal(0));
            LA.push_back(std::move(row));
            Lb.push_back(b[i]);
        }
        for (std::size_t k = 0; k < open.size(); ++k) {
            LA[open[k]][n + k] = ExactReal(1);
            RealVec up = zeros(nv);
            up[n + k] = ExactReal(1);
            LA.push_back(up);
            Lb.push_back(ExactReal(1));
            RealVec down = zeros(nv);
            down[n + k] = ExactReal(-1);
            LA.push_back(down);
            Lb.push_back(ExactReal(0));
        }
        Matrix<ExactReal> LE;
        for (const auto& r : E) {
            RealVec row = r;
            row.resize(nv, ExactReal(0));
            LE.push_back(std::move(row));
        }
        RealVec c = zeros(nv);
        for (std::size_t k = 0; k < open.size(); ++k) c[n + k] = ExactReal(1);
        const LpResult res = maximize(c, LA, Lb, LE, f);
        if (res.status == LpStatus::infeasible) {
            empty_ = true;
            A_.clear();
            b_.clear();
            E_.clear();
            f_.clear();
            return;
        }
        witnesses.emplace_back(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n));
        bool progress = false;
        for (std::size_t k = 0; k < open.size(); ++k) {
            if (res.x[n + k].sign() > 0) {
                state[open[k]] = 1;
                progress = true;
            }
        }
        if (!progress) {
            for (auto i : open) state[i] = 2;
        }
        if (!progress || open.size() == 0) break;
        bool any_open = false;
        for (auto s : state) any_open |= s == 0;
        if (!any_open) break;
    }

    relint_ = zeros(n);
    for (const auto& w : witnesses) relint_ = add(relint_, w);
    relint_ = exptrop::scale(relint_, ExactReal(1) / ExactReal(static_cast<long>(witnesses.size())));

    // Equation block in reduced row echelon form.
    Matrix<ExactReal> aug;
    for (std::size_t i = 0; i < E.size(); ++i) {
        RealVec row = E[i];
        row.push_back(f[i]);
        aug.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (state[i] != 2) continue;
        RealVec row = A[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    const auto pivots = rref(aug, n + 1);
    E_.clear();
    f_.clear();
    for (auto& row : aug) {
        f_.push_back(row[n]);
        row.pop_back();
        E_.push_back(std::move(row));
    }

    // Reduce genuine inequalities modulo the equations and normalize.
    std::vector<std::pair<RealVec, ExactReal>> ineq;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (state[i] != 1) continue;
        RealVec a = A[i];
        ExactReal rhs = b[i];
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const ExactReal coef = a[pivots[r]];
            if (coef.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) a[k] -= coef * E_[r][k];
            rhs -= coef * f_[r];
        }
        auto lead = std::find_if(a.begin(), a.end(), [](const ExactReal& x) { return !x.is_zero(); });
        if (lead == a.end()) continue;
        const ExactReal s = lead->abs().inverse();
        for (auto& x : a) x *= s;
        rhs *= s;
        ineq.emplace_back(std::move(a), std::move(rhs));
    }
    std::sort(ineq.begin(), ineq.end(), [](const auto& x, const auto& y) {
        const Ordering o = compare_vectors(x.first, y.first);
        if (o != Ordering::eq) return o == Ordering::lt;
        return x.second < y.second;
    });
    // Parallel copies: keep the tightest.
    std::vector<std::pair<RealVec, ExactReal>> unique;
    for (auto& e : ineq) {
        if (!unique.empty() && vec_equal(unique.back().first, e.first)) continue;
        unique.push_back(std::move(e));
    }
    // Redundancy removal.
    for (std::size_t i = 0; i < unique.size();) {
        Matrix<ExactReal> others;
        RealVec rhs;
        for (std::size_t k = 0; k < unique.size(); ++k) {
            if (k == i) continue;
            others.push_back(unique[k].first);
            rhs.push_back(unique[k].second);
        }
        const LpResult res = maximize(unique[i].first, others, rhs, E_, f_);
        if (res.status == LpStatus::optimal && res.value <= unique[i].second) {
            unique.erase(unique.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    A_.clear();
    b_.clear();
    for (auto& e : unique) {
        A_.push_back(std::move(e.first));
        b_.push_back(std::move(e.second));
    }
}

int Polyhedron::dim() const {
    if (empty_) return -1;
    return static_cast<int>(ambient_) - static_cast<int>(E_.size());
}

bool Polyhedron::is_cone() const {
    if (empty_) return false;
    auto zero = [](const ExactReal& x) { return x.is_zero(); };
    return std::all_of(b_.begin(), b_.end(), zero) && std::all_of(f_.begin(), f_.end(), zero);
}

const RealVec& Polyhedron::relint_point() const {
    if (empty_) throw PreconditionError("relative interior of the empty set");
    return relint_;
}

bool Polyhedron::contains(const RealVec& x) const {
    if (empty_) return false;
    if (x.size() != ambient_) throw DimensionMismatch("point dimension");
    for (std::size_t r = 0; r < E_.size(); ++r)
        if (dot(E_[r], x) != f_[r]) return false;
    for (std::size_t r = 0; r < A_.size(); ++r)
        if (dot(A_[r], x) > b_[r]) return false;
    return true;
}

bool Polyhedron::in_relint(const RealVec& x) const {
    if (empty_) return false;
    if (x.size() != ambient_) throw DimensionMismatch("point dimension");
    for (std::size_t r = 0; r < E_.size(); ++r)
        if (dot(E_[r], x) != f_[r]) return false;
    for (std::size_t r = 0; r < A_.size(); ++r)
        if (dot(A_[r], x) >= b_[r]) return false;
    return true;
}

bool Polyhedron::contains_approx(const std::vector<double>& x, double tol) const {
    if (empty_) return false;
    auto eval = [&x](const RealVec& row) {
        double s = 0;
        for (std::size_t k = 0; k < row.size(); ++k) s += row[k].to_double() * x[k];
        return s;
    };
    for (std::size_t r = 0; r < E_.size(); ++r)
        if (std::abs(eval(E_[r]) - f_[r].to_double()) > tol) return false;
    for (std::size_t r = 0; r < A_.size(); ++r)
        if (eval(A_[r]) - b_[r].to_double() > tol) return false;
    return true;
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("intersection of polyhedra in different spaces");
    if (empty_ || other.empty_) return empty_set(ambient_);
    Matrix<ExactReal> A = A_;
    RealVec b = b_;
    A.insert(A.end(), other.A_.begin(), other.A_.end());
    b.insert(b.end(), other.b_.begin(), other.b_.end());
    Matrix<ExactReal> E = E_;
    RealVec f = f_;
    E.insert(E.end(), other.E_.begin(), other.E_.end());
    f.insert(f.end(), other.f_.begin(), other.f_.end());
    return make(ambient_, A, b, E, f);
}

std::vector<Polyhedron> Polyhedron::faces() const {
    if (empty_) return {};
    std::vector<Polyhedron> out{*this};
    std::set<Polyhedron> seen{*this};
    for (std::size_t next = 0; next < out.size(); ++next) {
        const Polyhedron cur = out[next];
        for (std::size_t i = 0; i < cur.A_.size(); ++i) {
            Matrix<ExactReal> A;
            RealVec b;
            for (std::size_t k = 0; k < cur.A_.size(); ++k) {
                if (k == i) continue;
                A.push_back(cur.A_[k]);
                b.push_back(cur.b_[k]);
            }
            Matrix<ExactReal> E = cur.E_;
            RealVec f = cur.f_;
            E.push_back(cur.A_[i]);
            f.push_back(cur.b_[i]);
            Polyhedron facet = make(ambient_, A, b, E, f);
            if (facet.empty_) continue;
            if (seen.insert(facet).second) out.push_back(std::move(facet));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polyhedron Polyhedron::face_containing(const RealVec& x) const {
    if (!contains(x)) throw PreconditionError("point outside the polyhedron");
    Matrix<ExactReal> A;
    RealVec b;
    Matrix<ExactReal> E = E_;
    RealVec f = f_;
    for (std::size_t r = 0; r < A_.size(); ++r) {
        if (dot(A_[r], x) == b_[r]) {
            E.push_back(A_[r]);
            f.push_back(b_[r]);
        } else {
            A.push_back(A_[r]);
            b.push_back(b_[r]);
        }
    }
    return make(ambient_, A, b, E, f);
}

bool Polyhedron::is_face_of(const Polyhedron& sigma) const {
    if (empty_ || sigma.empty_ || ambient_ != sigma.ambient_) return false;
    if (!sigma.contains(relint_)) return false;
    return sigma.face_containing(relint_) == *this;
}

Polyhedron Polyhedron::tangent_cone(const Polyhedron& tau) const {
    if (!tau.is_face_of(*this)) throw PreconditionError("tangent cone at a set that is not a face");
    const RealVec& p = tau.relint_point();
    Matrix<ExactReal> A;
    for (std::size_t r = 0; r < A_.size(); ++r)
        if (dot(A_[r], p) == b_[r]) A.push_back(A_[r]);
    return make(ambient_, A, RealVec(A.size(), ExactReal(0)), E_, RealVec(E_.size(), ExactReal(0)));
}

Polyhedron Polyhedron::affine_hull() const {
    if (empty_) return *this;
    return make(ambient_, {}, {}, E_, f_);
}

std::optional<ExactReal> Polyhedron::maximum(const RealVec& c) const {
    if (empty_) return std::nullopt;
    const LpResult res = exptrop::maximize(c, A_, b_, E_, f_);
    if (res.status != LpStatus::optimal) return std::nullopt;
    return res.value;
}

bool operator==(const Polyhedron& a, const Polyhedron& b) {
    if (a.ambient_ != b.ambient_ || a.empty_ != b.empty_) return false;
    if (a.empty_) return true;
    if (a.E_.size() != b.E_.size() || a.A_.size() != b.A_.size()) return false;
    for (std::size_t r = 0; r < a.E_.size(); ++r)
        if (!vec_equal(a.E_[r], b.E_[r]) || a.f_[r] != b.f_[r]) return false;
    for (std::size_t r = 0; r < a.A_.size(); ++r)
        if (!vec_equal(a.A_[r], b.A_[r]) || a.b_[r] != b.b_[r]) return false;
    return true;
}

bool operator<(const Polyhedron& a, const Polyhedron& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.empty_ != b.empty_) return a.empty_;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.A_.size() != b.A_.size()) return a.A_.size() < b.A_.size();
    for (std::size_t r = 0; r < a.E_.size(); ++r) {
        const Ordering o = compare_vectors(a.E_[r], b.E_[r]);
        if (o != Ordering::eq) return o == Ordering::lt;
        const Ordering q = compare_real(a.f_[r], b.f_[r]);
        if (q != Ordering::eq) return q == Ordering::lt;
    }
    for (std::size_t r = 0; r < a.A_.size(); ++r) {
        const Ordering o = compare_vectors(a.A_[r], b.A_[r]);
        if (o != Ordering::eq) return o == Ordering::lt;
        const Ordering q = compare_real(a.b_[r], b.b_[r]);
        if (q != Ordering::eq) return q == Ordering::lt;
    }
    return false;
}

}  // namespace exptrop
