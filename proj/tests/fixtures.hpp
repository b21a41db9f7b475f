#pragma once

#include <string>
#include <vector>

#include "exptrop/expsystem.hpp"

namespace fixture {

using namespace exptrop;

/// w1 + w2 + 1.
inline ExpSum line_poly() { return ExpSum::laurent(2, {{1, {1, 0}}, {1, {0, 1}}, {1, {0, 0}}}); }

inline Instance make(std::size_t n, Matrix<ExactComplex> L, std::vector<ExpSum> W, std::optional<long> d = {},
                     std::string name = {}) {
    Instance inst;
    inst.n = n;
    inst.L = std::move(L);
    inst.W = std::move(W);
    inst.irrational = d;
    inst.name = std::move(name);
    inst.validate();
    return inst;
}

/// z2 = sqrt(2) z1 with W: w1 + w2 + 1.
inline Instance l_sqrt2() {
    return make(2, {{ExactReal::sqrt_of(2), ExactComplex(-1)}}, {line_poly()}, 2, "l_sqrt2");
}

/// z2 = i z1 with W: w1 + w2 + 1.
inline Instance l_i() { return make(2, {{ExactComplex::i(), ExactComplex(-1)}}, {line_poly()}, {}, "l_i"); }

/// z1 = 0 with W: w1 + 1.
inline Instance nonrotund() {
    return make(2, {{ExactComplex(1), ExactComplex(0)}}, {ExpSum::laurent(2, {{1, {1, 0}}, {1, {0, 0}}})}, {},
                "nonrotund");
}

/// z2 = 2 z1 with W: w1 + w2 + 1.
inline Instance nonfree() { return make(2, {{ExactComplex(2), ExactComplex(-1)}}, {line_poly()}, {}, "nonfree"); }

}  // namespace fixture
