#pragma once

#include "ech2q/exact.hpp"
#include "ech2q/orbits.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ech2q {

/// Boundary of an ellipsoid E(a,b) with an irrational axis ratio, the ratio
/// emulated by carrying distinct delta components: the shape is rejected
/// unless no nonzero relation a·m = b·n is realizable under the perturbed
/// comparison.
class EllipsoidShape {
public:
    EllipsoidShape(Perturbed a, Perturbed b);

    const Perturbed& a() const { return a_; }
    const Perturbed& b() const { return b_; }

private:
    Perturbed a_;
    Perturbed b_;
};

struct EllipsoidGenerator {
    std::size_t k;    // grading 2k
    Int m1;           // multiplicity of the short-axis orbit
    Int m2;           // multiplicity of the long-axis orbit
    Perturbed action; // a·m1 + b·m2 = N_k(a,b)
};

/// The two embedded Reeb orbits of the irrational ellipsoid generate one
/// current per even grading; grading order is action order, so the
/// grading-2k generator is the witness of staircase entry k of N(a,b).
std::vector<EllipsoidGenerator> ellipsoid_generators(const EllipsoidShape& shape,
                                                     std::size_t max_k);

/// Knot-filtration threshold of the grading-2k group for the unknot with
/// rotation number rot: N_k(1, rot).
Perturbed unknot_threshold(std::size_t k, const Perturbed& rot);

struct CrosscheckFailure {
    std::size_t k;
    std::string detail;
};

struct CrosscheckReport {
    bool pass = true;
    std::vector<CrosscheckFailure> failures;
};

/// Test hook: perturbs spectrum entries before comparison.
using SpectrumMutator = std::function<Rational(std::size_t, const Rational&)>;

/// Validates the torus-knot spectrum against the structurally independent
/// staircase route: 2q·c_k must equal N_k(2,q) computed as a pure rational
/// staircase (no delta tiebreak), and the spectral witness's degree must
/// equal the same value.
CrosscheckReport crosscheck_spectrum(const Fibration& fib, std::size_t count,
                                     const SpectrumMutator& mutate = {});

}  // namespace ech2q
