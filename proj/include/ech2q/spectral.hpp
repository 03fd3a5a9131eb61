#pragma once

#include "ech2q/exact.hpp"
#include "ech2q/index.hpp"
#include "ech2q/orbits.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ech2q {

/// Thrown when a machine-checked structural fact fails (a gap or duplicate
/// in the index bijection, a cross-check mismatch). Carries the offending
/// gradings.
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& what, std::vector<Int> gradings)
        : std::runtime_error(what), gradings(std::move(gradings)) {}

    std::vector<Int> gradings;
};

/// Hook for substituting the index evaluation; used by the verification
/// harness's corruption self-tests. Empty means the closed-form ech_index.
using IndexFn = std::function<Int(const Fibration&, const ReebCurrent&)>;

struct GradedGenerator {
    Int grading;          // = ECH index = 2k
    ReebCurrent current;
    Int degree;
    Rational action;      // degree/(2q)
    Perturbed filtration; // knot filtration degree + B·delta (rot = 2q+delta);
                          // the exact-rotation value is its base part
};

/// One generator per even grading 0..2*max_k, certified by enumerating all
/// admissible currents out to degree N_{max_k}(2,q) + 2q (one full degree
/// band of padding) and checking that their indices are exactly 0,2,4,...
/// with no gap or duplicate. A failure throws VerificationError with the
/// offending gradings.
std::vector<GradedGenerator> graded_complex(const Fibration& fib, std::size_t max_k,
                                            const IndexFn& index_fn = {});

/// Degree-driven form of the bijection certificate: enumerates every
/// admissible current of degree <= max_degree and returns the expected
/// gradings (2 times the position) at which the index departs from the
/// enumeration order. Empty means the index multiset is exactly
/// {0, 2, 4, ...} with degree nondecreasing along it.
std::vector<Int> bijection_defects(const Fibration& fib, const Int& max_degree,
                                   const IndexFn& index_fn = {});

struct SpectrumEntry {
    std::size_t k;
    Rational c;  // c_k = action of the grading-2k generator
    GradedGenerator witness;
};

/// ECH spectrum c_0..c_{count-1}; equals N(1/2, 1/q) entrywise.
std::vector<SpectrumEntry> ech_spectrum(const Fibration& fib, std::size_t count);

/// Rotation number convention for the binding: exactly 2q, or 2q + delta.
enum class RotMode { exact, perturbed };

/// Knot filtration B·rot(b) + l(alpha, b) of an admissible current b^B alpha:
/// (degree, 0) in exact mode, (degree, B) in perturbed mode.
Perturbed knot_filtration(const Fibration& fib, const ReebCurrent& c, RotMode mode);

/// Filtration threshold of a generator under the rotation convention.
Perturbed knot_threshold(const GradedGenerator& gen, RotMode mode);

/// Rank of the knot-filtered group in the given grading at level K:
/// 1 iff the grading is even and K reaches the filtration of its generator,
/// 0 otherwise (odd gradings are always 0).
int knot_filtered_group(const Fibration& fib, const Int& grading, const Perturbed& K,
                        RotMode mode);

struct IdentityFailure {
    std::string family;
    Int m;
    Int i;
    ReebCurrent lhs;
    ReebCurrent rhs;
    Int lhs_index;
    Int rhs_index;
    std::string detail;
};

struct VerifyReport {
    bool pass = true;
    std::vector<IdentityFailure> failures;
};

/// Checks the six adjacent-degree index identities for all 1 <= m <= max_m
/// and every residue i, plus the within-degree step-by-two identity and
/// evenness. Failures are reported in-band with full operand dumps, up to
/// max_failures records.
VerifyReport verify_identities(const Fibration& fib, const Int& max_m,
                               std::size_t max_failures = 1, const IndexFn& index_fn = {});

}  // namespace ech2q
