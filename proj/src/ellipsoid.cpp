#include "ech2q/ellipsoid.hpp"

#include "ech2q/spectral.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ech2q {

EllipsoidShape::EllipsoidShape(Perturbed a, Perturbed b) : a_(std::move(a)), b_(std::move(b)) {
    const Perturbed zero;
    if (!(a_ > zero) || !(b_ > zero))
        throw std::invalid_argument("EllipsoidShape: axes must be positive");
    // A relation a·m = b·n with m,n > 0 exists exactly when (base, delta) of
    // a and b are parallel over the rationals; positivity then makes the
    // ratio positive, so the relation is realized.
    if (a_.base * Rational(b_.delta) == Rational(a_.delta) * b_.base)
        throw std::invalid_argument("EllipsoidShape: degenerate axis ratio (a·m = b·n solvable)");
}

std::vector<EllipsoidGenerator> ellipsoid_generators(const EllipsoidShape& shape,
                                                     std::size_t max_k) {
    Staircase stair(shape.a(), shape.b(), max_k + 1);
    std::vector<EllipsoidGenerator> out;
    out.reserve(max_k + 1);
    for (std::size_t k = 0; k <= max_k; ++k) {
        const StairEntry& entry = stair.at(k);
        out.push_back(EllipsoidGenerator{k, entry.witness.m, entry.witness.n, entry.value});
    }
    return out;
}

Perturbed unknot_threshold(std::size_t k, const Perturbed& rot) {
    if (!(rot > Perturbed())) throw std::invalid_argument("unknot_threshold: rot must be positive");
    return Staircase(Perturbed(Rational(1)), rot, k + 1).at(k).value;
}

CrosscheckReport crosscheck_spectrum(const Fibration& fib, std::size_t count,
                                     const SpectrumMutator& mutate) {
    if (count < 1) throw std::invalid_argument("crosscheck_spectrum: count must be positive");
    std::vector<SpectrumEntry> spectrum = ech_spectrum(fib, count);
    std::vector<StairEntry> oracle =
        staircase_sequence(Perturbed(Rational(2)), Perturbed(Rational(fib.q())), count);

    CrosscheckReport report;
    const Rational two_q(2 * fib.q());
    for (std::size_t k = 0; k < count; ++k) {
        const Rational& nk = oracle[k].value.base;  // pure rational staircase, delta-free
        Rational ck = mutate ? mutate(k, spectrum[k].c) : spectrum[k].c;
        bool scaled_ok = two_q * ck == nk;
        bool degree_ok = Rational(spectrum[k].witness.degree) == nk;
        if (scaled_ok && degree_ok) continue;
        report.pass = false;
        std::ostringstream os;
        os << "k=" << k << ": 2q*c_k=" << (two_q * ck).str() << ", N_k(2,q)=" << nk.str()
           << ", witness " << spectrum[k].witness.current << " of degree "
           << spectrum[k].witness.degree;
        report.failures.push_back(CrosscheckFailure{k, os.str()});
    }
    return report;
}

}  // namespace ech2q
