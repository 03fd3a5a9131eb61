#include "ech2q/spectral.hpp"

#include <sstream>
#include <utility>

namespace ech2q {

namespace {

Int eval_index(const Fibration& fib, const ReebCurrent& c, const IndexFn& index_fn) {
    return index_fn ? index_fn(fib, c) : ech_index(fib, c);
}

Perturbed filtration_value(const Fibration& fib, const ReebCurrent& c) {
    // B·rot(b) + l(alpha,b) with rot(b) = 2q + delta and l(h,b) = q,
    // l(e,b) = 2 collapses to degree + B·delta
    return Perturbed(Rational(degree(fib, c)), c.B);
}

}  // namespace

std::vector<GradedGenerator> graded_complex(const Fibration& fib, std::size_t max_k,
                                            const IndexFn& index_fn) {
    // Enumeration bound: the grading-2k generator has degree N_k(2,q); one
    // extra degree band rules out gaps at the boundary.
    Staircase stair(Perturbed(Rational(2)), Perturbed(Rational(fib.q())), max_k + 1);
    Int bound = stair.at(max_k).value.base.num() + 2 * fib.q();

    std::vector<ReebCurrent> gens = enumerate_generators(fib, bound);
    std::vector<Int> offending;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Int expected = 2 * Int(i);
        if (eval_index(fib, gens[i], index_fn) != expected) {
            offending.push_back(expected);
            if (offending.size() >= 16) break;
        }
    }
    if (!offending.empty())
        throw VerificationError("graded_complex: index bijection violated (gap or duplicate)",
                                std::move(offending));
    if (gens.size() <= max_k)
        throw VerificationError("graded_complex: enumeration bound too small for requested grading",
                                {2 * Int(max_k)});

    std::vector<GradedGenerator> out;
    out.reserve(max_k + 1);
    for (std::size_t k = 0; k <= max_k; ++k) {
        const ReebCurrent& c = gens[k];
        out.push_back(GradedGenerator{2 * Int(k), c, degree(fib, c), action(fib, c),
                                      filtration_value(fib, c)});
    }
    return out;
}

std::vector<Int> bijection_defects(const Fibration& fib, const Int& max_degree,
                                   const IndexFn& index_fn) {
    std::vector<ReebCurrent> gens = enumerate_generators(fib, max_degree);
    std::vector<Int> defects;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Int expected = 2 * Int(i);
        if (eval_index(fib, gens[i], index_fn) != expected) {
            defects.push_back(expected);
            if (defects.size() >= 16) break;
        }
    }
    return defects;
}

std::vector<SpectrumEntry> ech_spectrum(const Fibration& fib, std::size_t count) {
    if (count < 1) throw std::invalid_argument("ech_spectrum: count must be positive");
    std::vector<GradedGenerator> complex = graded_complex(fib, count - 1);
    std::vector<SpectrumEntry> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(SpectrumEntry{k, complex[k].action, complex[k]});
    return out;
}

Perturbed knot_filtration(const Fibration& fib, const ReebCurrent& c, RotMode mode) {
    if (!c.admissible()) throw std::invalid_argument("knot_filtration: current not admissible");
    Perturbed f = filtration_value(fib, c);
    if (mode == RotMode::exact) f.delta = 0;
    return f;
}

Perturbed knot_threshold(const GradedGenerator& gen, RotMode mode) {
    Perturbed f = gen.filtration;
    if (mode == RotMode::exact) f.delta = 0;
    return f;
}

int knot_filtered_group(const Fibration& fib, const Int& grading, const Perturbed& K,
                        RotMode mode) {
    if (grading < 0 || grading % 2 != 0) return 0;
    if (grading > 200000000)
        throw std::invalid_argument("knot_filtered_group: grading out of supported range");
    auto k = static_cast<std::size_t>(grading / 2);
    std::vector<GradedGenerator> complex = graded_complex(fib, k);
    return K >= knot_threshold(complex[k], mode) ? 1 : 0;
}

namespace {

struct IdentityScan {
    const Fibration& fib;
    const IndexFn& index_fn;
    std::size_t max_failures;
    VerifyReport report;

    bool full() const { return report.failures.size() >= max_failures; }

    void fail(const char* family, const Int& m, const Int& i, const ReebCurrent& lhs,
              const ReebCurrent& rhs, const Int& li, const Int& ri, const std::string& relation) {
        report.pass = false;
        if (full()) return;
        std::ostringstream os;
        os << family << " at q=" << fib.q() << " m=" << m << " i=" << i << ": I(" << lhs
           << ")=" << li << ", I(" << rhs << ")=" << ri << "; expected " << relation;
        report.failures.push_back(
            IdentityFailure{family, m, i, lhs, rhs, li, ri, os.str()});
    }

    // expects index(lo) + 2 == index(hi), with both indices even
    void check_step(const char* family, const Int& m, const Int& i, const ReebCurrent& lo,
                    const ReebCurrent& hi) {
        if (full()) return;
        Int li = eval_index(fib, lo, index_fn);
        Int ri = eval_index(fib, hi, index_fn);
        if (li % 2 != 0 || ri % 2 != 0)
            fail("parity", m, i, lo, hi, li, ri, "both indices even");
        if (li + 2 != ri) fail(family, m, i, lo, hi, li, ri, "I(lhs) + 2 = I(rhs)");
    }
};

}  // namespace

VerifyReport verify_identities(const Fibration& fib, const Int& max_m,
                               std::size_t max_failures, const IndexFn& index_fn) {
    if (max_m < 1) throw std::invalid_argument("verify_identities: max_m must be >= 1");
    const Int& q = fib.q();
    IdentityScan scan{fib, index_fn, max_failures == 0 ? 1 : max_failures, VerifyReport{}};

    const Int half_lo = (q - 3) / 2;  // top of the lower residue range
    const Int mid = (q - 1) / 2;
    for (Int m = 1; m <= max_m && !scan.full(); ++m) {
        // highest index of odd degree -> lowest of the next even degree,
        // and highest of even degree -> lowest of the next odd degree
        for (Int i = 0; i <= half_lo; ++i) {
            scan.check_step("case1a", m, i, ReebCurrent(m - 1, 1, i + (q - 1) / 2),
                            ReebCurrent(0, 0, q * m + i));
            scan.check_step("case1b", m, i, ReebCurrent(m, 0, i),
                            ReebCurrent(0, 1, q * (m - 1) + i + (q + 1) / 2));
        }
        scan.check_step("case2a", m, mid, ReebCurrent(m - 1, 1, q - 1),
                        ReebCurrent(0, 0, q * m + mid));
        scan.check_step("case2b", m, mid, ReebCurrent(m, 0, mid), ReebCurrent(0, 1, q * m));
        for (Int i = (q + 1) / 2; i <= q - 1; ++i) {
            scan.check_step("case3a", m, i, ReebCurrent(m, 1, i - (q + 1) / 2),
                            ReebCurrent(0, 0, q * m + i));
            scan.check_step("case3b", m, i, ReebCurrent(m, 0, i),
                            ReebCurrent(0, 1, q * m + i - (q - 1) / 2));
        }
        // within-degree step lemma: consecutive B within a fixed degree
        // differ by exactly two in index
        for (Int h = 0; h <= 1; ++h)
            for (Int i = 0; i <= q - 1; ++i)
                for (Int y = 1; y <= m; ++y)
                    scan.check_step("step", m, i, ReebCurrent(y - 1, h, q * (m - y + 1) + i),
                                    ReebCurrent(y, h, q * (m - y) + i));
    }
    return scan.report;
}

}  // namespace ech2q
