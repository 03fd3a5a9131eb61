#pragma once

#include "ech2q/exact.hpp"
#include "ech2q/orbits.hpp"

#include <array>

namespace ech2q {

/// The five trivialization classes of the contact planes used in the index
/// computation. Requesting one outside its domain is an error, never a
/// silent default.
///   orb       — global orbibundle trivialization; defined over b, h, e and
///               all their iterates.
///   page      — induced by the page of the open book; binding only.
///   constant  — linearized-flow-is-identity trivialization; binding only.
///   surface_e — linking-zero trivialization of the fiber surface through e;
///               defined over the covers e^{qk}, and over b where it agrees
///               with the constant trivialization.
///   surface_h — same for h, over the covers h^{2k} and over b.
enum class Triv { orb, page, constant, surface_e, surface_h };

inline constexpr std::array<Triv, 5> all_trivs = {Triv::orb, Triv::page, Triv::constant,
                                                  Triv::surface_e, Triv::surface_h};

const char* triv_name(Triv t);

/// Orbits and covers over which trivialization offsets are tabulated:
/// the binding b (with all iterates), the cover e^q, and the cover h^2.
enum class TrivDomain { binding, e_cover, h_cover };

inline constexpr std::array<TrivDomain, 3> all_triv_domains = {
    TrivDomain::binding, TrivDomain::e_cover, TrivDomain::h_cover};

/// Pairwise offsets tau - tau' between trivializations over a common orbit
/// or cover, closed under antisymmetry and cocycle composition. Seeded from
/// the fibration's change-of-trivialization values.
class TrivOffsetLedger {
public:
    explicit TrivOffsetLedger(const Fibration& fib);

    bool defined(TrivDomain dom, Triv t) const;

    /// offset(x, A, B) = A(x) - B(x). Throws std::invalid_argument when a
    /// trivialization is not defined over the domain.
    Int offset(TrivDomain dom, Triv from, Triv to) const;

private:
    // potential per (domain, trivialization); offsets are potential
    // differences, which makes antisymmetry and the cocycle identity
    // structural rather than checked
    std::array<std::array<Int, 5>, 3> potential_;
    std::array<std::array<bool, 5>, 3> defined_;
};

Int triv_offset(const Fibration& fib, TrivDomain dom, Triv from, Triv to);

struct OrbitMonodromy {
    bool elliptic;
    Perturbed angle;  // in the orbibundle trivialization
};

/// Monodromy angles of the embedded orbits in the orbibundle trivialization:
/// b is elliptic with angle (2+q) + delta, e is elliptic with angle
/// (2+q)/q - delta, h is negative hyperbolic with integer angle 2+q.
/// The delta coefficients are normalized to +-1: only their sign can affect
/// a floor the formulas take.
class MonodromyTable {
public:
    explicit MonodromyTable(const Fibration& fib);

    const OrbitMonodromy& of(Orbit o) const;

private:
    OrbitMonodromy b_, h_, e_;
};

/// E = qm + r with 0 <= r <= q-1; the split every e-multiplicity formula
/// runs through.
struct EuclideanSplit {
    Int m;
    Int r;
};

EuclideanSplit split_by_q(const Fibration& fib, const Int& e_mult);

/// Conley-Zehnder index of the k-th iterate of an embedded orbit in the
/// given trivialization, by the closed forms:
///   orb:       b^k -> 2(2+q)k + 1,  h^k -> (2+q)k,
///              e^{qm+r} -> 2(q+2)m + 2r + 2*ceil(2r/q) - 1
///   page:      b^k -> 4qk + 1
///   constant:  b^k -> 1
///   surface_e: e^{qk} -> -1   (and b^k -> 1, as it agrees with constant)
///   surface_h: h^{2k} -> 0    (and b^k -> 1)
/// Out-of-domain requests throw std::invalid_argument.
Int cz(const Fibration& fib, Orbit o, const Int& k, Triv t);

/// Independent route to cz in the orbibundle trivialization: elliptic
/// orbits via 2*floor(k*theta) + 1 on the perturbed monodromy angle,
/// hyperbolic via k times the integer angle.
Int cz_via_monodromy(const Fibration& fib, Orbit o, const Int& k);

/// Total Conley-Zehnder term of a current in the orbibundle trivialization:
/// the sum of cz over iterates 1..multiplicity of each orbit, by closed
/// form (quadratic in the multiplicities).
Int total_cz(const Fibration& fib, const ReebCurrent& c);

/// Same quantity by literally summing cz over the iterates; the second
/// route the closed form is checked against.
Int total_cz_by_iterates(const Fibration& fib, const ReebCurrent& c);

/// Relative homology classes with tabulated component values. The page
/// class [Σ] is z_b: the page is a Seifert surface for the binding.
enum class RelClass { z_b, z_e, z_h, z_e_cover, z_h_cover };

/// Relative first Chern number c_tau of a class. Zero on every listed class
/// in the orbibundle trivialization; other trivializations are derived
/// through the offset ledger and the change-of-trivialization formula,
/// and throw std::invalid_argument when the pair is underivable.
Int relative_chern(const Fibration& fib, RelClass cls, Triv t);

/// An integer combination B·Z_b + H·Z_h + E·Z_e of the fiber classes.
struct FiberClass {
    Int B;
    Int H;
    Int E;

    FiberClass() : B(0), H(0), E(0) {}
    FiberClass(Int b, Int h, Int e) : B(std::move(b)), H(std::move(h)), E(std::move(e)) {}
    explicit FiberClass(const ReebCurrent& c) : B(c.B), H(c.H), E(c.E) {}
};

/// Relative intersection pairing in the orbibundle trivialization, extended
/// bilinearly from Q(Z_b) = q-2, Q(Z_e) = Q(Z_h) = -1, Q(Z_e,Z_h) = 1,
/// Q(Z_e,Z_b) = 2, Q(Z_h,Z_b) = q.
Int q_pairing(const Fibration& fib, const FiberClass& z1, const FiberClass& z2);

/// Self-pairing of the binding class Z_b in any trivialization defined over
/// b: q-2 (orb), 0 (page), 2q (constant and the surface trivializations).
/// Mixed currents in non-orb trivializations are not tabulated and are
/// rejected at the q_pairing level by construction.
Int q_binding(const Fibration& fib, Triv t);

/// Self-pairing of a cover class in its own surface trivialization:
/// Q_e(Z_{e^q}) = Q_h(Z_{h^2}) = 2q, obtained by concatenating the fiber
/// surface (self-pairing zero) with the page along b.
Int q_cover_self(const Fibration& fib, TrivDomain dom);

/// Second route to the simple-orbit self-pairings: transports q_cover_self
/// to the orbibundle trivialization with the cover change-of-trivialization
/// rule and divides by the square of the covering multiplicity. Returns -1
/// for both e and h; the binding is rejected.
Int q_orb_via_cover(const Fibration& fib, Orbit o);

/// The ECH index of a current relative to the empty set, by the closed form
///   I = 2EH - H^2 + (q+2)H + 2qB^2 + (q+3)B + 4EB + 2qHB
///       + (2/q)E^2 + (q+1)m - (2/q)r^2 + 2r + floor(2r/q)(2r-q+1),
/// where E = qm + r, 0 <= r <= q-1. The formula evaluates for any H;
/// for admissible currents it is a nonnegative even integer and equals
/// the component sum c + Q + CZ in the orbibundle trivialization.
Int ech_index(const Fibration& fib, const ReebCurrent& c);

struct IndexComponents {
    Int c;
    Int q;
    Int cz;

    Int sum() const { return c + q + cz; }
};

/// (c, Q, CZ) of the current in the orbibundle trivialization: c = 0,
/// Q = q_pairing of the current with itself, CZ = total_cz.
IndexComponents ech_index_components(const Fibration& fib, const ReebCurrent& c);

/// Self-linking number of the binding: minus the relative first Chern
/// number of the contact structure over its Seifert surface, q - 2
/// (equivalently 2q - 2 - q, the maximal value for this knot type).
Int self_linking(const Fibration& fib);

}  // namespace ech2q
