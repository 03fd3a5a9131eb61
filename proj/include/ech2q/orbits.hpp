#pragma once

#include "ech2q/exact.hpp"

#include <iosfwd>
#include <vector>

namespace ech2q {

/// Parameters of the T(2,q) fibration of S^3. The first torus-knot
/// parameter is fixed to 2 throughout; q must be odd and >= 3, so
/// gcd(2,q) = 1 automatically.
class Fibration {
public:
    explicit Fibration(Int q);

    const Int& q() const { return q_; }

private:
    Int q_;
};

/// The three embedded Reeb orbits of the perturbed fibration:
///   b — the binding, an elliptic regular fiber realizing the torus knot;
///   h — the negative hyperbolic singular fiber with Z/2 isotropy;
///   e — the elliptic singular fiber with Z/q isotropy.
enum class Orbit { b, h, e };

const char* orbit_name(Orbit o);

/// A Reeb current b^B h^H e^E given by its multiplicity triple.
struct ReebCurrent {
    Int B;
    Int H;
    Int E;

    ReebCurrent() : B(0), H(0), E(0) {}
    ReebCurrent(Int b, Int h, Int e) : B(std::move(b)), H(std::move(h)), E(std::move(e)) {}

    /// Generators of the chain complex carry hyperbolic orbits with
    /// multiplicity at most one.
    bool admissible() const { return H <= 1; }
    bool empty() const { return B == 0 && H == 0 && E == 0; }

    friend bool operator==(const ReebCurrent& a, const ReebCurrent& b) {
        return a.B == b.B && a.H == b.H && a.E == b.E;
    }
    friend bool operator!=(const ReebCurrent& a, const ReebCurrent& b) { return !(a == b); }
};

std::ostream& operator<<(std::ostream& os, const ReebCurrent& c);

/// Degree d = 2qB + qH + 2E, the algebraic multiplicity of the underlying
/// fiber set relative to the orbifold base. Its parity equals the parity
/// of H.
Int degree(const Fibration& fib, const ReebCurrent& c);

/// Contact action in the unperturbed limit: degree/(2q) = B + H/2 + E/q.
Rational action(const Fibration& fib, const ReebCurrent& c);

/// Linking number of two distinct embedded orbits:
/// l(e,h) = 1, l(b,e) = 2, l(b,h) = q. Symmetric; identical orbits are
/// rejected (self-linking of the binding lives in the index engine).
Int linking(const Fibration& fib, Orbit x, Orbit y);

/// All admissible currents of degree <= max_degree, sorted by degree
/// ascending and then B ascending within a degree. This is exactly
/// ascending ECH-index order.
std::vector<ReebCurrent> enumerate_generators(const Fibration& fib, const Int& max_degree);

}  // namespace ech2q
