#include "ech2q/index.hpp"

#include <stdexcept>

namespace ech2q {

namespace {

std::size_t triv_idx(Triv t) { return static_cast<std::size_t>(t); }
std::size_t dom_idx(TrivDomain d) { return static_cast<std::size_t>(d); }

}  // namespace

const char* triv_name(Triv t) {
    switch (t) {
        case Triv::orb: return "orb";
        case Triv::page: return "page";
        case Triv::constant: return "constant";
        case Triv::surface_e: return "surface_e";
        case Triv::surface_h: return "surface_h";
    }
    return "?";
}

TrivOffsetLedger::TrivOffsetLedger(const Fibration& fib) {
    const Int& q = fib.q();
    for (auto& row : defined_) row.fill(false);
    for (auto& row : potential_) row.fill(0);

    auto seed = [this](TrivDomain dom, Triv t, Int pot) {
        potential_[dom_idx(dom)][triv_idx(t)] = std::move(pot);
        defined_[dom_idx(dom)][triv_idx(t)] = true;
    };

    // Over the binding, anchored at the page trivialization:
    //   tau_0(b) - tau_page(b) = 2q, tau_0(b) - tau_orb(b) = 2+q,
    //   tau_orb(b) - tau_page(b) = q-2, and both surface trivializations
    //   restrict to the constant one on b.
    seed(TrivDomain::binding, Triv::page, 0);
    seed(TrivDomain::binding, Triv::orb, q - 2);
    seed(TrivDomain::binding, Triv::constant, 2 * q);
    seed(TrivDomain::binding, Triv::surface_e, 2 * q);
    seed(TrivDomain::binding, Triv::surface_h, 2 * q);

    // Over the covers: tau_e(e^q) - tau_orb(e^q) = tau_h(h^2) - tau_orb(h^2)
    // = 2+q; no other trivialization lives there.
    seed(TrivDomain::e_cover, Triv::orb, 0);
    seed(TrivDomain::e_cover, Triv::surface_e, 2 + q);
    seed(TrivDomain::h_cover, Triv::orb, 0);
    seed(TrivDomain::h_cover, Triv::surface_h, 2 + q);
}

bool TrivOffsetLedger::defined(TrivDomain dom, Triv t) const {
    return defined_[dom_idx(dom)][triv_idx(t)];
}

Int TrivOffsetLedger::offset(TrivDomain dom, Triv from, Triv to) const {
    if (!defined(dom, from) || !defined(dom, to))
        throw std::invalid_argument("TrivOffsetLedger: trivialization not defined over domain");
    return potential_[dom_idx(dom)][triv_idx(from)] - potential_[dom_idx(dom)][triv_idx(to)];
}

Int triv_offset(const Fibration& fib, TrivDomain dom, Triv from, Triv to) {
    return TrivOffsetLedger(fib).offset(dom, from, to);
}

MonodromyTable::MonodromyTable(const Fibration& fib) {
    const Int& q = fib.q();
    b_ = {true, Perturbed(Rational(2 + q), 1)};
    h_ = {false, Perturbed(Rational(2 + q), 0)};
    e_ = {true, Perturbed(Rational(2 + q, q), -1)};
    // nondegeneracy: elliptic angles carry a perturbation, the hyperbolic
    // angle is an odd integer (q odd makes 2+q odd)
    if (b_.angle.delta == 0 || e_.angle.delta == 0)
        throw std::logic_error("MonodromyTable: degenerate elliptic angle");
    if (!h_.angle.base.is_integer() || h_.angle.base.num() % 2 == 0)
        throw std::logic_error("MonodromyTable: hyperbolic angle must be an odd integer");
}

const OrbitMonodromy& MonodromyTable::of(Orbit o) const {
    switch (o) {
        case Orbit::b: return b_;
        case Orbit::h: return h_;
        case Orbit::e: return e_;
    }
    throw std::logic_error("MonodromyTable: bad orbit");
}

EuclideanSplit split_by_q(const Fibration& fib, const Int& e_mult) {
    if (e_mult < 0) throw std::invalid_argument("split_by_q: negative multiplicity");
    return {e_mult / fib.q(), e_mult % fib.q()};
}

Int cz(const Fibration& fib, Orbit o, const Int& k, Triv t) {
    if (k < 1) throw std::invalid_argument("cz: iterate must be positive");
    const Int& q = fib.q();
    switch (t) {
        case Triv::orb:
            switch (o) {
                case Orbit::b: return 2 * (2 + q) * k + 1;
                case Orbit::h: return (2 + q) * k;
                case Orbit::e: {
                    auto [m, r] = split_by_q(fib, k);
                    Int ceil_2r_q = (2 * r + q - 1) / q;  // 0, 1 or 2
                    return 2 * (q + 2) * m + 2 * r + 2 * ceil_2r_q - 1;
                }
            }
            break;
        case Triv::page:
            if (o == Orbit::b) return 4 * q * k + 1;
            break;
        case Triv::constant:
            if (o == Orbit::b) return 1;
            break;
        case Triv::surface_e:
            if (o == Orbit::e && k % q == 0) return -1;
            if (o == Orbit::b) return 1;  // agrees with the constant trivialization on b
            break;
        case Triv::surface_h:
            if (o == Orbit::h && k % 2 == 0) return 0;
            if (o == Orbit::b) return 1;
            break;
    }
    throw std::invalid_argument("cz: trivialization not defined over this orbit cover");
}

Int cz_via_monodromy(const Fibration& fib, Orbit o, const Int& k) {
    if (k < 1) throw std::invalid_argument("cz_via_monodromy: iterate must be positive");
    const MonodromyTable table(fib);
    const OrbitMonodromy& mono = table.of(o);
    if (mono.elliptic) return 2 * perturbed_floor(k * mono.angle) + 1;
    return k * mono.angle.base.num();
}

namespace {

// floor(2r/q) for 0 <= r <= q-1: never hits the boundary since q is odd
Int floor_2r_q(const Int& r, const Int& q) { return 2 * r >= q ? 1 : 0; }

// CZ^I over e^E: (q+2)/q E^2 + (q+1)m - (2/q) r^2 + 2r + floor(2r/q)(2r-q+1),
// rearranged over the integers with E = qm + r
Int total_cz_e(const Fibration& fib, const Int& E) {
    const Int& q = fib.q();
    auto [m, r] = split_by_q(fib, E);
    return (q + 2) * (q * m * m + 2 * m * r) + r * r + (q + 1) * m + 2 * r +
           floor_2r_q(r, q) * (2 * r - q + 1);
}

}  // namespace

Int total_cz(const Fibration& fib, const ReebCurrent& c) {
    if (c.B < 0 || c.H < 0 || c.E < 0)
        throw std::invalid_argument("total_cz: negative multiplicity");
    const Int& q = fib.q();
    Int b_part = (q + 2) * c.B * c.B + (q + 3) * c.B;
    Int h_part = (2 + q) * c.H * (c.H + 1) / 2;
    return b_part + h_part + total_cz_e(fib, c.E);
}

Int total_cz_by_iterates(const Fibration& fib, const ReebCurrent& c) {
    if (c.B < 0 || c.H < 0 || c.E < 0)
        throw std::invalid_argument("total_cz_by_iterates: negative multiplicity");
    Int sum = 0;
    for (Int k = 1; k <= c.B; ++k) sum += cz(fib, Orbit::b, k, Triv::orb);
    for (Int k = 1; k <= c.H; ++k) sum += cz(fib, Orbit::h, k, Triv::orb);
    for (Int k = 1; k <= c.E; ++k) sum += cz(fib, Orbit::e, k, Triv::orb);
    return sum;
}

Int relative_chern(const Fibration& fib, RelClass cls, Triv t) {
    // the orbibundle trivialization is global, so it extends over any
    // representative: c_orb vanishes on every listed class
    if (t == Triv::orb) return 0;
    TrivOffsetLedger ledger(fib);
    // boundary multiplicity is 1 in each case, so the change formula reduces
    // to the plain offset over the boundary orbit or cover
    switch (cls) {
        case RelClass::z_b: return ledger.offset(TrivDomain::binding, t, Triv::orb);
        case RelClass::z_e_cover: return ledger.offset(TrivDomain::e_cover, t, Triv::orb);
        case RelClass::z_h_cover: return ledger.offset(TrivDomain::h_cover, t, Triv::orb);
        case RelClass::z_e:
        case RelClass::z_h:
            throw std::invalid_argument(
                "relative_chern: only the orbibundle trivialization is defined over a "
                "simple singular fiber");
    }
    throw std::logic_error("relative_chern: bad class");
}

Int q_pairing(const Fibration& fib, const FiberClass& z1, const FiberClass& z2) {
    const Int& q = fib.q();
    return z1.B * z2.B * (q - 2) - z1.H * z2.H - z1.E * z2.E + q * (z1.B * z2.H + z2.B * z1.H) +
           2 * (z1.B * z2.E + z2.B * z1.E) + (z1.H * z2.E + z2.H * z1.E);
}

Int q_binding(const Fibration& fib, Triv t) {
    // Q_page(Z_b) = 0; every other value follows from the change formula
    // Q_tau(Z_b) - Q_page(Z_b) = tau(b) - tau_page(b)
    return triv_offset(fib, TrivDomain::binding, t, Triv::page);
}

Int q_cover_self(const Fibration& fib, TrivDomain dom) {
    if (dom == TrivDomain::binding)
        throw std::invalid_argument("q_cover_self: expects a cover domain");
    // the fiber surface from the cover to b has self-pairing zero in its own
    // trivialization; concatenating with the page along b (where the surface
    // trivialization is the constant one) adds Q_0(Z_b)
    return Int(0) + q_binding(fib, Triv::constant);
}

Int q_orb_via_cover(const Fibration& fib, Orbit o) {
    if (o == Orbit::b) throw std::invalid_argument("q_orb_via_cover: expects e or h");
    const bool is_e = o == Orbit::e;
    const TrivDomain dom = is_e ? TrivDomain::e_cover : TrivDomain::h_cover;
    const Triv surf = is_e ? Triv::surface_e : Triv::surface_h;
    const Int cover = is_e ? fib.q() : Int(2);
    // cover change rule with one end on the cover:
    // Q_orb(cover·Z) = Q_surf(cover·Z) + cover·(tau_orb - tau_surf)
    Int q_orb_cover = q_cover_self(fib, dom) + cover * triv_offset(fib, dom, Triv::orb, surf);
    Int denom = cover * cover;
    if (q_orb_cover % denom != 0)
        throw std::logic_error("q_orb_via_cover: self-pairing not divisible by cover^2");
    return q_orb_cover / denom;
}

Int ech_index(const Fibration& fib, const ReebCurrent& c) {
    if (c.B < 0 || c.H < 0 || c.E < 0)
        throw std::invalid_argument("ech_index: negative multiplicity");
    const Int& q = fib.q();
    const Int &B = c.B, &H = c.H, &E = c.E;
    auto [m, r] = split_by_q(fib, E);
    // (2/q)(E^2 - r^2) = 2q m^2 + 4mr keeps the evaluation over the integers
    return 2 * E * H - H * H + (q + 2) * H + 2 * q * B * B + (q + 3) * B + 4 * E * B +
           2 * q * H * B + 2 * q * m * m + 4 * m * r + (q + 1) * m + 2 * r +
           floor_2r_q(r, q) * (2 * r - q + 1);
}

IndexComponents ech_index_components(const Fibration& fib, const ReebCurrent& c) {
    FiberClass z(c);
    return {Int(0), q_pairing(fib, z, z), total_cz(fib, c)};
}

Int self_linking(const Fibration& fib) {
    return -relative_chern(fib, RelClass::z_b, Triv::page);
}

}  // namespace ech2q
