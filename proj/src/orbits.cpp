#include "ech2q/orbits.hpp"

#include <ostream>
#include <stdexcept>

namespace ech2q {

Fibration::Fibration(Int q) : q_(std::move(q)) {
    if (q_ < 3 || q_ % 2 == 0)
        throw std::invalid_argument("Fibration: q must be odd and >= 3");
}

const char* orbit_name(Orbit o) {
    switch (o) {
        case Orbit::b: return "b";
        case Orbit::h: return "h";
        case Orbit::e: return "e";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const ReebCurrent& c) {
    if (c.empty()) return os << "{}";
    auto power = [&os](const char* name, const Int& mult) {
        if (mult == 0) return;
        os << name;
        if (mult != 1) os << '^' << mult;
    };
    power("b", c.B);
    power("h", c.H);
    power("e", c.E);
    return os;
}

Int degree(const Fibration& fib, const ReebCurrent& c) {
    return 2 * fib.q() * c.B + fib.q() * c.H + 2 * c.E;
}

Rational action(const Fibration& fib, const ReebCurrent& c) {
    return Rational(degree(fib, c), 2 * fib.q());
}

Int linking(const Fibration& fib, Orbit x, Orbit y) {
    if (x == y) throw std::invalid_argument("linking: orbits must be distinct");
    if (x == Orbit::e || y == Orbit::e) {
        Orbit other = x == Orbit::e ? y : x;
        return other == Orbit::h ? Int(1) : Int(2);
    }
    return fib.q();  // {b, h}
}

std::vector<ReebCurrent> enumerate_generators(const Fibration& fib, const Int& max_degree) {
    if (max_degree < 0) throw std::invalid_argument("enumerate_generators: negative degree");
    const Int& q = fib.q();
    std::vector<ReebCurrent> out;
    // Within a degree, H is forced by parity (q odd) and E is then forced by
    // B, so ascending B enumerates the degree slice in index order.
    for (Int d = 0; d <= max_degree; ++d) {
        Int h = d % 2;
        Int rest = d - q * h;
        if (rest < 0) continue;  // odd degrees below q carry no generator
        for (Int b = 0; 2 * q * b <= rest; ++b) {
            Int twice_e = rest - 2 * q * b;
            if (twice_e % 2 != 0) continue;  // unreachable: rest is even
            out.emplace_back(b, h, twice_e / 2);
        }
    }
    return out;
}

}  // namespace ech2q
