#include "ech2q/orbits.hpp"

#include "ech2q/index.hpp"

#include "doctest.h"

#include <map>
#include <sstream>
#include <stdexcept>

using namespace ech2q;

namespace {

std::string show(const ReebCurrent& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

}  // namespace

TEST_CASE("fibration parameters must be odd and at least three") {
    CHECK_NOTHROW(Fibration(3));
    CHECK_NOTHROW(Fibration(31));
    CHECK_THROWS_AS(Fibration(4), std::invalid_argument);
    CHECK_THROWS_AS(Fibration(2), std::invalid_argument);
    CHECK_THROWS_AS(Fibration(1), std::invalid_argument);
    CHECK_THROWS_AS(Fibration(-3), std::invalid_argument);
}

TEST_CASE("degree is 2qB + qH + 2E") {
    CHECK(degree(Fibration(3), ReebCurrent(1, 0, 0)) == 6);
    CHECK(degree(Fibration(5), ReebCurrent(0, 1, 2)) == 9);
    CHECK(degree(Fibration(7), ReebCurrent()) == 0);
    // parity of the degree equals the parity of H
    Fibration fib(5);
    for (int b = 0; b <= 3; ++b)
        for (int h = 0; h <= 1; ++h)
            for (int e = 0; e <= 3; ++e)
                CHECK(degree(fib, ReebCurrent(b, h, e)) % 2 == h);
}

TEST_CASE("action is degree over 2q") {
    Fibration fib(3);
    CHECK(action(fib, ReebCurrent(1, 0, 0)) == Rational(1));
    CHECK(action(fib, ReebCurrent(0, 1, 1)) == Rational(5, 6));
    CHECK(action(fib, ReebCurrent()) == Rational(0));
}

TEST_CASE("linking numbers of distinct fiber orbits") {
    CHECK(linking(Fibration(7), Orbit::b, Orbit::h) == 7);
    CHECK(linking(Fibration(3), Orbit::e, Orbit::h) == 1);
    CHECK(linking(Fibration(11), Orbit::b, Orbit::e) == 2);
    // symmetric
    Fibration fib(5);
    CHECK(linking(fib, Orbit::h, Orbit::b) == linking(fib, Orbit::b, Orbit::h));
    CHECK(linking(fib, Orbit::h, Orbit::e) == linking(fib, Orbit::e, Orbit::h));
    CHECK_THROWS_AS(linking(fib, Orbit::e, Orbit::e), std::invalid_argument);
}

TEST_CASE("admissibility caps the hyperbolic multiplicity") {
    CHECK(ReebCurrent(4, 1, 9).admissible());
    CHECK(ReebCurrent().admissible());
    CHECK_FALSE(ReebCurrent(0, 2, 0).admissible());
}

TEST_CASE("generator enumeration matches the low-degree tables") {
    Fibration fib(3);
    auto gens = enumerate_generators(fib, 6);
    REQUIRE(gens.size() == 7);
    CHECK(show(gens[0]) == "{}");
    CHECK(show(gens[1]) == "e");
    CHECK(show(gens[2]) == "h");
    CHECK(show(gens[3]) == "e^2");
    CHECK(show(gens[4]) == "he");
    CHECK(show(gens[5]) == "e^3");
    CHECK(show(gens[6]) == "b");

    auto gens5 = enumerate_generators(Fibration(5), 4);
    REQUIRE(gens5.size() == 3);
    CHECK(show(gens5[0]) == "{}");
    CHECK(show(gens5[1]) == "e");
    CHECK(show(gens5[2]) == "e^2");

    auto trivial = enumerate_generators(Fibration(5), 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].empty());
}

TEST_CASE("the degree-12 slice of q=3 lists e^6, be^3, b^2 in order") {
    Fibration fib(3);
    std::vector<ReebCurrent> slice;
    for (const auto& c : enumerate_generators(fib, 12))
        if (degree(fib, c) == 12) slice.push_back(c);
    REQUIRE(slice.size() == 3);
    CHECK(slice[0] == ReebCurrent(0, 0, 6));
    CHECK(slice[1] == ReebCurrent(1, 0, 3));
    CHECK(slice[2] == ReebCurrent(2, 0, 0));
}

TEST_CASE("generator counts per degree follow the sorting lemma") {
    for (int qi : {3, 5, 7}) {
        Fibration fib(qi);
        const Int q = fib.q();
        const Int bound = 10 * q;
        std::map<Int, Int> count;
        std::map<Int, ReebCurrent> sole;
        for (const auto& c : enumerate_generators(fib, bound)) {
            Int d = degree(fib, c);
            ++count[d];
            sole[d] = c;
        }
        for (Int d = 0; d <= bound; ++d) {
            Int expected;
            if (d % 2 == 0)
                expected = d / (2 * q) + 1;
            else if (d >= q)
                expected = (d - q) / (2 * q) + 1;
            else
                expected = 0;
            CHECK(count[d] == expected);
        }
        // one generator per even degree below 2q (e^i) and per odd degree
        // q..3q-2 (he^i)
        for (Int i = 0; i < q; ++i) {
            CHECK(count[2 * i] == 1);
            CHECK(sole[2 * i] == ReebCurrent(0, 0, i));
            CHECK(count[q + 2 * i] == 1);
            CHECK(sole[q + 2 * i] == ReebCurrent(0, 1, i));
        }
    }
}

TEST_CASE("equal degree happens exactly when H matches and x+y agrees") {
    Fibration fib(5);
    const Int q = fib.q();
    auto gens = enumerate_generators(fib, 10 * q);
    for (const auto& c1 : gens)
        for (const auto& c2 : gens) {
            bool same_degree = degree(fib, c1) == degree(fib, c2);
            Int i1 = c1.E % q, i2 = c2.E % q;
            bool same_shape = c1.H == c2.H && i1 == i2 && c1.E / q + c1.B == c2.E / q + c2.B;
            CHECK(same_degree == same_shape);
        }
}

TEST_CASE("enumeration order carries strictly increasing index in steps of two") {
    for (int qi : {3, 5}) {
        Fibration fib(qi);
        auto gens = enumerate_generators(fib, 20 * fib.q());
        for (std::size_t i = 1; i < gens.size(); ++i)
            CHECK(ech_index(fib, gens[i]) == ech_index(fib, gens[i - 1]) + 2);
    }
}
