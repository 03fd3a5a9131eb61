#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ech2q {

/// Arbitrary-precision integer. All arithmetic in this library is exact;
/// there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
    Rational(int n) : num_(n), den_(1) {}             // NOLINT
    Rational(Int n, Int d);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    /// Largest integer <= *this.
    Int floor() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "n" when integral, otherwise "n/d".
    std::string str() const;

private:
    void normalize();

    Int num_;
    Int den_;  // always >= 1
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A rational plus an integer multiple of a formal infinitesimal delta > 0.
/// delta stands in for the "sufficiently small positive irrational" used to
/// perturb monodromy angles and rotation numbers; ordering is lexicographic,
/// which realizes every strict inequality such a perturbation can produce
/// without committing to a magnitude.
struct Perturbed {
    Rational base;
    Int delta;  // coefficient of delta

    Perturbed() : base(0), delta(0) {}
    Perturbed(Rational b) : base(std::move(b)), delta(0) {}  // NOLINT
    Perturbed(Rational b, Int d) : base(std::move(b)), delta(std::move(d)) {}

    bool is_zero() const { return base.is_zero() && delta == 0; }

    Perturbed operator-() const { return {-base, -delta}; }
    Perturbed& operator+=(const Perturbed& o);
    Perturbed& operator-=(const Perturbed& o);

    friend Perturbed operator+(Perturbed a, const Perturbed& b) { return a += b; }
    friend Perturbed operator-(Perturbed a, const Perturbed& b) { return a -= b; }

    /// Componentwise integer scaling.
    friend Perturbed operator*(const Int& k, const Perturbed& x) {
        return {Rational(k) * x.base, k * x.delta};
    }

    friend bool operator==(const Perturbed& a, const Perturbed& b) {
        return a.base == b.base && a.delta == b.delta;
    }
    friend bool operator!=(const Perturbed& a, const Perturbed& b) { return !(a == b); }
    friend bool operator<(const Perturbed& a, const Perturbed& b) {
        return a.base < b.base || (a.base == b.base && a.delta < b.delta);
    }
    friend bool operator>(const Perturbed& a, const Perturbed& b) { return b < a; }
    friend bool operator<=(const Perturbed& a, const Perturbed& b) { return !(b < a); }
    friend bool operator>=(const Perturbed& a, const Perturbed& b) { return !(a < b); }

    /// "r", "r+cδ" or "r-cδ" with r a reduced fraction; c omitted when 1.
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Perturbed& x);

/// floor(r + c·delta) for the formal infinitesimal delta > 0: equals
/// floor(r) unless r is an integer and c < 0, in which case r - 1.
Int perturbed_floor(const Perturbed& x);

struct LatticeWitness {
    Int m;
    Int n;

    friend bool operator==(const LatticeWitness& a, const LatticeWitness& b) {
        return a.m == b.m && a.n == b.n;
    }
};

struct StairEntry {
    Perturbed value;
    LatticeWitness witness;
};

/// The sequence N(a,b) of values a·m + b·n over m,n >= 0, listed in
/// nondecreasing order with multiplicity (one entry per lattice point).
/// Ties are ordered lexicographically by (m, n) so witnesses are reproducible.
class Staircase {
public:
    /// Generates the first `count` entries. Throws std::invalid_argument
    /// unless a > 0 and b > 0.
    Staircase(Perturbed a, Perturbed b, std::size_t count);

    const Perturbed& a() const { return a_; }
    const Perturbed& b() const { return b_; }
    const std::vector<StairEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Entry N_k with its witness. Throws std::out_of_range past the
    /// generated length.
    const StairEntry& at(std::size_t k) const;

private:
    Perturbed a_;
    Perturbed b_;
    std::vector<StairEntry> entries_;
};

/// First `count` entries of N(a,b) with lattice witnesses.
std::vector<StairEntry> staircase_sequence(const Perturbed& a, const Perturbed& b,
                                           std::size_t count);

/// #{ j <= k : N_j = N_k }, written $N_k. Throws std::out_of_range when k
/// is past the staircase's generated length.
Int repeat_count(const Staircase& stair, std::size_t k);

}  // namespace ech2q
