#include "ech2q/exact.hpp"

#include <ostream>
#include <queue>
#include <stdexcept>
#include <utility>

namespace ech2q {

namespace {

Int floor_div(const Int& n, const Int& d) {
    // d > 0 here; cpp_int division truncates toward zero
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

}  // namespace

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Int Rational::floor() const { return floor_div(num_, den_); }

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Perturbed& Perturbed::operator+=(const Perturbed& o) {
    base += o.base;
    delta += o.delta;
    return *this;
}

Perturbed& Perturbed::operator-=(const Perturbed& o) {
    base -= o.base;
    delta -= o.delta;
    return *this;
}

std::string Perturbed::str() const {
    std::string s = base.str();
    if (delta != 0) {
        Int c = delta < 0 ? Int(-delta) : delta;
        s += delta < 0 ? '-' : '+';
        if (c != 1) s += c.str();
        s += "\xce\xb4";  // UTF-8 delta
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Perturbed& x) { return os << x.str(); }

Int perturbed_floor(const Perturbed& x) {
    Int f = x.base.floor();
    if (x.base.is_integer() && x.delta < 0) return f - 1;
    return f;
}

namespace {

struct StairNode {
    Perturbed value;
    Int m;
    Int n;
};

// min-heap order: lexicographic on (value, m, n)
struct StairNodeAfter {
    bool operator()(const StairNode& a, const StairNode& b) const {
        if (a.value != b.value) return b.value < a.value;
        if (a.m != b.m) return b.m < a.m;
        return b.n < a.n;
    }
};

}  // namespace

Staircase::Staircase(Perturbed a, Perturbed b, std::size_t count)
    : a_(std::move(a)), b_(std::move(b)) {
    const Perturbed zero;
    if (!(a_ > zero) || !(b_ > zero))
        throw std::invalid_argument("Staircase: a and b must be positive");

    // Each lattice point (m,n) is reached exactly once: from (m,n-1) when
    // n > 0, and from (m-1,0) when n = 0. Values accumulate additively so
    // every node carries the exact sum a·m + b·n.
    std::priority_queue<StairNode, std::vector<StairNode>, StairNodeAfter> heap;
    heap.push(StairNode{zero, 0, 0});
    entries_.reserve(count);
    while (entries_.size() < count) {
        StairNode top = heap.top();
        heap.pop();
        entries_.push_back(StairEntry{top.value, LatticeWitness{top.m, top.n}});
        if (top.n == 0) heap.push(StairNode{top.value + a_, top.m + 1, 0});
        heap.push(StairNode{top.value + b_, top.m, top.n + 1});
    }
}

const StairEntry& Staircase::at(std::size_t k) const {
    if (k >= entries_.size()) throw std::out_of_range("Staircase: index past generated length");
    return entries_[k];
}

std::vector<StairEntry> staircase_sequence(const Perturbed& a, const Perturbed& b,
                                           std::size_t count) {
    return Staircase(a, b, count).entries();
}

Int repeat_count(const Staircase& stair, std::size_t k) {
    const StairEntry& ek = stair.at(k);
    Int reps = 0;
    for (std::size_t j = k + 1; j-- > 0;) {
        if (stair.entries()[j].value != ek.value) break;
        ++reps;
    }
    return reps;
}

}  // namespace ech2q
