#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hessform/rational.hpp"

namespace hessform {

/// Seeded deterministic generator for sample points and random test forms.
/// All draws go through explicit modular reduction of mt19937_64 output so a
/// given seed produces the same stream on every platform.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    /// Uniform-ish integer in [lo, hi], inclusive.
    long int_in(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("SampleRng::int_in: empty range");
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(gen_() % span);
    }

    /// Rational in [lo, hi] with denominator 1..5 and |numerator| <= 20;
    /// the small-height grid that keeps downstream exact arithmetic cheap.
    Rational rational_in(const Rational& lo, const Rational& hi) {
        const long q = int_in(1, 5);
        long nlo = (lo * Rational(q)).ceil_to_long();
        long nhi = (hi * Rational(q)).floor_to_long();
        nlo = std::max(nlo, -20L);
        nhi = std::min(nhi, 20L);
        if (nlo > nhi) return Rational(lo.ceil_to_long());
        return Rational(int_in(nlo, nhi), q);
    }

    std::vector<Rational> point_in_box(int n, const Rational& lo, const Rational& hi) {
        std::vector<Rational> p(n);
        for (auto& c : p) c = rational_in(lo, hi);
        return p;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace hessform
