#pragma once

#include <cstdint>
#include <string>

#include "orelab/errors.hpp"

namespace orelab {

// Exact rational with int64 numerator/denominator, canonical form
// gcd(|num|, den) == 1 and den > 0. Intermediates run through __int128;
// results that do not fit int64 raise OverflowError instead of wrapping.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const; // ValidationError on zero divisor
    Rat operator-() const;

    bool operator==(const Rat& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    // Total order (exact comparison via cross multiplication).
    bool operator<(const Rat& o) const;

    // "p/q", or just "p" when q == 1.
    std::string str() const;

    // Accepts "p", "p/q", optional leading '-'. ValidationError otherwise.
    static Rat parse(const std::string& text);

  private:
    std::int64_t num_;
    std::int64_t den_;

    static std::int64_t checked(__int128 v);
    static Rat make(__int128 n, __int128 d);
};

} // namespace orelab
