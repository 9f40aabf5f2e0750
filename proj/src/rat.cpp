#include "orelab/rat.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

namespace orelab {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

std::int64_t Rat::checked(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("rational component exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

Rat Rat::make(__int128 n, __int128 d) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rat r;
    r.num_ = checked(n);
    r.den_ = checked(d);
    return r;
}

Rat::Rat(std::int64_t n, std::int64_t d) {
    *this = make(static_cast<__int128>(n), static_cast<__int128>(d));
}

Rat Rat::operator+(const Rat& o) const {
    return make(static_cast<__int128>(num_) * o.den_ +
                    static_cast<__int128>(o.num_) * den_,
                static_cast<__int128>(den_) * o.den_);
}

Rat Rat::operator-(const Rat& o) const {
    return make(static_cast<__int128>(num_) * o.den_ -
                    static_cast<__int128>(o.num_) * den_,
                static_cast<__int128>(den_) * o.den_);
}

Rat Rat::operator*(const Rat& o) const {
    return make(static_cast<__int128>(num_) * o.num_,
                static_cast<__int128>(den_) * o.den_);
}

Rat Rat::operator/(const Rat& o) const {
    if (o.num_ == 0) throw ValidationError("division by zero rational");
    return make(static_cast<__int128>(num_) * o.den_,
                static_cast<__int128>(den_) * o.num_);
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = checked(-static_cast<__int128>(num_));
    r.den_ = den_;
    return r;
}

bool Rat::operator<(const Rat& o) const {
    return static_cast<__int128>(num_) * o.den_ <
           static_cast<__int128>(o.num_) * den_;
}

std::string Rat::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational literal");
    std::size_t slash = text.find('/');
    auto to_i64 = [&](const std::string& part) -> std::int64_t {
        if (part.empty()) throw ValidationError("bad rational literal: " + text);
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            throw ValidationError("bad rational literal: " + text);
        }
        if (pos != part.size())
            throw ValidationError("bad rational literal: " + text);
        return v;
    };
    if (slash == std::string::npos) return Rat(to_i64(text));
    return Rat(to_i64(text.substr(0, slash)), to_i64(text.substr(slash + 1)));
}

} // namespace orelab
