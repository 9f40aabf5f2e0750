#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "orelab/errors.hpp"
#include "orelab/rat.hpp"

namespace orelab {

class Elem;

// Gaussian rational re + im*i.
struct GaussVal {
    Rat re;
    Rat im;
    bool operator==(const GaussVal&) const = default;
};

// Pair (a, t), a integer and t rational, multiplying as
// (a,t)(a',t') = (a a', a t' + t a').
struct IntRatVal {
    std::int64_t a = 0;
    Rat t;
    bool operator==(const IntRatVal&) const = default;
};

// Dense coefficient list over an enumerable base ring; entries are base
// element indices, trailing zeros trimmed, empty list == zero.
struct PolyVal {
    std::vector<std::uint32_t> coeffs;
    bool operator==(const PolyVal&) const = default;
};

struct SumVal;
using SumPtr = std::shared_ptr<const SumVal>;

// One element of some ring. Which alternative is live is fixed by the
// ring's backend; Elems carry no ring pointer, so equality is plain
// content equality and rings must only be handed their own elements.
class Elem {
  public:
    Elem() : rep_(std::uint32_t{0}) {}
    explicit Elem(std::uint32_t index) : rep_(index) {}
    explicit Elem(GaussVal v) : rep_(std::move(v)) {}
    explicit Elem(IntRatVal v) : rep_(std::move(v)) {}
    explicit Elem(PolyVal v) : rep_(std::move(v)) {}
    explicit Elem(SumPtr v) : rep_(std::move(v)) {}

    static Elem pair(Elem left, Elem right);

    bool is_index() const { return std::holds_alternative<std::uint32_t>(rep_); }

    std::uint32_t idx() const { return get<std::uint32_t>("index"); }
    const GaussVal& gauss() const { return get<GaussVal>("gauss"); }
    const IntRatVal& intrat() const { return get<IntRatVal>("intrat"); }
    const PolyVal& poly() const { return get<PolyVal>("poly"); }
    const SumVal& sum() const;

    bool operator==(const Elem& o) const;
    bool operator!=(const Elem& o) const { return !(*this == o); }

  private:
    template <typename T>
    const T& get(const char* what) const {
        const T* p = std::get_if<T>(&rep_);
        if (!p)
            throw MismatchError(std::string("element is not a ") + what +
                                " value");
        return *p;
    }

    std::variant<std::uint32_t, GaussVal, IntRatVal, PolyVal, SumPtr> rep_;
};

// Component pair for direct sums whose sides are not both enumerable.
struct SumVal {
    Elem left;
    Elem right;
    bool operator==(const SumVal&) const = default;
};

inline Elem Elem::pair(Elem left, Elem right) {
    return Elem(std::make_shared<const SumVal>(
        SumVal{std::move(left), std::move(right)}));
}

inline const SumVal& Elem::sum() const { return *get<SumPtr>("sum"); }

inline bool Elem::operator==(const Elem& o) const {
    if (rep_.index() != o.rep_.index()) return false;
    if (const auto* p = std::get_if<SumPtr>(&rep_))
        return **p == *std::get<SumPtr>(o.rep_);
    return rep_ == o.rep_;
}

} // namespace orelab
