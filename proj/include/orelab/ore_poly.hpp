#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orelab/maps.hpp"
#include "orelab/ring.hpp"

namespace orelab {

// A skew polynomial ring R[x; sigma, delta]: left coefficients, with the
// commutation rule x a = sigma(a) x + delta(a).
struct OreContext {
    RingPtr ring;
    QdPtr qd;
};
using CtxPtr = std::shared_ptr<const OreContext>;

CtxPtr make_context(RingPtr ring, QdPtr qd);

class SkewPoly {
  public:
    SkewPoly(CtxPtr ctx, std::vector<Elem> coeffs);
    static SkewPoly zero(CtxPtr ctx);
    static SkewPoly constant(CtxPtr ctx, const Elem& c);
    static SkewPoly monomial(CtxPtr ctx, const Elem& c, std::uint32_t deg);

    const CtxPtr& ctx() const { return ctx_; }

    // -1 is the zero polynomial's sentinel (standing in for degree -inf);
    // nonzero constants have degree 0.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Ring zero beyond the degree.
    const Elem& coeff(std::size_t k) const;
    const std::vector<Elem>& coeffs() const { return coeffs_; }

    SkewPoly add(const SkewPoly& o) const;
    SkewPoly sub(const SkewPoly& o) const;
    // Skew product via x^i b = sum_l f_l^i(b) x^l.
    SkewPoly mul(const SkewPoly& o) const;

    bool operator==(const SkewPoly& o) const;
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    // "{c0} + {c1} x + {c2} x^2" with zero terms dropped; "0" when zero.
    std::string str() const;

  private:
    void check_same(const SkewPoly& o) const;
    CtxPtr ctx_;
    std::vector<Elem> coeffs_; // trailing zeros trimmed
};

// (a x^i)(b x^j) = sum_{l<=i} a f_l^i(b) x^{l+j}.
SkewPoly monomial_product(const CtxPtr& ctx, const Elem& a, std::uint32_t i,
                          const Elem& b, std::uint32_t j);

// Grammar: term (+ term)*; term = "{" elem "}" [x-part] | x-part | elem,
// x-part = "x" | "x^<k>". Unbraced constant literals must not contain the
// letter x; braces are always safe and always printed.
SkewPoly parse_skew_poly(const CtxPtr& ctx, const std::string& text);

// The t-th coefficient tuple (c_j = digit j of t in base |R|) as a
// polynomial with n_coeffs slots; the scan order for every bounded
// annihilator search.
SkewPoly tuple_poly(const CtxPtr& ctx, std::uint64_t t,
                    std::uint32_t n_coeffs);

enum class PrincipalKind {
    element, // multipliers r in R:        r_bounded(p R)
    ore      // multipliers r x^k, k <= deg_bound: r_bounded(p S)
};

// Every phi of degree <= deg_phi with p * m * phi = 0 for all bounded
// multipliers m, in tuple_poly order. Enumerable rings only; the
// candidate count n^(deg_phi+1) must stay within cfg.scan_cap.
std::vector<SkewPoly> bounded_right_ann(const SkewPoly& p, PrincipalKind kind,
                                        std::uint32_t deg_phi,
                                        std::uint32_t deg_mult,
                                        const Config& cfg = {});

} // namespace orelab
