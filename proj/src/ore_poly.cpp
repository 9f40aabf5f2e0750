#include "orelab/ore_poly.hpp"

#include <algorithm>

#include "orelab/scan.hpp"

namespace orelab {

CtxPtr make_context(RingPtr ring, QdPtr qd) {
    if (!ring || !qd) throw ValidationError("Ore context needs ring and maps");
    if (qd->ring() != ring)
        throw MismatchError("quasi-derivation lives on a different ring");
    return std::make_shared<const OreContext>(OreContext{std::move(ring), qd});
}

SkewPoly::SkewPoly(CtxPtr ctx, std::vector<Elem> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (!ctx_) throw ValidationError("skew polynomial needs a context");
    while (!coeffs_.empty() && ctx_->ring->is_zero(coeffs_.back()))
        coeffs_.pop_back();
}

SkewPoly SkewPoly::zero(CtxPtr ctx) { return SkewPoly(std::move(ctx), {}); }

SkewPoly SkewPoly::constant(CtxPtr ctx, const Elem& c) {
    return SkewPoly(std::move(ctx), {c});
}

SkewPoly SkewPoly::monomial(CtxPtr ctx, const Elem& c, std::uint32_t deg) {
    if (!ctx) throw ValidationError("skew polynomial needs a context");
    std::vector<Elem> coeffs(deg + 1, ctx->ring->zero());
    coeffs[deg] = c;
    return SkewPoly(std::move(ctx), std::move(coeffs));
}

const Elem& SkewPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : ctx_->ring->zero();
}

void SkewPoly::check_same(const SkewPoly& o) const {
    if (ctx_ != o.ctx_)
        throw MismatchError("skew polynomials from different Ore contexts");
}

SkewPoly SkewPoly::add(const SkewPoly& o) const {
    check_same(o);
    const Ring& R = *ctx_->ring;
    std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()),
                          R.zero());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = R.add(coeff(k), o.coeff(k));
    return SkewPoly(ctx_, std::move(out));
}

SkewPoly SkewPoly::sub(const SkewPoly& o) const {
    check_same(o);
    const Ring& R = *ctx_->ring;
    std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()),
                          R.zero());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = R.sub(coeff(k), o.coeff(k));
    return SkewPoly(ctx_, std::move(out));
}

SkewPoly SkewPoly::mul(const SkewPoly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return zero(ctx_);
    const Ring& R = *ctx_->ring;
    const QuasiDerivation& qd = *ctx_->qd;
    std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, R.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (R.is_zero(coeffs_[i])) continue;
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            for (std::size_t l = 0; l <= i; ++l) {
                Elem term = R.mul(coeffs_[i],
                                  qd.f(static_cast<std::uint32_t>(l),
                                       static_cast<std::uint32_t>(i),
                                       o.coeffs_[k]));
                out[l + k] = R.add(out[l + k], term);
            }
        }
    }
    return SkewPoly(ctx_, std::move(out));
}

bool SkewPoly::operator==(const SkewPoly& o) const {
    return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
}

std::string SkewPoly::str() const {
    if (is_zero()) return "0";
    const Ring& R = *ctx_->ring;
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (R.is_zero(coeffs_[k])) continue;
        if (!out.empty()) out += " + ";
        out += "{" + R.format(coeffs_[k]) + "}";
        if (k == 1) out += " x";
        if (k > 1) out += " x^" + std::to_string(k);
    }
    return out;
}

SkewPoly monomial_product(const CtxPtr& ctx, const Elem& a, std::uint32_t i,
                          const Elem& b, std::uint32_t j) {
    const Ring& R = *ctx->ring;
    std::vector<Elem> out(i + j + 1, R.zero());
    for (std::uint32_t l = 0; l <= i; ++l)
        out[l + j] = R.mul(a, ctx->qd->f(l, i, b));
    return SkewPoly(ctx, std::move(out));
}

SkewPoly parse_skew_poly(const CtxPtr& ctx, const std::string& text) {
    const Ring& R = *ctx->ring;
    std::string t = trim_copy(text);
    if (t.empty()) throw ValidationError("empty polynomial literal");
    if (t == "0") return SkewPoly::zero(ctx);
    std::vector<Elem> coeffs;
    auto put = [&](std::size_t k, const Elem& c) {
        while (coeffs.size() <= k) coeffs.push_back(R.zero());
        coeffs[k] = R.add(coeffs[k], c);
    };
    auto parse_xpart = [&](const std::string& s) -> std::size_t {
        // "" -> 0 handled by caller; here s is "x" or "x^k".
        if (s == "x") return 1;
        if (s.size() > 2 && s[0] == 'x' && s[1] == '^') {
            std::size_t pos = 0;
            unsigned long k = 0;
            try {
                k = std::stoul(s.substr(2), &pos);
            } catch (const std::exception&) {
                throw ValidationError("bad power in term: " + s);
            }
            if (pos != s.size() - 2)
                throw ValidationError("bad power in term: " + s);
            return k;
        }
        throw ValidationError("bad x-part in term: " + s);
    };
    for (const auto& raw : split_top_level(t, '+')) {
        std::string term = trim_copy(raw);
        if (term.empty())
            throw ValidationError("empty term in polynomial: " + text);
        if (term[0] == '{') {
            std::size_t close = term.find('}');
            if (close == std::string::npos)
                throw ValidationError("unclosed brace in term: " + term);
            Elem c = R.parse(term.substr(1, close - 1));
            std::string rest = trim_copy(term.substr(close + 1));
            if (!rest.empty() && rest[0] == '*')
                rest = trim_copy(rest.substr(1));
            put(rest.empty() ? 0 : parse_xpart(rest), c);
        } else if (term[0] == 'x' &&
                   (term.size() == 1 || term[1] == '^')) {
            put(parse_xpart(term), R.one());
        } else {
            if (term.find('x') != std::string::npos)
                throw ValidationError(
                    "ambiguous term (brace the coefficient): " + term);
            put(0, R.parse(term));
        }
    }
    return SkewPoly(ctx, std::move(coeffs));
}

SkewPoly tuple_poly(const CtxPtr& ctx, std::uint64_t t,
                    std::uint32_t n_coeffs) {
    const std::uint32_t n = ctx->ring->size();
    std::vector<Elem> coeffs;
    coeffs.reserve(n_coeffs);
    for (std::uint32_t k = 0; k < n_coeffs; ++k) {
        coeffs.emplace_back(static_cast<std::uint32_t>(t % n));
        t /= n;
    }
    return SkewPoly(ctx, std::move(coeffs));
}

std::vector<SkewPoly> bounded_right_ann(const SkewPoly& p, PrincipalKind kind,
                                        std::uint32_t deg_phi,
                                        std::uint32_t deg_mult,
                                        const Config& cfg) {
    const CtxPtr& ctx = p.ctx();
    const RingPtr& R = ctx->ring;
    if (!R->enumerable())
        throw BackendError("bounded annihilator scans need an enumerable ring");
    const std::uint64_t n = R->size();
    std::uint64_t candidates = 1;
    for (std::uint32_t k = 0; k <= deg_phi; ++k) {
        candidates *= n;
        if (candidates > cfg.scan_cap)
            throw CapError("bounded annihilator scan would visit " +
                           std::to_string(candidates) +
                           "+ candidates; lower the degree bound");
    }
    const std::uint32_t kmax = kind == PrincipalKind::ore ? deg_mult : 0;
    // Precompute p * (r x^k) for every multiplier.
    std::vector<std::vector<SkewPoly>> pm(kmax + 1);
    for (std::uint32_t k = 0; k <= kmax; ++k) {
        pm[k].reserve(n);
        for (std::uint32_t r = 0; r < n; ++r)
            pm[k].push_back(
                p.mul(SkewPoly::monomial(ctx, Elem(r), k)));
    }
    std::vector<SkewPoly> out;
    for (std::uint64_t t = 0; t < candidates; ++t) {
        SkewPoly phi = tuple_poly(ctx, t, deg_phi + 1);
        bool ok = true;
        for (std::uint32_t k = 0; k <= kmax && ok; ++k)
            for (std::uint32_t r = 0; r < n && ok; ++r)
                ok = pm[k][r].mul(phi).is_zero();
        if (ok) out.push_back(std::move(phi));
    }
    return out;
}

} // namespace orelab
