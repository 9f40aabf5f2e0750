#include "orelab/maps.hpp"

#include <algorithm>
#include <functional>

#include "orelab/scan.hpp"

namespace orelab {

namespace {

std::string map_label(const nlohmann::json& d) {
    const std::string kind = d.at("kind").get<std::string>();
    if (kind == "table") {
        std::string out = "table[";
        bool first = true;
        for (const auto& v : d.at("images")) {
            if (!first) out += ",";
            out += std::to_string(v.get<std::uint32_t>());
            first = false;
        }
        return out + "]";
    }
    if (kind == "componentwise")
        return "componentwise(" + map_label(d.at("left")) + ", " +
               map_label(d.at("right")) + ")";
    if (kind == "inner") return "inner(" + d.at("d").get<std::string>() + ")";
    return kind;
}

void check_map_keys(const nlohmann::json& spec,
                    std::initializer_list<const char*> allowed,
                    const char* what) {
    if (!spec.is_object() || !spec.contains("kind") ||
        !spec.at("kind").is_string())
        throw ValidationError(std::string(what) +
                              " spec must be an object with a 'kind'");
    for (auto it = spec.begin(); it != spec.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok)
            throw ValidationError("unknown key '" + it.key() + "' in " +
                                  what + " spec");
    }
}

} // namespace

// ---- Endo ----

struct Endo::Impl {
    RingPtr ring;
    nlohmann::json desc;
    std::function<Elem(const Elem&)> fn;
    std::vector<std::uint16_t> images; // enumerable only
    bool identity = false;
    std::optional<std::pair<Endo, Endo>> comps;
};

const RingPtr& Endo::ring() const { return impl_->ring; }

Elem Endo::operator()(const Elem& e) const {
    if (!impl_->images.empty()) return Elem(impl_->images[e.idx()]);
    return impl_->fn(e);
}

std::uint32_t Endo::apply_index(std::uint32_t i) const {
    return impl_->images[i];
}

bool Endo::is_identity() const { return impl_->identity; }

const nlohmann::json& Endo::descriptor() const { return impl_->desc; }

std::string Endo::label() const { return map_label(impl_->desc); }

const std::optional<std::pair<Endo, Endo>>& Endo::components() const {
    return impl_->comps;
}

namespace {

// Shared by endo and derivation validation: additive everywhere we can
// afford, and the multiplicative law via `law`.
void validate_map(const Ring& ring, const std::function<Elem(const Elem&)>& f,
                  const std::function<bool(const Elem&, const Elem&)>& law_ok,
                  const char* what, const Config& cfg) {
    if (ring.enumerable()) {
        const std::uint64_t n = ring.size();
        std::uint64_t bad = scan::find_first_serial(n * n, [&](std::uint64_t k) {
            Elem a = Elem(static_cast<std::uint32_t>(k / n));
            Elem b = Elem(static_cast<std::uint32_t>(k % n));
            if (f(ring.add(a, b)) != ring.add(f(a), f(b))) return true;
            return !law_ok(a, b);
        });
        if (bad != scan::npos) {
            Elem a = Elem(static_cast<std::uint32_t>(bad / n));
            Elem b = Elem(static_cast<std::uint32_t>(bad % n));
            throw ValidationError(std::string(what) + " law fails at (" +
                                  ring.format(a) + ", " + ring.format(b) + ")");
        }
        return;
    }
    auto elems = element_stream(ring, 24, cfg);
    for (const Elem& a : elems)
        for (const Elem& b : elems) {
            if (f(ring.add(a, b)) != ring.add(f(a), f(b)))
                throw ValidationError(std::string(what) +
                                      " is not additive at (" +
                                      ring.format(a) + ", " + ring.format(b) +
                                      ") (sampled validation)");
            if (!law_ok(a, b))
                throw ValidationError(std::string(what) + " law fails at (" +
                                      ring.format(a) + ", " + ring.format(b) +
                                      ") (sampled validation)");
        }
}

} // namespace

Endo make_endo(RingPtr ring, const nlohmann::json& spec, const Config& cfg) {
    if (!ring) throw ValidationError("endomorphism needs a ring");
    const char* what = "endomorphism";
    check_map_keys(spec, {"kind", "images", "left", "right"}, what);
    const std::string kind = spec.at("kind").get<std::string>();

    auto impl = std::make_shared<Endo::Impl>();
    impl->ring = ring;
    impl->desc = spec;

    if (kind == "identity") {
        impl->fn = [](const Elem& e) { return e; };
        impl->identity = true;
    } else if (kind == "table") {
        if (!ring->enumerable())
            throw ValidationError("table endomorphism needs an enumerable ring");
        if (!spec.contains("images") || !spec.at("images").is_array() ||
            spec.at("images").size() != ring->size())
            throw ValidationError("table endomorphism needs exactly " +
                                  std::to_string(ring->size()) + " images");
        std::vector<std::uint16_t> images;
        for (const auto& v : spec.at("images")) {
            if (!v.is_number_unsigned() ||
                v.get<std::uint64_t>() >= ring->size())
                throw ValidationError("table endomorphism image out of range");
            images.push_back(v.get<std::uint16_t>());
        }
        impl->images = std::move(images);
        auto& im = impl->images;
        impl->fn = [im](const Elem& e) { return Elem(im[e.idx()]); };
    } else if (kind == "eval0") {
        auto pr = std::dynamic_pointer_cast<const PolyRing>(ring);
        if (!pr) throw ValidationError("eval0 needs a poly ring");
        impl->fn = [pr](const Elem& e) { return pr->constant(pr->coeff(e, 0)); };
    } else if (kind == "square_var") {
        auto pr = std::dynamic_pointer_cast<const PolyRing>(ring);
        if (!pr) throw ValidationError("square_var needs a poly ring");
        impl->fn = [pr](const Elem& e) {
            const auto& c = e.poly().coeffs;
            std::vector<std::uint32_t> out(c.empty() ? 0 : 2 * c.size() - 1, 0);
            for (std::size_t k = 0; k < c.size(); ++k) out[2 * k] = c[k];
            return pr->from_coeffs(std::move(out));
        };
    } else if (kind == "negate_offdiag") {
        auto tr = std::dynamic_pointer_cast<const TriRing>(ring);
        if (!tr) throw ValidationError("negate_offdiag needs a tri2 ring");
        impl->fn = [tr](const Elem& e) {
            auto [a, b] = tr->parts(e.idx());
            return Elem(tr->compose(a, tr->base()->negi(b)));
        };
    } else if (kind == "halve_offdiag") {
        auto ir = std::dynamic_pointer_cast<const IntRatTriRing>(ring);
        if (!ir) throw ValidationError("halve_offdiag needs the int_rat_tri ring");
        impl->fn = [ir](const Elem& e) {
            const auto& v = e.intrat();
            return ir->value(v.a, v.t / Rat(2));
        };
    } else if (kind == "conj") {
        auto gr = std::dynamic_pointer_cast<const GaussRing>(ring);
        if (!gr) throw ValidationError("conj needs the gauss ring");
        impl->fn = [gr](const Elem& e) {
            const auto& v = e.gauss();
            return gr->value(v.re, -v.im);
        };
    } else if (kind == "componentwise") {
        auto sr = std::dynamic_pointer_cast<const SumRing>(ring);
        if (!sr) throw ValidationError("componentwise endomorphism needs a sum ring");
        if (!spec.contains("left") || !spec.contains("right"))
            throw ValidationError("componentwise endomorphism needs 'left' and 'right'");
        Endo fl = make_endo(sr->left(), spec.at("left"), cfg);
        Endo fr = make_endo(sr->right(), spec.at("right"), cfg);
        impl->comps = std::make_pair(fl, fr);
        impl->fn = [sr, fl, fr](const Elem& e) {
            auto [l, r] = sr->parts(e);
            return sr->compose(fl(l), fr(r));
        };
    } else {
        throw ValidationError("unknown endomorphism kind '" + kind + "'");
    }

    // Unital check, then the homomorphism laws.
    if (impl->fn(ring->one()) != ring->one())
        throw ValidationError("endomorphism must fix 1");
    if (impl->fn(ring->zero()) != ring->zero())
        throw ValidationError("endomorphism must fix 0");
    const auto& f = impl->fn;
    validate_map(*ring, f,
                 [&](const Elem& a, const Elem& b) {
                     return f(ring->mul(a, b)) == ring->mul(f(a), f(b));
                 },
                 what, cfg);

    if (ring->enumerable() && impl->images.empty()) {
        impl->images.resize(ring->size());
        for (std::uint32_t i = 0; i < ring->size(); ++i)
            impl->images[i] = static_cast<std::uint16_t>(f(Elem(i)).idx());
    }
    if (!impl->identity && ring->enumerable()) {
        bool ident = true;
        for (std::uint32_t i = 0; i < ring->size() && ident; ++i)
            ident = impl->images[i] == i;
        impl->identity = ident;
    }
    return Endo(std::move(impl));
}

std::vector<Endo> enumerate_endos(const RingPtr& ring, const Config& cfg) {
    if (!ring->enumerable())
        throw BackendError("endomorphism enumeration needs an enumerable ring");
    const std::uint32_t n = ring->size();
    if (n > cfg.endo_cap)
        throw CapError("endomorphism enumeration capped at size " +
                       std::to_string(cfg.endo_cap));
    const std::uint32_t onei = ring->index(ring->one());

    constexpr std::uint32_t unset = 0xffffffffu;
    std::vector<std::uint32_t> img(n, unset);
    std::vector<std::uint32_t> assigned; // order of assignment, for undo
    std::vector<std::vector<std::uint16_t>> results;

    // Assign img[e] = v and close under addition against everything
    // already assigned; returns false on conflict. The trail records new
    // assignments for rollback.
    std::function<bool(std::uint32_t, std::uint32_t)> assign =
        [&](std::uint32_t e, std::uint32_t v) -> bool {
        if (img[e] != unset) return img[e] == v;
        img[e] = v;
        assigned.push_back(e);
        std::size_t before = assigned.size() - 1;
        for (std::size_t k = 0; k <= before; ++k) {
            std::uint32_t a = assigned[k];
            if (!assign(ring->addi(a, e), ring->addi(img[a], v))) return false;
            if (!assign(ring->addi(e, a), ring->addi(v, img[a]))) return false;
        }
        return true;
    };

    std::function<void()> dfs = [&]() {
        std::uint32_t next = unset;
        for (std::uint32_t i = 0; i < n; ++i)
            if (img[i] == unset) {
                next = i;
                break;
            }
        if (next == unset) {
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = 0; b < n; ++b)
                    if (img[ring->muli(a, b)] != ring->muli(img[a], img[b]))
                        return;
            results.emplace_back(img.begin(), img.end());
            return;
        }
        for (std::uint32_t v = 0; v < n; ++v) {
            std::size_t mark = assigned.size();
            if (assign(next, v)) dfs();
            while (assigned.size() > mark) {
                img[assigned.back()] = unset;
                assigned.pop_back();
            }
        }
    };

    if (!assign(0, 0) || !assign(onei, onei))
        throw ValidationError("ring breaks endomorphism enumeration");
    dfs();

    std::sort(results.begin(), results.end());
    std::vector<Endo> out;
    out.reserve(results.size());
    for (const auto& images : results) {
        nlohmann::json d = {{"kind", "table"},
                            {"images", std::vector<std::uint32_t>(
                                           images.begin(), images.end())}};
        out.push_back(make_endo(ring, d, cfg));
    }
    return out;
}

// ---- Derivation ----

struct Derivation::Impl {
    RingPtr ring;
    nlohmann::json desc;
    std::function<Elem(const Elem&)> fn;
    std::vector<std::uint16_t> images;
    bool zero_map = false;
};

const RingPtr& Derivation::ring() const { return impl_->ring; }

Elem Derivation::operator()(const Elem& e) const {
    if (!impl_->images.empty()) return Elem(impl_->images[e.idx()]);
    return impl_->fn(e);
}

std::uint32_t Derivation::apply_index(std::uint32_t i) const {
    return impl_->images[i];
}

bool Derivation::is_zero_map() const { return impl_->zero_map; }

const nlohmann::json& Derivation::descriptor() const { return impl_->desc; }

std::string Derivation::label() const { return map_label(impl_->desc); }

Derivation make_derivation(RingPtr ring, const Endo& sigma,
                           const nlohmann::json& spec, const Config& cfg) {
    if (!ring) throw ValidationError("derivation needs a ring");
    if (sigma.ring() != ring)
        throw MismatchError("derivation and sigma rings differ");
    const char* what = "derivation";
    check_map_keys(spec, {"kind", "d", "left", "right"}, what);
    const std::string kind = spec.at("kind").get<std::string>();

    auto impl = std::make_shared<Derivation::Impl>();
    impl->ring = ring;
    impl->desc = spec;

    if (kind == "zero") {
        Elem z = ring->zero();
        impl->fn = [z](const Elem&) { return z; };
        impl->zero_map = true;
    } else if (kind == "inner") {
        if (!spec.contains("d") || !spec.at("d").is_string())
            throw ValidationError("inner derivation needs a 'd' element literal");
        Elem d = ring->parse(spec.at("d").get<std::string>());
        RingPtr R = ring;
        Endo s = sigma;
        impl->fn = [R, s, d](const Elem& r) {
            return R->sub(R->mul(d, r), R->mul(s(r), d));
        };
    } else if (kind == "conj_diff") {
        auto gr = std::dynamic_pointer_cast<const GaussRing>(ring);
        if (!gr) throw ValidationError("conj_diff needs the gauss ring");
        if (sigma.descriptor().at("kind").get<std::string>() != "conj")
            throw ValidationError("conj_diff requires sigma = conj");
        Endo s = sigma;
        RingPtr R = ring;
        impl->fn = [R, s](const Elem& r) { return R->sub(r, s(r)); };
    } else if (kind == "componentwise") {
        auto sr = std::dynamic_pointer_cast<const SumRing>(ring);
        if (!sr) throw ValidationError("componentwise derivation needs a sum ring");
        if (!sigma.components())
            throw ValidationError(
                "componentwise derivation requires a componentwise sigma");
        if (!spec.contains("left") || !spec.contains("right"))
            throw ValidationError("componentwise derivation needs 'left' and 'right'");
        Derivation dl = make_derivation(sr->left(), sigma.components()->first,
                                        spec.at("left"), cfg);
        Derivation dr = make_derivation(sr->right(), sigma.components()->second,
                                        spec.at("right"), cfg);
        impl->fn = [sr, dl, dr](const Elem& e) {
            auto [l, r] = sr->parts(e);
            return sr->compose(dl(l), dr(r));
        };
    } else {
        throw ValidationError("unknown derivation kind '" + kind + "'");
    }

    const auto& f = impl->fn;
    if (!ring->is_zero(f(ring->zero())))
        throw ValidationError("derivation must send 0 to 0");
    if (!ring->is_zero(f(ring->one())))
        throw ValidationError("derivation must send 1 to 0");
    validate_map(*ring, f,
                 [&](const Elem& a, const Elem& b) {
                     return f(ring->mul(a, b)) ==
                            ring->add(ring->mul(sigma(a), f(b)),
                                      ring->mul(f(a), b));
                 },
                 what, cfg);

    if (ring->enumerable()) {
        impl->images.resize(ring->size());
        bool all_zero = true;
        for (std::uint32_t i = 0; i < ring->size(); ++i) {
            impl->images[i] = static_cast<std::uint16_t>(f(Elem(i)).idx());
            all_zero = all_zero && impl->images[i] == 0;
        }
        impl->zero_map = impl->zero_map || all_zero;
    }
    return Derivation(std::move(impl));
}

// ---- QuasiDerivation ----

QuasiDerivation::QuasiDerivation(RingPtr ring, Endo sigma, Derivation delta,
                                 const Config& cfg)
    : ring_(std::move(ring)), sigma_(std::move(sigma)),
      delta_(std::move(delta)), word_cap_(cfg.word_cap) {
    layers_.reserve(max_layers);
}

QdPtr QuasiDerivation::make(RingPtr ring, Endo sigma, Derivation delta,
                            const Config& cfg) {
    if (sigma.ring() != ring || delta.ring() != ring)
        throw MismatchError("quasi-derivation parts live on different rings");
    return QdPtr(new QuasiDerivation(std::move(ring), std::move(sigma),
                                     std::move(delta), cfg));
}

nlohmann::json QuasiDerivation::descriptor() const {
    return {{"sigma", sigma_.descriptor()}, {"delta", delta_.descriptor()}};
}

std::string QuasiDerivation::label() const {
    return "sigma=" + sigma_.label() + ", delta=" + delta_.label();
}

void QuasiDerivation::ensure(std::uint32_t j) const {
    if (!ring_->enumerable()) return;
    if (ready_.load(std::memory_order_acquire) > j) return;
    std::lock_guard<std::mutex> lock(grow_mu_);
    if (j + 1 > max_layers)
        throw CapError("f-map memo capped at " + std::to_string(max_layers) +
                       " layers");
    const std::uint32_t n = ring_->size();
    while (ready_.load(std::memory_order_relaxed) <= j) {
        std::uint32_t jj = ready_.load(std::memory_order_relaxed);
        std::vector<std::vector<std::uint16_t>> row(jj + 1);
        if (jj == 0) {
            row[0].resize(n);
            for (std::uint32_t r = 0; r < n; ++r)
                row[0][r] = static_cast<std::uint16_t>(r);
        } else {
            const auto& prev = layers_[jj - 1];
            for (std::uint32_t i = 0; i <= jj; ++i) {
                row[i].resize(n);
                for (std::uint32_t r = 0; r < n; ++r) {
                    std::uint32_t t1 =
                        i >= 1 ? sigma_.apply_index(prev[i - 1][r]) : 0;
                    std::uint32_t t2 =
                        i <= jj - 1 ? delta_.apply_index(prev[i][r]) : 0;
                    row[i][r] =
                        static_cast<std::uint16_t>(ring_->addi(t1, t2));
                }
            }
        }
        layers_.push_back(std::move(row));
        ready_.store(jj + 1, std::memory_order_release);
    }
}

Elem QuasiDerivation::f(std::uint32_t i, std::uint32_t j,
                        const Elem& r) const {
    if (i > j) throw ValidationError("f_i^j needs 0 <= i <= j");
    if (ring_->enumerable()) {
        ensure(j);
        return Elem(layers_[j][i][r.idx()]);
    }
    return f_recurse(i, j, r);
}

std::uint32_t QuasiDerivation::f_index(std::uint32_t i, std::uint32_t j,
                                       std::uint32_t r) const {
    return layers_[j][i][r];
}

Elem QuasiDerivation::f_recurse(std::uint32_t i, std::uint32_t j,
                                const Elem& r) const {
    std::vector<Elem> prev{r};
    for (std::uint32_t jj = 1; jj <= j; ++jj) {
        std::vector<Elem> row;
        row.reserve(jj + 1);
        for (std::uint32_t ii = 0; ii <= jj; ++ii) {
            Elem t1 = ii >= 1 ? sigma_(prev[ii - 1]) : ring_->zero();
            Elem t2 = ii <= jj - 1 ? delta_(prev[ii]) : ring_->zero();
            row.push_back(ring_->add(t1, t2));
        }
        prev = std::move(row);
    }
    return prev[i];
}

Elem QuasiDerivation::f_oracle(std::uint32_t i, std::uint32_t j,
                               const Elem& r) const {
    if (i > j) throw ValidationError("f_i^j needs 0 <= i <= j");
    if (static_cast<int>(j) > word_cap_)
        throw CapError("word expansion capped at length " +
                       std::to_string(word_cap_));
    Elem total = ring_->zero();
    for (std::uint64_t mask = 0; mask < (1ull << j); ++mask) {
        if (__builtin_popcountll(mask) != static_cast<int>(i)) continue;
        Elem cur = r;
        // Bit b is the b-th letter from the right; the rightmost letter
        // acts first.
        for (std::uint32_t b = 0; b < j; ++b)
            cur = (mask >> b) & 1 ? sigma_(cur) : delta_(cur);
        total = ring_->add(total, cur);
    }
    return total;
}

} // namespace orelab
