#include "orelab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>

#include "orelab/scan.hpp"

namespace orelab {

// ---- probe streams ----

Rat rat_probe(std::uint64_t k) {
    static std::mutex mu;
    static std::vector<Rat> cache{Rat(0)};
    static std::int64_t height = 0;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= k) {
        ++height;
        for (std::int64_t den = 1; den <= height; ++den) {
            std::int64_t lo = (den < height) ? height : 1;
            std::int64_t hi = (den < height) ? height : height;
            for (std::int64_t num = lo; num <= hi; ++num) {
                if (std::gcd(num, den) != 1) continue;
                cache.emplace_back(num, den);
                cache.emplace_back(-num, den);
            }
        }
    }
    return cache[k];
}

std::int64_t int_probe(std::uint64_t k) {
    if (k == 0) return 0;
    if (k % 2 == 1) return static_cast<std::int64_t>((k + 1) / 2);
    return -static_cast<std::int64_t>(k / 2);
}

std::pair<std::uint64_t, std::uint64_t> diag_pair(std::uint64_t k) {
    std::uint64_t d = 0, base = 0;
    while (base + d + 1 <= k) {
        ++d;
        base += d;
    }
    std::uint64_t r = k - base;
    return {r, d - r};
}

// ---- text helpers ----

std::string trim_copy(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (depth < 0) throw ValidationError("unbalanced brackets in: " + text);
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (depth != 0) throw ValidationError("unbalanced brackets in: " + text);
    out.push_back(cur);
    return out;
}

namespace {

std::int64_t parse_int(const std::string& text) {
    std::string t = trim_copy(text);
    if (t.empty()) throw ValidationError("empty integer literal");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw ValidationError("bad integer literal: " + text);
    }
    if (pos != t.size()) throw ValidationError("bad integer literal: " + text);
    return v;
}

std::string strip_outer(const std::string& text, char open, char close,
                        const char* what) {
    std::string t = trim_copy(text);
    if (t.size() < 2 || t.front() != open || t.back() != close)
        throw ValidationError(std::string("expected ") + what + ": " + text);
    return t.substr(1, t.size() - 2);
}

std::string label_of(const nlohmann::json& d) {
    const std::string kind = d.at("kind").get<std::string>();
    if (kind == "zn") return "zn(" + std::to_string(d.at("n").get<std::uint32_t>()) + ")";
    if (kind == "tables")
        return "tables(" + std::to_string(d.at("add").size()) + ")";
    if (kind == "tri2") return "tri2(" + label_of(d.at("base")) + ")";
    if (kind == "ut2") return "ut2(" + label_of(d.at("base")) + ")";
    if (kind == "sum")
        return "sum(" + label_of(d.at("left")) + ", " + label_of(d.at("right")) + ")";
    if (kind == "poly")
        return "poly(" + label_of(d.at("base")) + ", " +
               d.at("var").get<std::string>() + ")";
    return kind;
}

} // namespace

std::string Ring::label() const { return label_of(descriptor()); }

// ---- shared validation ----

void Ring::finalize_enumerable(std::uint32_t n, const Config& cfg) {
    if (n < 2)
        throw ValidationError("ring must have 1 != 0, got " +
                              std::to_string(n) + " element(s)");
    if (n > cfg.size_cap || n > 0xffffu)
        throw CapError("enumerable ring size " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cfg.size_cap));
    size_ = n;
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    add_.resize(nn);
    mul_.resize(nn);
    neg_.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            std::uint32_t s = raw_add(a, b);
            std::uint32_t p = raw_mul(a, b);
            if (s >= n || p >= n)
                throw ValidationError("op table entry out of range");
            add_[static_cast<std::size_t>(a) * n + b] =
                static_cast<std::uint16_t>(s);
            mul_[static_cast<std::size_t>(a) * n + b] =
                static_cast<std::uint16_t>(p);
        }
        std::uint32_t m = raw_neg(a);
        if (m >= n) throw ValidationError("op table entry out of range");
        neg_[a] = static_cast<std::uint16_t>(m);
    }

    auto fail = [&](const std::string& what) {
        throw ValidationError(label_of(descriptor()) + ": " + what);
    };

    const std::uint64_t N = n;
    // Zero must sit at index 0; every constructor arranges this and the
    // tables kind is required to.
    if (scan::find_first(N, [&](std::uint64_t i) {
            auto u = static_cast<std::uint32_t>(i);
            return addi(0, u) != u || addi(u, 0) != u;
        }) != scan::npos)
        fail("additive identity must sit at index 0");
    if (scan::find_first(N, [&](std::uint64_t i) {
            auto u = static_cast<std::uint32_t>(i);
            return addi(u, negi(u)) != 0;
        }) != scan::npos)
        fail("additive inverse table is wrong");
    if (scan::find_first(N * N, [&](std::uint64_t i) {
            auto a = static_cast<std::uint32_t>(i / n);
            auto b = static_cast<std::uint32_t>(i % n);
            return addi(a, b) != addi(b, a);
        }) != scan::npos)
        fail("addition is not commutative");

    std::uint32_t one = raw_one();
    if (one == 0 || one >= n) fail("unity missing or equal to zero");
    if (scan::find_first(N, [&](std::uint64_t i) {
            auto u = static_cast<std::uint32_t>(i);
            return muli(one, u) != u || muli(u, one) != u;
        }) != scan::npos)
        fail("claimed unity does not act as identity");
    zero_ = Elem(std::uint32_t{0});
    one_ = Elem(one);

    auto triple_bad = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (addi(addi(a, b), c) != addi(a, addi(b, c))) return 1;
        if (muli(muli(a, b), c) != muli(a, muli(b, c))) return 2;
        if (muli(a, addi(b, c)) != addi(muli(a, b), muli(a, c))) return 3;
        if (muli(addi(a, b), c) != addi(muli(a, c), muli(b, c))) return 4;
        return 0;
    };
    static const char* triple_msg[] = {
        "", "addition is not associative", "multiplication is not associative",
        "left distributivity fails", "right distributivity fails"};

    if (N * N * N <= cfg.triple_budget) {
        std::uint64_t hit = scan::find_first(N * N * N, [&](std::uint64_t i) {
            auto a = static_cast<std::uint32_t>(i / (N * N));
            auto b = static_cast<std::uint32_t>((i / N) % N);
            auto c = static_cast<std::uint32_t>(i % N);
            return triple_bad(a, b, c) != 0;
        });
        if (hit != scan::npos) {
            auto a = static_cast<std::uint32_t>(hit / (N * N));
            auto b = static_cast<std::uint32_t>((hit / N) % N);
            auto c = static_cast<std::uint32_t>(hit % N);
            fail(std::string(triple_msg[triple_bad(a, b, c)]) + " at indices (" +
                 std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")");
        }
        validation_mode_ = "exhaustive";
    } else {
        Rng rng(cfg.seed);
        for (std::uint64_t s = 0; s < cfg.samples; ++s) {
            auto a = static_cast<std::uint32_t>(rng.below(N));
            auto b = static_cast<std::uint32_t>(rng.below(N));
            auto c = static_cast<std::uint32_t>(rng.below(N));
            int bad = triple_bad(a, b, c);
            if (bad)
                fail(std::string(triple_msg[bad]) + " at indices (" +
                     std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + ")");
        }
        validation_mode_ = "pairs+sampled-triples";
    }

    commutative_ = scan::find_first(N * N, [&](std::uint64_t i) {
                       auto a = static_cast<std::uint32_t>(i / n);
                       auto b = static_cast<std::uint32_t>(i % n);
                       return muli(a, b) != muli(b, a);
                   }) == scan::npos;
}

void Ring::finalize_sampleable(Elem zero, Elem one, bool commutative,
                               const Config& cfg) {
    size_ = 0;
    zero_ = std::move(zero);
    one_ = std::move(one);
    commutative_ = commutative;
    validation_mode_ = "sampled";

    auto elems = element_stream(*this, 24, cfg);
    auto fail = [&](const std::string& what) {
        throw ValidationError(label_of(descriptor()) + ": " + what +
                              " (sampled validation)");
    };
    for (const Elem& a : elems) {
        if (add(a, zero_) != a || add(zero_, a) != a) fail("zero is wrong");
        if (mul(a, one_) != a || mul(one_, a) != a) fail("unity is wrong");
        if (!is_zero(add(a, neg(a)))) fail("negation is wrong");
        if (canon(a) != a) fail("stream element is not canonical");
    }
    if (one_ == zero_) fail("1 == 0");

    Rng rng(cfg.seed + 0x5eedull);
    const std::uint64_t triples = std::min<std::uint64_t>(cfg.samples, 500);
    for (std::uint64_t s = 0; s < triples; ++s) {
        const Elem& a = elems[rng.below(elems.size())];
        const Elem& b = elems[rng.below(elems.size())];
        const Elem& c = elems[rng.below(elems.size())];
        if (add(a, b) != add(b, a)) fail("addition is not commutative");
        if (add(add(a, b), c) != add(a, add(b, c)))
            fail("addition is not associative");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            fail("multiplication is not associative");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            fail("left distributivity fails");
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
            fail("right distributivity fails");
        if (commutative_ && mul(a, b) != mul(b, a))
            fail("claimed commutative but a sample disagrees");
    }
}

std::optional<std::pair<bool, bool>>
Ring::idempotent_sides(const Elem& e) const {
    if (enumerable()) {
        std::uint32_t ei = e.idx();
        bool sl = true, sr = true;
        for (std::uint32_t r = 0; r < size_ && (sl || sr); ++r) {
            std::uint32_t ere = muli(muli(ei, r), ei);
            if (ere != muli(r, ei)) sl = false;
            if (ere != muli(ei, r)) sr = false;
        }
        return std::make_pair(sl, sr);
    }
    if (e == zero_ || e == one_ || commutative_)
        return std::make_pair(true, true);
    return std::nullopt;
}

Elem Ring::parse(const std::string& text) const {
    std::string t = trim_copy(text);
    if (t.empty()) throw ValidationError("empty element literal");
    if (t[0] == '#') {
        std::int64_t i = parse_int(t.substr(1));
        if (!enumerable())
            throw ValidationError("'#index' literals need an enumerable ring");
        if (i < 0 || i >= static_cast<std::int64_t>(size()))
            throw ValidationError("element index " + std::to_string(i) +
                                  " out of range for " + label());
        return Elem(static_cast<std::uint32_t>(i));
    }
    return canon(parse_impl(t));
}

// ---- zn ----

std::shared_ptr<const ZnRing> ZnRing::make(std::uint32_t n, const Config& cfg) {
    auto r = std::shared_ptr<ZnRing>(new ZnRing(n));
    if (n == 0) throw ValidationError("zn(0) is not a ring");
    r->finalize_enumerable(n, cfg);
    return r;
}

nlohmann::json ZnRing::descriptor() const {
    return {{"kind", "zn"}, {"n", n_}};
}

std::string ZnRing::format_impl(const Elem& e) const {
    return std::to_string(e.idx());
}

Elem ZnRing::parse_impl(const std::string& text) const {
    std::int64_t v = parse_int(text) % static_cast<std::int64_t>(n_);
    if (v < 0) v += n_;
    return Elem(static_cast<std::uint32_t>(v));
}

// ---- tables ----

std::shared_ptr<const TableRing>
TableRing::make(std::vector<std::vector<std::uint32_t>> add,
                std::vector<std::vector<std::uint32_t>> mul,
                const Config& cfg) {
    const std::size_t n = add.size();
    if (n == 0 || mul.size() != n)
        throw ValidationError("tables ring: add and mul must be square and "
                              "the same size");
    for (const auto& tab : {std::cref(add), std::cref(mul)})
        for (const auto& row : tab.get()) {
            if (row.size() != n)
                throw ValidationError("tables ring: ragged table row");
            for (std::uint32_t v : row)
                if (v >= n)
                    throw ValidationError("tables ring: entry out of range");
        }
    auto r = std::shared_ptr<TableRing>(
        new TableRing(std::move(add), std::move(mul)));
    r->finalize_enumerable(static_cast<std::uint32_t>(n), cfg);
    return r;
}

std::uint32_t TableRing::raw_neg(std::uint32_t a) const {
    for (std::uint32_t b = 0; b < tadd_.size(); ++b)
        if (tadd_[a][b] == 0) return b;
    throw ValidationError("tables ring: element " + std::to_string(a) +
                          " has no additive inverse");
}

std::uint32_t TableRing::raw_one() const {
    const std::uint32_t n = static_cast<std::uint32_t>(tmul_.size());
    for (std::uint32_t o = 0; o < n; ++o) {
        bool ok = true;
        for (std::uint32_t i = 0; i < n && ok; ++i)
            ok = tmul_[o][i] == i && tmul_[i][o] == i;
        if (ok) return o;
    }
    throw ValidationError("tables ring: no unity found");
}

nlohmann::json TableRing::descriptor() const {
    return {{"kind", "tables"}, {"add", tadd_}, {"mul", tmul_}};
}

std::string TableRing::format_impl(const Elem& e) const {
    return "#" + std::to_string(e.idx());
}

Elem TableRing::parse_impl(const std::string& text) const {
    std::int64_t v = parse_int(text);
    if (v < 0 || v >= static_cast<std::int64_t>(size()))
        throw ValidationError("element index out of range: " + text);
    return Elem(static_cast<std::uint32_t>(v));
}

// ---- tri2 ----

std::shared_ptr<const TriRing> TriRing::make(RingPtr base, const Config& cfg) {
    if (!base) throw ValidationError("tri2: missing base ring");
    if (!base->enumerable())
        throw ValidationError("tri2 needs an enumerable base ring");
    std::uint32_t nb = base->size();
    auto r = std::shared_ptr<TriRing>(new TriRing(std::move(base), nb));
    r->finalize_enumerable(nb * nb, cfg);
    return r;
}

std::uint32_t TriRing::raw_add(std::uint32_t x, std::uint32_t y) const {
    auto [xa, xb] = parts(x);
    auto [ya, yb] = parts(y);
    return compose(base_->addi(xa, ya), base_->addi(xb, yb));
}

std::uint32_t TriRing::raw_mul(std::uint32_t x, std::uint32_t y) const {
    auto [xa, xb] = parts(x);
    auto [ya, yb] = parts(y);
    return compose(base_->muli(xa, ya),
                   base_->addi(base_->muli(xa, yb), base_->muli(xb, ya)));
}

std::uint32_t TriRing::raw_neg(std::uint32_t x) const {
    auto [a, b] = parts(x);
    return compose(base_->negi(a), base_->negi(b));
}

std::uint32_t TriRing::raw_one() const {
    return compose(base_->index(base_->one()), 0);
}

nlohmann::json TriRing::descriptor() const {
    return {{"kind", "tri2"}, {"base", base_->descriptor()}};
}

std::string TriRing::format_impl(const Elem& e) const {
    auto [a, b] = parts(e.idx());
    return "(" + base_->format(Elem(a)) + ", " + base_->format(Elem(b)) + ")";
}

Elem TriRing::parse_impl(const std::string& text) const {
    auto inner = strip_outer(text, '(', ')', "'(a, b)'");
    auto fields = split_top_level(inner, ',');
    if (fields.size() != 2)
        throw ValidationError("expected '(a, b)': " + text);
    return Elem(compose(base_->index(base_->parse(fields[0])),
                        base_->index(base_->parse(fields[1]))));
}

// ---- ut2 ----

std::shared_ptr<const Ut2Ring> Ut2Ring::make(RingPtr base, const Config& cfg) {
    if (!base) throw ValidationError("ut2: missing base ring");
    if (!base->enumerable())
        throw ValidationError("ut2 needs an enumerable base ring");
    std::uint32_t nb = base->size();
    auto r = std::shared_ptr<Ut2Ring>(new Ut2Ring(std::move(base), nb));
    r->finalize_enumerable(nb * nb * nb, cfg);
    return r;
}

std::uint32_t Ut2Ring::raw_add(std::uint32_t x, std::uint32_t y) const {
    Parts p = parts(x), q = parts(y);
    return compose(base_->addi(p.a, q.a), base_->addi(p.b, q.b),
                   base_->addi(p.d, q.d));
}

std::uint32_t Ut2Ring::raw_mul(std::uint32_t x, std::uint32_t y) const {
    Parts p = parts(x), q = parts(y);
    return compose(base_->muli(p.a, q.a),
                   base_->addi(base_->muli(p.a, q.b), base_->muli(p.b, q.d)),
                   base_->muli(p.d, q.d));
}

std::uint32_t Ut2Ring::raw_neg(std::uint32_t x) const {
    Parts p = parts(x);
    return compose(base_->negi(p.a), base_->negi(p.b), base_->negi(p.d));
}

std::uint32_t Ut2Ring::raw_one() const {
    std::uint32_t o = base_->index(base_->one());
    return compose(o, 0, o);
}

nlohmann::json Ut2Ring::descriptor() const {
    return {{"kind", "ut2"}, {"base", base_->descriptor()}};
}

std::string Ut2Ring::format_impl(const Elem& e) const {
    Parts p = parts(e.idx());
    return "(" + base_->format(Elem(p.a)) + ", " + base_->format(Elem(p.b)) +
           ", " + base_->format(Elem(p.d)) + ")";
}

Elem Ut2Ring::parse_impl(const std::string& text) const {
    auto inner = strip_outer(text, '(', ')', "'(a, b, d)'");
    auto fields = split_top_level(inner, ',');
    if (fields.size() != 3)
        throw ValidationError("expected '(a, b, d)': " + text);
    return Elem(compose(base_->index(base_->parse(fields[0])),
                        base_->index(base_->parse(fields[1])),
                        base_->index(base_->parse(fields[2]))));
}

// ---- sum ----

std::shared_ptr<const SumRing> SumRing::make(RingPtr left, RingPtr right,
                                             const Config& cfg) {
    if (!left || !right) throw ValidationError("sum: missing component ring");
    auto r = std::shared_ptr<SumRing>(
        new SumRing(std::move(left), std::move(right)));
    if (r->left_->enumerable() && r->right_->enumerable()) {
        r->finalize_enumerable(r->left_->size() * r->right_->size(), cfg);
    } else {
        bool comm = r->left_->commutative() && r->right_->commutative();
        r->finalize_sampleable(
            Elem::pair(r->left_->zero(), r->right_->zero()),
            Elem::pair(r->left_->one(), r->right_->one()), comm, cfg);
    }
    return r;
}

std::pair<Elem, Elem> SumRing::parts(const Elem& e) const {
    if (enumerable()) {
        std::uint32_t nr = right_->size();
        return {Elem(e.idx() / nr), Elem(e.idx() % nr)};
    }
    return {e.sum().left, e.sum().right};
}

Elem SumRing::compose(const Elem& l, const Elem& r) const {
    if (enumerable()) return Elem(l.idx() * right_->size() + r.idx());
    return Elem::pair(l, r);
}

Elem SumRing::samp_add(const Elem& x, const Elem& y) const {
    auto [xl, xr] = parts(x);
    auto [yl, yr] = parts(y);
    return compose(left_->add(xl, yl), right_->add(xr, yr));
}

Elem SumRing::samp_mul(const Elem& x, const Elem& y) const {
    auto [xl, xr] = parts(x);
    auto [yl, yr] = parts(y);
    return compose(left_->mul(xl, yl), right_->mul(xr, yr));
}

Elem SumRing::samp_neg(const Elem& x) const {
    auto [l, r] = parts(x);
    return compose(left_->neg(l), right_->neg(r));
}

std::uint32_t SumRing::raw_add(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t nr = right_->size();
    return left_->addi(x / nr, y / nr) * nr + right_->addi(x % nr, y % nr);
}

std::uint32_t SumRing::raw_mul(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t nr = right_->size();
    return left_->muli(x / nr, y / nr) * nr + right_->muli(x % nr, y % nr);
}

std::uint32_t SumRing::raw_neg(std::uint32_t x) const {
    std::uint32_t nr = right_->size();
    return left_->negi(x / nr) * nr + right_->negi(x % nr);
}

std::uint32_t SumRing::raw_one() const {
    return left_->index(left_->one()) * right_->size() +
           right_->index(right_->one());
}

Elem SumRing::probe(std::uint64_t k) const {
    if (enumerable()) return Ring::probe(k);
    auto [i, j] = diag_pair(k);
    return compose(left_->probe(i), right_->probe(j));
}

Elem SumRing::sample(Rng& rng, std::int64_t height) const {
    if (enumerable()) return Ring::sample(rng, height);
    Elem l = left_->sample(rng, height);
    Elem r = right_->sample(rng, height);
    return compose(l, r);
}

Elem SumRing::canon(const Elem& e) const {
    if (enumerable()) return e;
    auto [l, r] = parts(e);
    return compose(left_->canon(l), right_->canon(r));
}

std::optional<std::vector<Elem>> SumRing::side_idempotents(const RingPtr& R) {
    if (R->enumerable()) {
        std::vector<Elem> out;
        for (std::uint32_t i = 0; i < R->size(); ++i)
            if (R->muli(i, i) == i) out.emplace_back(i);
        return out;
    }
    return R->known_idempotents();
}

std::optional<std::vector<Elem>> SumRing::known_idempotents() const {
    if (enumerable()) return std::nullopt;
    auto ls = side_idempotents(left_);
    auto rs = side_idempotents(right_);
    if (!ls || !rs) return std::nullopt;
    std::vector<Elem> out;
    for (const Elem& l : *ls)
        for (const Elem& r : *rs) out.push_back(compose(l, r));
    return out;
}

std::optional<std::pair<bool, bool>>
SumRing::idempotent_sides(const Elem& e) const {
    if (enumerable()) return Ring::idempotent_sides(e);
    auto [l, r] = parts(e);
    auto side = [](const RingPtr& R,
                   const Elem& c) -> std::optional<std::pair<bool, bool>> {
        if (R->enumerable()) {
            std::uint32_t ci = c.idx();
            bool sl = true, sr = true;
            for (std::uint32_t x = 0; x < R->size() && (sl || sr); ++x) {
                std::uint32_t cxc = R->muli(R->muli(ci, x), ci);
                if (cxc != R->muli(x, ci)) sl = false;
                if (cxc != R->muli(ci, x)) sr = false;
            }
            return std::make_pair(sl, sr);
        }
        return R->idempotent_sides(c);
    };
    auto a = side(left_, l);
    auto b = side(right_, r);
    if (!a || !b) return std::nullopt;
    return std::make_pair(a->first && b->first, a->second && b->second);
}

nlohmann::json SumRing::descriptor() const {
    return {{"kind", "sum"},
            {"left", left_->descriptor()},
            {"right", right_->descriptor()}};
}

std::string SumRing::format_impl(const Elem& e) const {
    auto [l, r] = parts(e);
    return "(" + left_->format(l) + ", " + right_->format(r) + ")";
}

Elem SumRing::parse_impl(const std::string& text) const {
    auto inner = strip_outer(text, '(', ')', "'(left, right)'");
    auto fields = split_top_level(inner, ',');
    if (fields.size() != 2)
        throw ValidationError("expected '(left, right)': " + text);
    return compose(left_->parse(fields[0]), right_->parse(fields[1]));
}

// ---- poly ----

std::shared_ptr<const PolyRing> PolyRing::make(RingPtr base, std::string var,
                                               const Config& cfg) {
    if (!base) throw ValidationError("poly: missing base ring");
    if (!base->enumerable())
        throw ValidationError("poly needs an enumerable base ring");
    if (var.empty() ||
        !std::all_of(var.begin(), var.end(), [](unsigned char c) {
            return std::isalpha(c);
        }))
        throw ValidationError("poly variable must be a nonempty alphabetic "
                              "name, got '" + var + "'");
    auto r = std::shared_ptr<PolyRing>(new PolyRing(std::move(base), std::move(var)));
    std::uint32_t nb = r->base_->size();
    bool domain = true;
    for (std::uint32_t a = 1; a < nb && domain; ++a)
        for (std::uint32_t b = 1; b < nb && domain; ++b)
            if (r->base_->muli(a, b) == 0) domain = false;
    r->base_domain_ = domain;
    r->finalize_sampleable(Elem(PolyVal{}),
                           Elem(PolyVal{{r->base_->index(r->base_->one())}}),
                           r->base_->commutative(), cfg);
    return r;
}

Elem PolyRing::from_coeffs(std::vector<std::uint32_t> coeffs) const {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return Elem(PolyVal{std::move(coeffs)});
}

Elem PolyRing::constant(std::uint32_t base_index) const {
    return from_coeffs({base_index});
}

std::uint32_t PolyRing::coeff(const Elem& e, std::size_t k) const {
    const auto& c = e.poly().coeffs;
    return k < c.size() ? c[k] : 0;
}

int PolyRing::degree(const Elem& e) const {
    return static_cast<int>(e.poly().coeffs.size()) - 1;
}

Elem PolyRing::samp_add(const Elem& x, const Elem& y) const {
    const auto& a = x.poly().coeffs;
    const auto& b = y.poly().coeffs;
    std::vector<std::uint32_t> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = base_->addi(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return from_coeffs(std::move(out));
}

Elem PolyRing::samp_mul(const Elem& x, const Elem& y) const {
    const auto& a = x.poly().coeffs;
    const auto& b = y.poly().coeffs;
    if (a.empty() || b.empty()) return Elem(PolyVal{});
    std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = base_->addi(out[i + j], base_->muli(a[i], b[j]));
    return from_coeffs(std::move(out));
}

Elem PolyRing::samp_neg(const Elem& x) const {
    std::vector<std::uint32_t> out = x.poly().coeffs;
    for (auto& c : out) c = base_->negi(c);
    return from_coeffs(std::move(out));
}

Elem PolyRing::probe(std::uint64_t k) const {
    std::vector<std::uint32_t> coeffs;
    std::uint32_t nb = base_->size();
    while (k) {
        coeffs.push_back(static_cast<std::uint32_t>(k % nb));
        k /= nb;
    }
    return from_coeffs(std::move(coeffs));
}

Elem PolyRing::sample(Rng& rng, std::int64_t height) const {
    std::size_t deg = static_cast<std::size_t>(
        rng.below(static_cast<std::uint64_t>(height) + 1));
    std::vector<std::uint32_t> coeffs(deg + 1);
    for (auto& c : coeffs)
        c = static_cast<std::uint32_t>(rng.below(base_->size()));
    return from_coeffs(std::move(coeffs));
}

Elem PolyRing::canon(const Elem& e) const { return from_coeffs(e.poly().coeffs); }

std::optional<std::vector<Elem>> PolyRing::known_idempotents() const {
    // Over a domain e(e - 1) = 0 forces e in {0, 1}; otherwise unknown.
    if (!base_domain_) return std::nullopt;
    return std::vector<Elem>{zero(), one()};
}

nlohmann::json PolyRing::descriptor() const {
    return {{"kind", "poly"}, {"base", base_->descriptor()}, {"var", var_}};
}

std::string PolyRing::format_impl(const Elem& e) const {
    const auto& c = e.poly().coeffs;
    if (c.empty()) return base_->format(base_->zero());
    std::string out;
    const std::uint32_t onei = base_->index(base_->one());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        std::string term;
        if (k == 0) {
            term = base_->format(Elem(c[k]));
        } else {
            std::string pow = var_ + (k == 1 ? "" : "^" + std::to_string(k));
            term = (c[k] == onei) ? pow : base_->format(Elem(c[k])) + "*" + pow;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? base_->format(base_->zero()) : out;
}

Elem PolyRing::parse_impl(const std::string& text) const {
    std::string t = trim_copy(text);
    if (t.front() == '[') {
        auto inner = strip_outer(t, '[', ']', "'[c0, c1, ...]'");
        std::vector<std::uint32_t> coeffs;
        if (!trim_copy(inner).empty())
            for (const auto& f : split_top_level(inner, ','))
                coeffs.push_back(base_->index(base_->parse(f)));
        return from_coeffs(std::move(coeffs));
    }
    std::vector<std::uint32_t> coeffs;
    auto put = [&](std::size_t k, std::uint32_t ci) {
        if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
        coeffs[k] = base_->addi(coeffs[k], ci);
    };
    for (const auto& raw : split_top_level(t, '+')) {
        std::string term = trim_copy(raw);
        if (term.empty()) throw ValidationError("empty term in: " + text);
        // Find the variable token at top level.
        std::size_t pos = std::string::npos;
        int depth = 0;
        for (std::size_t i = 0; i + var_.size() <= term.size(); ++i) {
            char ch = term[i];
            if (ch == '(' || ch == '[' || ch == '{') ++depth;
            if (ch == ')' || ch == ']' || ch == '}') --depth;
            if (depth == 0 && term.compare(i, var_.size(), var_) == 0) {
                pos = i;
                break;
            }
        }
        if (pos == std::string::npos) {
            put(0, base_->index(base_->parse(term)));
            continue;
        }
        std::string prefix = trim_copy(term.substr(0, pos));
        if (!prefix.empty() && prefix.back() == '*')
            prefix = trim_copy(prefix.substr(0, prefix.size() - 1));
        std::string suffix = trim_copy(term.substr(pos + var_.size()));
        std::size_t k = 1;
        if (!suffix.empty()) {
            if (suffix[0] != '^')
                throw ValidationError("bad polynomial term: " + term);
            std::int64_t kk = parse_int(suffix.substr(1));
            if (kk < 0) throw ValidationError("negative exponent: " + term);
            k = static_cast<std::size_t>(kk);
        }
        std::uint32_t ci = prefix.empty() ? base_->index(base_->one())
                                          : base_->index(base_->parse(prefix));
        put(k, ci);
    }
    return from_coeffs(std::move(coeffs));
}

// ---- gauss ----

std::shared_ptr<const GaussRing> GaussRing::make(const Config& cfg) {
    auto r = std::shared_ptr<GaussRing>(new GaussRing());
    r->finalize_sampleable(Elem(GaussVal{Rat(0), Rat(0)}),
                           Elem(GaussVal{Rat(1), Rat(0)}), true, cfg);
    return r;
}

Elem GaussRing::samp_add(const Elem& x, const Elem& y) const {
    const auto& a = x.gauss();
    const auto& b = y.gauss();
    return Elem(GaussVal{a.re + b.re, a.im + b.im});
}

Elem GaussRing::samp_mul(const Elem& x, const Elem& y) const {
    const auto& a = x.gauss();
    const auto& b = y.gauss();
    return Elem(GaussVal{a.re * b.re - a.im * b.im,
                         a.re * b.im + a.im * b.re});
}

Elem GaussRing::samp_neg(const Elem& x) const {
    const auto& a = x.gauss();
    return Elem(GaussVal{-a.re, -a.im});
}

Elem GaussRing::probe(std::uint64_t k) const {
    auto [i, j] = diag_pair(k);
    return Elem(GaussVal{rat_probe(i), rat_probe(j)});
}

Elem GaussRing::sample(Rng& rng, std::int64_t height) const {
    auto part = [&] {
        return Rat(rng.range(-height, height), rng.range(1, height));
    };
    Rat re = part(), im = part();
    return Elem(GaussVal{std::move(re), std::move(im)});
}

std::optional<std::vector<Elem>> GaussRing::known_idempotents() const {
    // A field: e(e - 1) = 0 forces e in {0, 1}.
    return std::vector<Elem>{zero(), one()};
}

nlohmann::json GaussRing::descriptor() const { return {{"kind", "gauss"}}; }

std::string GaussRing::format_impl(const Elem& e) const {
    const auto& v = e.gauss();
    if (v.im.is_zero()) return v.re.str();
    std::string im_mag = (v.im == Rat(1) || v.im == Rat(-1))
                             ? "i"
                             : (v.im.num() < 0 ? (-v.im).str() : v.im.str()) + "i";
    if (v.re.is_zero()) return (v.im.num() < 0 ? "-" : "") + im_mag;
    return v.re.str() + (v.im.num() < 0 ? "-" : "+") + im_mag;
}

Elem GaussRing::parse_impl(const std::string& text) const {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ValidationError("empty gauss literal");
    if (t.back() != 'i') return Elem(GaussVal{Rat::parse(t), Rat(0)});
    std::string body = t.substr(0, t.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if (body[p] == '+' || body[p] == '-') {
            split = p;
            break;
        }
    }
    auto parse_im = [&](const std::string& s) -> Rat {
        if (s.empty() || s == "+") return Rat(1);
        if (s == "-") return Rat(-1);
        return Rat::parse(s);
    };
    if (split == std::string::npos)
        return Elem(GaussVal{Rat(0), parse_im(body)});
    return Elem(GaussVal{Rat::parse(body.substr(0, split)),
                         parse_im(body.substr(split))});
}

// ---- int_rat_tri ----

std::shared_ptr<const IntRatTriRing> IntRatTriRing::make(const Config& cfg) {
    auto r = std::shared_ptr<IntRatTriRing>(new IntRatTriRing());
    r->finalize_sampleable(Elem(IntRatVal{0, Rat(0)}),
                           Elem(IntRatVal{1, Rat(0)}), true, cfg);
    return r;
}

namespace {
std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > std::numeric_limits<std::int64_t>::max() ||
        p < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("integer component exceeds 64-bit range");
    return static_cast<std::int64_t>(p);
}
} // namespace

Elem IntRatTriRing::samp_add(const Elem& x, const Elem& y) const {
    const auto& a = x.intrat();
    const auto& b = y.intrat();
    return Elem(IntRatVal{a.a + b.a, a.t + b.t});
}

Elem IntRatTriRing::samp_mul(const Elem& x, const Elem& y) const {
    const auto& a = x.intrat();
    const auto& b = y.intrat();
    return Elem(IntRatVal{checked_mul_i64(a.a, b.a),
                          Rat(a.a) * b.t + a.t * Rat(b.a)});
}

Elem IntRatTriRing::samp_neg(const Elem& x) const {
    const auto& a = x.intrat();
    return Elem(IntRatVal{-a.a, -a.t});
}

Elem IntRatTriRing::probe(std::uint64_t k) const {
    auto [i, j] = diag_pair(k);
    return Elem(IntRatVal{int_probe(i), rat_probe(j)});
}

Elem IntRatTriRing::sample(Rng& rng, std::int64_t height) const {
    std::int64_t a = rng.range(-height, height);
    Rat t(rng.range(-height, height), rng.range(1, height));
    return Elem(IntRatVal{a, std::move(t)});
}

std::optional<std::vector<Elem>> IntRatTriRing::known_idempotents() const {
    // (a,t)^2 = (a^2, 2at) = (a,t) forces a in {0,1} and then t = 0.
    return std::vector<Elem>{zero(), one()};
}

nlohmann::json IntRatTriRing::descriptor() const {
    return {{"kind", "int_rat_tri"}};
}

std::string IntRatTriRing::format_impl(const Elem& e) const {
    const auto& v = e.intrat();
    return "(" + std::to_string(v.a) + ", " + v.t.str() + ")";
}

Elem IntRatTriRing::parse_impl(const std::string& text) const {
    auto inner = strip_outer(text, '(', ')', "'(a, t)'");
    auto fields = split_top_level(inner, ',');
    if (fields.size() != 2)
        throw ValidationError("expected '(a, t)': " + text);
    return Elem(IntRatVal{parse_int(fields[0]),
                          Rat::parse(trim_copy(fields[1]))});
}

// ---- descriptor -> ring ----

namespace {

void check_keys(const nlohmann::json& spec,
                std::initializer_list<const char*> allowed) {
    for (auto it = spec.begin(); it != spec.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok)
            throw ValidationError("unknown key '" + it.key() +
                                  "' in ring spec");
    }
}

std::vector<std::vector<std::uint32_t>> read_table(const nlohmann::json& j,
                                                   const char* name) {
    if (!j.is_array())
        throw ValidationError(std::string("ring spec '") + name +
                              "' must be an array of arrays");
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& row : j) {
        if (!row.is_array())
            throw ValidationError(std::string("ring spec '") + name +
                                  "' must be an array of arrays");
        std::vector<std::uint32_t> r;
        for (const auto& v : row) {
            if (!v.is_number_unsigned())
                throw ValidationError(std::string("ring spec '") + name +
                                      "' entries must be unsigned integers");
            r.push_back(v.get<std::uint32_t>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

RingPtr build_ring(const nlohmann::json& spec, const Config& cfg) {
    if (!spec.is_object() || !spec.contains("kind") ||
        !spec.at("kind").is_string())
        throw ValidationError("ring spec must be an object with a 'kind'");
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "zn") {
        check_keys(spec, {"kind", "n"});
        if (!spec.contains("n") || !spec.at("n").is_number_unsigned())
            throw ValidationError("zn spec needs an unsigned 'n'");
        return ZnRing::make(spec.at("n").get<std::uint32_t>(), cfg);
    }
    if (kind == "tables") {
        check_keys(spec, {"kind", "add", "mul"});
        if (!spec.contains("add") || !spec.contains("mul"))
            throw ValidationError("tables spec needs 'add' and 'mul'");
        return TableRing::make(read_table(spec.at("add"), "add"),
                               read_table(spec.at("mul"), "mul"), cfg);
    }
    if (kind == "tri2") {
        check_keys(spec, {"kind", "base"});
        if (!spec.contains("base"))
            throw ValidationError("tri2 spec needs a 'base'");
        return TriRing::make(build_ring(spec.at("base"), cfg), cfg);
    }
    if (kind == "ut2") {
        check_keys(spec, {"kind", "base"});
        if (!spec.contains("base"))
            throw ValidationError("ut2 spec needs a 'base'");
        return Ut2Ring::make(build_ring(spec.at("base"), cfg), cfg);
    }
    if (kind == "sum") {
        check_keys(spec, {"kind", "left", "right"});
        if (!spec.contains("left") || !spec.contains("right"))
            throw ValidationError("sum spec needs 'left' and 'right'");
        return SumRing::make(build_ring(spec.at("left"), cfg),
                             build_ring(spec.at("right"), cfg), cfg);
    }
    if (kind == "poly") {
        check_keys(spec, {"kind", "base", "var"});
        if (!spec.contains("base") || !spec.contains("var") ||
            !spec.at("var").is_string())
            throw ValidationError("poly spec needs 'base' and string 'var'");
        return PolyRing::make(build_ring(spec.at("base"), cfg),
                              spec.at("var").get<std::string>(), cfg);
    }
    if (kind == "gauss") {
        check_keys(spec, {"kind"});
        return GaussRing::make(cfg);
    }
    if (kind == "int_rat_tri") {
        check_keys(spec, {"kind"});
        return IntRatTriRing::make(cfg);
    }
    throw ValidationError("unknown ring kind '" + kind + "'");
}

std::vector<Elem> element_stream(const Ring& ring, std::size_t count,
                                 const Config& cfg) {
    std::vector<Elem> out;
    out.reserve(count);
    std::size_t prefix = ring.enumerable()
                             ? count
                             : std::min<std::size_t>(cfg.probe_prefix, count);
    for (std::size_t k = 0; k < prefix; ++k) out.push_back(ring.probe(k));
    Rng rng(cfg.seed);
    for (std::size_t k = prefix; k < count; ++k)
        out.push_back(ring.sample(rng, cfg.height));
    return out;
}

} // namespace orelab
