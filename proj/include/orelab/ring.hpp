#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "orelab/config.hpp"
#include "orelab/elem.hpp"
#include "orelab/errors.hpp"
#include "orelab/rng.hpp"

namespace orelab {

// Canonical probe streams for the infinite backends. rat_probe runs
// 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, -3/2, 1/3, ... (grouped by
// height max(|p|, q)); int_probe runs 0, 1, -1, 2, -2, ...
Rat rat_probe(std::uint64_t k);
std::int64_t int_probe(std::uint64_t k);

// k -> (i, j) walking the infinite grid by anti-diagonals.
std::pair<std::uint64_t, std::uint64_t> diag_pair(std::uint64_t k);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A unital associative ring with one of two backends.
//
// Enumerable: every element is an index below size(); add/mul/neg are
// precomputed tables and all axioms were checked exhaustively (triples
// sampled above the triple budget) at construction.
//
// Sampleable: elements are exact structured values; construction checks
// axioms on sampled triples, and every claim downstream of sampling is
// reported as bounded evidence, never as a certificate.
class Ring {
  public:
    virtual ~Ring() = default;

    virtual std::string kind() const = 0;
    virtual nlohmann::json descriptor() const = 0;
    std::string label() const;

    bool enumerable() const { return size_ != 0; }
    std::uint32_t size() const {
        if (!size_) throw BackendError(label() + " has no element count");
        return size_;
    }

    const Elem& zero() const { return zero_; }
    const Elem& one() const { return one_; }
    bool commutative() const { return commutative_; }
    // "exhaustive", "pairs+sampled-triples" or "sampled".
    const std::string& validation_mode() const { return validation_mode_; }

    Elem add(const Elem& x, const Elem& y) const {
        if (size_) return Elem(addi(x.idx(), y.idx()));
        return samp_add(x, y);
    }
    Elem mul(const Elem& x, const Elem& y) const {
        if (size_) return Elem(muli(x.idx(), y.idx()));
        return samp_mul(x, y);
    }
    Elem neg(const Elem& x) const {
        if (size_) return Elem(negi(x.idx()));
        return samp_neg(x);
    }
    Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

    bool is_zero(const Elem& x) const { return x == zero_; }
    bool is_one(const Elem& x) const { return x == one_; }

    // Index-level ops for scan kernels (enumerable only, unchecked).
    std::uint32_t addi(std::uint32_t a, std::uint32_t b) const {
        return add_[static_cast<std::size_t>(a) * size_ + b];
    }
    std::uint32_t muli(std::uint32_t a, std::uint32_t b) const {
        return mul_[static_cast<std::size_t>(a) * size_ + b];
    }
    std::uint32_t negi(std::uint32_t a) const { return neg_[a]; }

    Elem element(std::uint32_t i) const {
        if (i >= size()) throw MismatchError("element index out of range");
        return Elem(i);
    }
    std::uint32_t index(const Elem& e) const {
        std::uint32_t i = e.idx();
        if (i >= size()) throw MismatchError("element index out of range");
        return i;
    }

    // Canonical deterministic element stream; enumerable backends wrap
    // around, infinite ones walk their probe order.
    virtual Elem probe(std::uint64_t k) const {
        return Elem(static_cast<std::uint32_t>(k % size()));
    }

    virtual Elem sample(Rng& rng, std::int64_t height) const {
        (void)height;
        return Elem(static_cast<std::uint32_t>(rng.below(size())));
    }

    // Re-normalizes a structured value (reduce fractions, trim trailing
    // zeros). Identity on enumerable backends; idempotent everywhere.
    virtual Elem canon(const Elem& e) const { return e; }

    // The full idempotent set when it is known in closed form (fields,
    // the int_rat_tri ring, polynomial rings over a checked domain,
    // direct sums of resolved sides). nullopt means unknown, not empty.
    virtual std::optional<std::vector<Elem>> known_idempotents() const {
        return std::nullopt;
    }

    // For an idempotent e, whether e is left / right semicentral
    // (ere == re resp. ere == er for all r), when certifiable.
    virtual std::optional<std::pair<bool, bool>>
    idempotent_sides(const Elem& e) const;

    std::string format(const Elem& e) const { return format_impl(e); }
    // Accepts the kind's literal grammar; "#i" picks an element of an
    // enumerable ring by index.
    Elem parse(const std::string& text) const;

  protected:
    Ring() = default;

    // Sampleable backends implement these three.
    virtual Elem samp_add(const Elem&, const Elem&) const {
        throw BackendError("ring has no sampled ops");
    }
    virtual Elem samp_mul(const Elem&, const Elem&) const {
        throw BackendError("ring has no sampled ops");
    }
    virtual Elem samp_neg(const Elem&) const {
        throw BackendError("ring has no sampled ops");
    }

    // Enumerable backends implement these; used once to build tables.
    virtual std::uint32_t raw_add(std::uint32_t, std::uint32_t) const {
        throw BackendError("ring has no raw index ops");
    }
    virtual std::uint32_t raw_mul(std::uint32_t, std::uint32_t) const {
        throw BackendError("ring has no raw index ops");
    }
    virtual std::uint32_t raw_neg(std::uint32_t) const {
        throw BackendError("ring has no raw index ops");
    }
    virtual std::uint32_t raw_one() const {
        throw BackendError("ring has no raw index ops");
    }

    virtual std::string format_impl(const Elem&) const = 0;
    virtual Elem parse_impl(const std::string&) const = 0;

    // Builds tables and validates axioms (exhaustively where the budget
    // allows); subclass factories call this exactly once.
    void finalize_enumerable(std::uint32_t n, const Config& cfg);
    void finalize_sampleable(Elem zero, Elem one, bool commutative,
                             const Config& cfg);

  private:
    std::uint32_t size_ = 0;
    std::vector<std::uint16_t> add_, mul_, neg_;
    Elem zero_, one_;
    bool commutative_ = false;
    std::string validation_mode_;
};

// ---- concrete kinds ----

class ZnRing final : public Ring {
  public:
    static std::shared_ptr<const ZnRing> make(std::uint32_t n,
                                              const Config& cfg = {});
    std::string kind() const override { return "zn"; }
    nlohmann::json descriptor() const override;
    std::uint32_t modulus() const { return n_; }

  protected:
    std::uint32_t raw_add(std::uint32_t a, std::uint32_t b) const override {
        return (a + b) % n_;
    }
    std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const override {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % n_);
    }
    std::uint32_t raw_neg(std::uint32_t a) const override {
        return (n_ - a) % n_;
    }
    std::uint32_t raw_one() const override { return 1 % n_; }
    std::string format_impl(const Elem& e) const override;
    Elem parse_impl(const std::string& text) const override;

  private:
    explicit ZnRing(std::uint32_t n) : n_(n) {}
    std::uint32_t n_;
};

// Ring given by explicit op tables. The zero element must sit at index 0;
// unity is located by scan.
class TableRing final : public Ring {
  public:
    static std::shared_ptr<const TableRing>
    make(std::vector<std::vector<std::uint32_t>> add,
         std::vector<std::vector<std::uint32_t>> mul, const Config& cfg = {});
    std::string kind() const override { return "tables"; }
    nlohmann::json descriptor() const override;

  protected:
    std::uint32_t raw_add(std::uint32_t a, std::uint32_t b) const override {
        return tadd_[a][b];
    }
    std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const override {
        return tmul_[a][b];
    }
    std::uint32_t raw_neg(std::uint32_t a) const override;
    std::uint32_t raw_one() const override;
    std::string format_impl(const Elem& e) const override;
    Elem parse_impl(const std::string& text) const override;

  private:
    TableRing(std::vector<std::vector<std::uint32_t>> add,
              std::vector<std::vector<std::uint32_t>> mul)
        : tadd_(std::move(add)), tmul_(std::move(mul)) {}
    std::vector<std::vector<std::uint32_t>> tadd_, tmul_;
};

// Trivial extension T(R, R): pairs (a, b) with componentwise addition and
// (a,b)(a',b') = (aa', ab' + ba'). Base must be enumerable.
class TriRing final : public Ring {
  public:
    static std::shared_ptr<const TriRing> make(RingPtr base,
                                               const Config& cfg = {});
    std::string kind() const override { return "tri2"; }
    nlohmann::json descriptor() const override;

    const RingPtr& base() const { return base_; }
    std::pair<std::uint32_t, std::uint32_t> parts(std::uint32_t i) const {
        return {i / nb_, i % nb_};
    }
    std::uint32_t compose(std::uint32_t a, std::uint32_t b) const {
        return a * nb_ + b;
    }

  protected:
    std::uint32_t raw_add(std::uint32_t, std::uint32_t) const override;
    std::uint32_t raw_mul(std::uint32_t, std::uint32_t) const override;
    std::uint32_t raw_neg(std::uint32_t) const override;
    std::uint32_t raw_one() const override;
    std::string format_impl(const Elem& e) const override;
    Elem parse_impl(const std::string& text) const override;

  private:
    TriRing(RingPtr base, std::uint32_t nb)
        : base_(std::move(base)), nb_(nb) {}
    RingPtr base_;
    std::uint32_t nb_;
};

// Upper triangular 2x2 matrices over an enumerable base, stored as
// (a, b, d) for [[a, b], [0, d]].
class Ut2Ring final : public Ring {
  public:
    static std::shared_ptr<const Ut2Ring> make(RingPtr base,
                                               const Config& cfg = {});
    std::string kind() const override { return "ut2"; }
    nlohmann::json descriptor() const override;

    const RingPtr& base() const { return base_; }
    struct Parts {
        std::uint32_t a, b, d;
    };
    Parts parts(std::uint32_t i) const {
        return {i / (nb_ * nb_), (i / nb_) % nb_, i % nb_};
    }
    std::uint32_t compose(std::uint32_t a, std::uint32_t b,
                          std::uint32_t d) const {
        return (a * nb_ + b) * nb_ + d;
    }

  protected:
    std::uint32_t raw_add(std::uint32_t, std::uint32_t) const override;
    std::uint32_t raw_mul(std::uint32_t, std::uint32_t) const override;
    std::uint32_t raw_neg(std::uint32_t) const override;
    std::uint32_t raw_one() const override;
    std::string format_impl(const Elem& e) const override;
    Elem parse_impl(const std::string& text) const override;

  private:
    Ut2Ring(RingPtr base, std::uint32_t nb)
        : base_(std::move(base)), nb_(nb) {}
    RingPtr base_;
    std::uint32_t nb_;
};

// Direct sum. Enumerable when both sides are (index = l * |right| + r),
// a component-pair backend otherwise.
class SumRing final : public Ring {
  public:
    static std::shared_ptr<const SumRing> make(RingPtr left, RingPtr right,
                                               const Config& cfg = {});
    std::string kind() const override { return "sum"; }
    nlohmann::json descriptor() const override;

    const RingPtr& left() const { return left_; }
    const RingPtr& right() const { return right_; }
    std::pair<Elem, Elem> parts(const Elem& e) const;
    Elem compose(const Elem& l, const Elem& r) const;

    Elem probe(std::uint64_t k) const override;
    Elem sample(Rng& rng, std::int64_t height) const override;
    Elem canon(const Elem& e) const override;
    std::optional<std::vector<Elem>> known_idempotents() const override;
    std::optional<std::pair<bool, bool>>
    idempotent_sides(const Elem& e) const override;

  protected:
    Elem samp_add(const Elem&, const Elem&) const override;
    Elem samp_mul(const Elem&, const Elem&) const override;
    Elem samp_neg(const Elem&) const override;
    std::uint32_t raw_add(std::uint32_t, std::uint32_t) const override;
    std::uint32_t raw_mul(std::uint32_t, std::uint32_t) const override;
    std::uint32_t raw_neg(std::uint32_t) const override;
    std::uint32_t raw_one() const override;
    std::string format_impl(const Elem& e) const override;
    Elem parse_impl(const std::string& text) const override;

  private:
    SumRing(RingPtr l, RingPtr r) : left_(std::move(l)), right_(std::move(r)) {}
    // Exhaustive idempotents of an enumerable side, known set otherwise.
    static std::optional<std::vector<Elem>> side_idempotents(const RingPtr&);
    RingPtr left_, right_;
};

// Polynomials over an enumerable base ring in a named variable.
class PolyRing final : public Ring {
  public:
    static std::shared_ptr<const PolyRing> make(RingPtr base, std::string var,
                                                const Config& cfg = {});
    std::string kind() const override { return "poly"; }
    nlohmann::json descriptor() const override;

    const RingPtr& base() const { return base_; }
    const std::string& var() const { return var_; }
    bool base_is_domain() const { return base_domain_; }

    Elem from_coeffs(std::vector<std::uint32_t> coeffs) const;
    Elem constant(std::uint32_t base_index) const;
    // Base index of the x^k coefficient; zero beyond the degree.
    std::uint32_t coeff(const Elem& e, std::size_t k) const;
    int degree(const Elem& e) const; // -1 for the zero polynomial

    Elem probe(std::uint64_t k) const override;
    Elem sample(Rng& rng, std::int64_t height) const override;
    Elem canon(const Elem& e) const override;
    std::optional<std::vector<Elem>> known_idempotents() const override;

  protected:
    Elem samp_add(const Elem&, const Elem&) const override;
    Elem samp_mul(const Elem&, const Elem&) const override;
    Elem samp_neg(const Elem&) const override;
    std::string format_impl(const Elem& e) const override;
    Elem parse_impl(const std::string& text) const override;

  private:
    PolyRing(RingPtr base, std::string var)
        : base_(std::move(base)), var_(std::move(var)) {}
    RingPtr base_;
    std::string var_;
    bool base_domain_ = false;
};

// Gaussian rationals: complex numbers with exact rational re/im parts.
class GaussRing final : public Ring {
  public:
    static std::shared_ptr<const GaussRing> make(const Config& cfg = {});
    std::string kind() const override { return "gauss"; }
    nlohmann::json descriptor() const override;

    Elem value(Rat re, Rat im) const {
        return Elem(GaussVal{std::move(re), std::move(im)});
    }

    Elem probe(std::uint64_t k) const override;
    Elem sample(Rng& rng, std::int64_t height) const override;
    std::optional<std::vector<Elem>> known_idempotents() const override;

  protected:
    Elem samp_add(const Elem&, const Elem&) const override;
    Elem samp_mul(const Elem&, const Elem&) const override;
    Elem samp_neg(const Elem&) const override;
    std::string format_impl(const Elem& e) const override;
    Elem parse_impl(const std::string& text) const override;

  private:
    GaussRing() = default;
};

// Pairs (a, t) with a an integer and t rational, multiplication
// (a,t)(a',t') = (aa', at' + ta'); the subring {(a, t)} of the trivial
// extension of Q by itself with integer diagonal.
class IntRatTriRing final : public Ring {
  public:
    static std::shared_ptr<const IntRatTriRing> make(const Config& cfg = {});
    std::string kind() const override { return "int_rat_tri"; }
    nlohmann::json descriptor() const override;

    Elem value(std::int64_t a, Rat t) const {
        return Elem(IntRatVal{a, std::move(t)});
    }

    Elem probe(std::uint64_t k) const override;
    Elem sample(Rng& rng, std::int64_t height) const override;
    std::optional<std::vector<Elem>> known_idempotents() const override;

  protected:
    Elem samp_add(const Elem&, const Elem&) const override;
    Elem samp_mul(const Elem&, const Elem&) const override;
    Elem samp_neg(const Elem&) const override;
    std::string format_impl(const Elem& e) const override;
    Elem parse_impl(const std::string& text) const override;

  private:
    IntRatTriRing() = default;
};

// Builds any ring from its JSON descriptor; inverse of Ring::descriptor.
RingPtr build_ring(const nlohmann::json& spec, const Config& cfg = {});

// Splits "a, b, c" at top-level commas (depth-aware over (), [], {}).
std::vector<std::string> split_top_level(const std::string& text, char sep);
std::string trim_copy(const std::string& s);

// First probe_prefix probes followed by seeded samples; the deterministic
// element stream behind every sampled check.
std::vector<Elem> element_stream(const Ring& ring, std::size_t count,
                                 const Config& cfg);

} // namespace orelab
