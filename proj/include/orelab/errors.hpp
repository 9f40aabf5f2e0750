#pragma once

#include <stdexcept>
#include <string>

namespace orelab {

// Base for every error this library raises on purpose. Anything else
// escaping is a bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input that fails structural validation: malformed ring files, literals
// that do not parse, op tables that break a ring axiom, maps that are not
// homomorphisms or derivations.
struct ValidationError : Error {
    using Error::Error;
};

// A size or budget limit was exceeded (enumerable size cap, lattice
// closure cap, scan cap, word-expansion cap).
struct CapError : Error {
    using Error::Error;
};

// An operation was asked of a backend that cannot provide it, e.g. an
// exhaustive annihilator scan over a sampled infinite ring.
struct BackendError : Error {
    using Error::Error;
};

// Elements or polynomials from different rings / Ore contexts were mixed.
struct MismatchError : Error {
    using Error::Error;
};

// A theorem-lab construction was invoked on input that fails its
// hypotheses; carries which hypothesis broke and a witness description.
struct HypothesisError : Error {
    std::string hypothesis;
    std::string witness;
    HypothesisError(std::string hyp, std::string wit)
        : Error("hypothesis " + hyp + " failed" +
                (wit.empty() ? std::string{} : ": " + wit)),
          hypothesis(std::move(hyp)),
          witness(std::move(wit)) {}
};

// A set expected to be a one-sided ideal is not one (annihilator
// post-condition checks).
struct NotIdealError : Error {
    using Error::Error;
};

// Arithmetic left the exactly-representable range (rational overflow).
struct OverflowError : Error {
    using Error::Error;
};

} // namespace orelab
