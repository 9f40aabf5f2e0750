#include "orelab/report.hpp"

#include <iomanip>
#include <sstream>

#include "orelab/annihilators.hpp"
#include "orelab/errors.hpp"

namespace orelab {

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "machine") return Format::machine;
    throw ValidationError("unknown format '" + name +
                          "' (expected text or machine)");
}

namespace {

nlohmann::json elems_json(const RingPtr& ring, const std::vector<Elem>& es) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : es) a.push_back(ring->format(e));
    return a;
}

nlohmann::json indices_json(const RingPtr& ring,
                            const std::vector<std::uint32_t>& s) {
    nlohmann::json a = nlohmann::json::array();
    for (std::uint32_t i : s) a.push_back(ring->format(Elem(i)));
    return a;
}

// Exhaustive profile on enumerable backends, closed-form inventory on
// sampleable ones, null when neither applies.
nlohmann::json build_profile(const RingPtr& ring, const Config& cfg) {
    (void)cfg;
    if (ring->enumerable()) {
        IdempotentProfile p = idempotent_profile(ring);
        return {{"idempotents", indices_json(ring, p.idempotents)},
                {"left_semicentral", indices_json(ring, p.left_semicentral)},
                {"right_semicentral", indices_json(ring, p.right_semicentral)},
                {"central", indices_json(ring, p.central)},
                {"mode", "exhaustive"}};
    }
    if (auto known = ring->known_idempotents())
        return {{"idempotents", elems_json(ring, *known)},
                {"mode", "closed-form"}};
    return nullptr;
}

void profile_lines(std::ostream& os, const nlohmann::json& profile) {
    if (profile.is_null()) {
        os << "idempotents: no inventory available\n";
        return;
    }
    auto join = [](const nlohmann::json& a) {
        std::string s;
        for (const auto& v : a) {
            if (!s.empty()) s += ", ";
            s += v.get<std::string>();
        }
        return s.empty() ? std::string("none") : s;
    };
    os << "idempotents (" << profile.at("mode").get<std::string>()
       << "): " << join(profile.at("idempotents")) << "\n";
    if (profile.contains("left_semicentral")) {
        os << "  left semicentral:  " << join(profile.at("left_semicentral"))
           << "\n";
        os << "  right semicentral: " << join(profile.at("right_semicentral"))
           << "\n";
        os << "  central:           " << join(profile.at("central")) << "\n";
    }
}

}  // namespace

RingSurvey survey(const QdPtr& qd, const Config& cfg) {
    RingSurvey s;
    s.roundtrip = theorem_roundtrip(qd, cfg);
    s.profile = build_profile(qd->ring(), cfg);
    return s;
}

nlohmann::json RingSurvey::to_json() const {
    return {{"report", roundtrip.to_json()}, {"profile", profile}};
}

std::string RingSurvey::str() const {
    std::ostringstream os;
    os << roundtrip.str() << "\n";
    profile_lines(os, profile);
    return os.str();
}

void render(std::ostream& os, Format f, const Verdict& v) {
    if (f == Format::machine)
        os << v.to_json().dump(2) << "\n";
    else
        os << v.str() << "\n";
}

void render(std::ostream& os, Format f, const RingSurvey& s) {
    if (f == Format::machine)
        os << s.to_json().dump(2) << "\n";
    else
        os << s.str();
}

void render(std::ostream& os, Format f, const EntryReport& r) {
    if (f == Format::machine)
        os << r.to_json().dump(2) << "\n";
    else
        os << r.str();
}

void render_catalog(std::ostream& os, Format f,
                    const std::vector<EntryReport>& reports) {
    if (f == Format::machine) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : reports) a.push_back(r.to_json());
        os << a.dump(2) << "\n";
        return;
    }
    std::size_t name_w = 4;
    for (const auto& r : reports) name_w = std::max(name_w, r.name.size());
    bool all_ok = true;
    for (const auto& r : reports) {
        std::size_t good = 0;
        for (const auto& l : r.lines)
            if (l.ok) ++good;
        os << std::left << std::setw(static_cast<int>(name_w + 2)) << r.name
           << std::right << std::setw(2) << good << "/" << std::left
           << std::setw(4) << r.lines.size()
           << (r.ok ? "ok" : "MISMATCH") << "\n";
        if (!r.ok) {
            all_ok = false;
            for (const auto& l : r.lines)
                if (!l.ok) os << "    !! " << l.check << ": " << l.detail << "\n";
        }
    }
    os << (all_ok ? "all catalog expectations hold" : "catalog has mismatches")
       << "\n";
}

}  // namespace orelab
