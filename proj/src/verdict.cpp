#include "orelab/verdict.hpp"

#include "orelab/errors.hpp"

namespace orelab {

std::string to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::Holds: return "holds";
    case VerdictKind::HoldsBounded: return "holds-bounded";
    case VerdictKind::Fails: return "fails";
    case VerdictKind::Inconclusive: return "inconclusive";
    }
    throw ValidationError("bad verdict kind");
}

VerdictKind verdict_kind_from(const std::string& s) {
    if (s == "holds") return VerdictKind::Holds;
    if (s == "holds-bounded") return VerdictKind::HoldsBounded;
    if (s == "fails") return VerdictKind::Fails;
    if (s == "inconclusive") return VerdictKind::Inconclusive;
    throw ValidationError("unknown verdict kind '" + s + "'");
}

std::string Witness::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i].first + " = " + parts[i].second;
    }
    if (!note.empty()) out += out.empty() ? note : " (" + note + ")";
    return out;
}

nlohmann::json Witness::to_json() const {
    nlohmann::json j;
    // Parts keep their order in an array of [name, literal] pairs.
    j["parts"] = nlohmann::json::array();
    for (const auto& [k, v] : parts) j["parts"].push_back({k, v});
    if (!note.empty()) j["note"] = note;
    return j;
}

Witness Witness::from_json(const nlohmann::json& j) {
    Witness w;
    for (const auto& p : j.at("parts"))
        w.parts.emplace_back(p.at(0).get<std::string>(),
                             p.at(1).get<std::string>());
    if (j.contains("note")) w.note = j["note"].get<std::string>();
    return w;
}

std::string Bounds::str() const {
    std::string out;
    auto put = [&](const char* name, const std::string& val) {
        if (!out.empty()) out += ", ";
        out += std::string(name) + "=" + val;
    };
    if (scanned) put("scanned", std::to_string(*scanned));
    if (pairs) put("pairs", std::to_string(*pairs));
    if (samples) put("samples", std::to_string(*samples));
    if (seed) put("seed", std::to_string(*seed));
    if (deg_bound) put("deg_bound", std::to_string(*deg_bound));
    if (deg_p) put("deg_p", std::to_string(*deg_p));
    if (deg_phi) put("deg_phi", std::to_string(*deg_phi));
    if (j_max) put("j_max", std::to_string(*j_max));
    if (!note.empty()) put("note", note);
    return out;
}

nlohmann::json Bounds::to_json() const {
    nlohmann::json j;
    if (samples) j["samples"] = *samples;
    if (pairs) j["pairs"] = *pairs;
    if (scanned) j["scanned"] = *scanned;
    if (seed) j["seed"] = *seed;
    if (deg_bound) j["deg_bound"] = *deg_bound;
    if (deg_p) j["deg_p"] = *deg_p;
    if (deg_phi) j["deg_phi"] = *deg_phi;
    if (j_max) j["j_max"] = *j_max;
    if (!note.empty()) j["note"] = note;
    return j;
}

Bounds Bounds::from_json(const nlohmann::json& j) {
    Bounds b;
    if (j.contains("samples")) b.samples = j["samples"].get<std::uint64_t>();
    if (j.contains("pairs")) b.pairs = j["pairs"].get<std::uint64_t>();
    if (j.contains("scanned")) b.scanned = j["scanned"].get<std::uint64_t>();
    if (j.contains("seed")) b.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("deg_bound")) b.deg_bound = j["deg_bound"].get<int>();
    if (j.contains("deg_p")) b.deg_p = j["deg_p"].get<int>();
    if (j.contains("deg_phi")) b.deg_phi = j["deg_phi"].get<int>();
    if (j.contains("j_max")) b.j_max = j["j_max"].get<int>();
    if (j.contains("note")) b.note = j["note"].get<std::string>();
    return b;
}

std::string Verdict::str() const {
    std::string out = property + " on " + subject + ": " + to_string(kind);
    if (witness) out += " [" + witness->str() + "]";
    if (all_witnesses.size() > 1)
        out += " (+" + std::to_string(all_witnesses.size() - 1) +
               " more witnesses)";
    if (bounds) {
        std::string b = bounds->str();
        if (!b.empty()) out += " {" + b + "}";
    }
    if (!note.empty()) out += " -- " + note;
    return out;
}

nlohmann::json Verdict::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["property"] = property;
    j["subject"] = subject;
    if (witness) j["witness"] = witness->to_json();
    if (!all_witnesses.empty()) {
        j["all_witnesses"] = nlohmann::json::array();
        for (const Witness& w : all_witnesses)
            j["all_witnesses"].push_back(w.to_json());
    }
    if (bounds) {
        nlohmann::json b = bounds->to_json();
        if (!b.empty()) j["bounds"] = b;
    }
    if (!note.empty()) j["note"] = note;
    return j;
}

Verdict Verdict::from_json(const nlohmann::json& j) {
    Verdict v;
    v.kind = verdict_kind_from(j.at("kind").get<std::string>());
    v.property = j.at("property").get<std::string>();
    v.subject = j.at("subject").get<std::string>();
    if (j.contains("witness")) v.witness = Witness::from_json(j["witness"]);
    if (j.contains("all_witnesses"))
        for (const auto& w : j["all_witnesses"])
            v.all_witnesses.push_back(Witness::from_json(w));
    if (j.contains("bounds")) v.bounds = Bounds::from_json(j["bounds"]);
    if (j.contains("note")) v.note = j["note"].get<std::string>();
    return v;
}

} // namespace orelab
