#include "invstab/verdict_json.hpp"

#include <sstream>

namespace invstab {

using nlohmann::json;

json elem_to_json(const FieldCtx& F, const FieldElem& a) {
    if (F.k() <= 1) return a.v.at(0);
    json coeffs = json::array();
    for (uint64_t x : a.v) coeffs.push_back(x);
    return coeffs;
}

namespace {

json cert_json(const IrreducibilityCertificate& cert) {
    json j;
    j["verdict"] = cert.verdict == IrredVerdict::Irreducible   ? "Irreducible"
                   : cert.verdict == IrredVerdict::Reducible   ? "Reducible"
                                                               : "Inconclusive";
    switch (cert.method) {
        case IrredMethod::BinomialCriterion: j["method"] = "BinomialCriterion"; break;
        case IrredMethod::Rabin: j["method"] = "Rabin"; break;
        case IrredMethod::ModPReduction: j["method"] = "ModPReduction"; break;
        case IrredMethod::Eisenstein: j["method"] = "Eisenstein"; break;
        case IrredMethod::Factorization: j["method"] = "Factorization"; break;
    }
    if (cert.certifying_prime != 0) j["prime"] = cert.certifying_prime;
    if (!cert.witness.empty()) j["witness"] = cert.witness;
    return j;
}

}  // namespace

json decide_json(const FieldCtx& F, uint64_t d, const FieldElem& c, const Verdict& v) {
    json j;
    j["schema_version"] = 1;
    j["field"] = {{"p", F.p()}, {"k", F.k()}};
    j["d"] = d;
    j["c"] = elem_to_json(F, c);
    j["verdict"] = verdict_kind_name(v.kind);
    if (v.scan && v.scan->status == PairScan::Cycle) {
        j["preperiod"] = v.scan->preperiod;
        j["period"] = v.scan->period;
        json ratios = json::array();
        for (const auto& r : v.scan->ratios) ratios.push_back(elem_to_json(F, r));
        j["ratios"] = ratios;
    } else {
        j["preperiod"] = nullptr;
        j["period"] = nullptr;
        j["ratios"] = json::array();
    }
    if (v.failing_index) {
        json w;
        w["n"] = *v.failing_index;
        if (v.failing_ratio) w["ratio"] = elem_to_json(F, *v.failing_ratio);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    if (v.cert) j["certificate"] = cert_json(*v.cert);
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

json guarantee_json(const std::string& ring, uint64_t d, const std::string& c_text,
                    const Verdict& v) {
    json j;
    j["schema_version"] = 1;
    j["ring"] = ring;
    j["d"] = d;
    j["c"] = c_text;
    j["verdict"] = verdict_kind_name(v.kind);
    j["witness"] = v.failing_index ? json(*v.failing_index) : json(nullptr);
    if (v.cert) j["certificate"] = cert_json(*v.cert);
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

json family_json(const FamilyReport& rep) {
    json j;
    j["schema_version"] = 1;
    j["p"] = rep.p;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["count"] = rep.count;
    j["bound"] = rep.bound;
    j["bound_ok"] = rep.bound_ok;
    j["cubic_sum"] = rep.cubic_sum;
    j["identity_ok"] = rep.identity_ok;
    j["indicator_ok"] = rep.indicator_ok;
    j["qualifying_c"] = rep.qualifying_c;
    if (!rep.verdicts.empty()) {
        json rows = json::array();
        for (const auto& [c, v] : rep.verdicts)
            rows.push_back({{"c", c}, {"verdict", verdict_kind_name(v.kind)}});
        j["verdicts"] = rows;
    }
    return j;
}

std::string family_csv(const FamilyReport& rep) {
    const auto chi = quadratic_character_table(rep.p);
    std::ostringstream out;
    out << "c,legendre_c_minus_1,legendre_c,legendre_c_plus_1,verdict\n";
    for (size_t i = 0; i < rep.qualifying_c.size(); ++i) {
        const uint64_t c = rep.qualifying_c[i];
        out << c << ',' << int(chi[(c + rep.p - 1) % rep.p]) << ',' << int(chi[c]) << ','
            << int(chi[(c + 1) % rep.p]) << ',';
        if (i < rep.verdicts.size()) out << verdict_kind_name(rep.verdicts[i].second.kind);
        out << '\n';
    }
    return out.str();
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream out;
    out << verdict_kind_name(v.kind);
    if (v.failing_index) out << " (witness n = " << *v.failing_index << ")";
    for (const auto& n : v.notes) out << "\n  " << n;
    return out.str();
}

}  // namespace invstab
