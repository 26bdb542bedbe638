#pragma once

#include "sgt/classify.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

// Machine-readable and human-readable renderings of verdicts. Big integers
// are serialized as decimal strings (Frobenius numbers outgrow doubles and
// int64 quickly), and JSON documents parse back to the exact verdict.

namespace sgt {

using json = nlohmann::json;

// ---- enum <-> string ------------------------------------------------------

inline std::string to_string(Family f) {
    switch (f) {
        case Family::fibonacci: return "fibonacci";
        case Family::lucas: return "lucas";
        default: return "raw";
    }
}

inline Family family_from_string(const std::string& s) {
    if (s == "fibonacci") return Family::fibonacci;
    if (s == "lucas") return Family::lucas;
    if (s == "raw") return Family::raw;
    throw std::invalid_argument("unknown family: " + s);
}

inline std::string to_string(Status s) {
    switch (s) {
        case Status::symmetric: return "symmetric";
        case Status::non_symmetric: return "non_symmetric";
        case Status::non_minimal: return "non_minimal";
        case Status::two_generator: return "two_generator";
        default: return "undecided";
    }
}

inline Status status_from_string(const std::string& s) {
    if (s == "symmetric") return Status::symmetric;
    if (s == "non_symmetric") return Status::non_symmetric;
    if (s == "non_minimal") return Status::non_minimal;
    if (s == "two_generator") return Status::two_generator;
    if (s == "undecided") return Status::undecided;
    throw std::invalid_argument("unknown status: " + s);
}

inline std::string to_string(Reason r) {
    switch (r) {
        case Reason::pair_gcd_containment: return "pair_gcd_containment";
        case Reason::all_pairs_coprime: return "all_pairs_coprime";
        case Reason::third_not_coprime_to_pair_gcd: return "third_not_coprime_to_pair_gcd";
        case Reason::containment_failed: return "containment_failed";
        case Reason::smallest_generator_three: return "smallest_generator_three";
        case Reason::redundant_generator: return "redundant_generator";
        default: return "reduces_to_two_generators";
    }
}

inline Reason reason_from_string(const std::string& s) {
    if (s == "pair_gcd_containment") return Reason::pair_gcd_containment;
    if (s == "all_pairs_coprime") return Reason::all_pairs_coprime;
    if (s == "third_not_coprime_to_pair_gcd") return Reason::third_not_coprime_to_pair_gcd;
    if (s == "containment_failed") return Reason::containment_failed;
    if (s == "smallest_generator_three") return Reason::smallest_generator_three;
    if (s == "redundant_generator") return Reason::redundant_generator;
    if (s == "reduces_to_two_generators") return Reason::reduces_to_two_generators;
    throw std::invalid_argument("unknown reason: " + s);
}

inline std::string to_string(LucasClause c) {
    switch (c) {
        case LucasClause::equal_valuation: return "equal_valuation";
        case LucasClause::all_odd: return "all_odd";
        case LucasClause::odd_pair_even_third: return "odd_pair_even_third";
        case LucasClause::mixed_valuation: return "mixed_valuation";
        default: return "none";
    }
}

inline LucasClause lucas_clause_from_string(const std::string& s) {
    if (s == "equal_valuation") return LucasClause::equal_valuation;
    if (s == "all_odd") return LucasClause::all_odd;
    if (s == "odd_pair_even_third") return LucasClause::odd_pair_even_third;
    if (s == "mixed_valuation") return LucasClause::mixed_valuation;
    if (s == "none") return LucasClause::none;
    throw std::invalid_argument("unknown clause: " + s);
}

inline std::string to_string(OracleOutcome o) {
    switch (o) {
        case OracleOutcome::confirmed: return "confirmed";
        case OracleOutcome::mismatch: return "mismatch";
        case OracleOutcome::infeasible: return "infeasible";
        case OracleOutcome::skipped: return "skipped";
        default: return "not_applicable";
    }
}

inline OracleOutcome oracle_outcome_from_string(const std::string& s) {
    if (s == "confirmed") return OracleOutcome::confirmed;
    if (s == "mismatch") return OracleOutcome::mismatch;
    if (s == "infeasible") return OracleOutcome::infeasible;
    if (s == "skipped") return OracleOutcome::skipped;
    if (s == "not_applicable") return OracleOutcome::not_applicable;
    throw std::invalid_argument("unknown oracle outcome: " + s);
}

// ---- JSON -----------------------------------------------------------------

inline json to_json(const BigNat& n) { return n.str(); }
inline BigNat bignat_from_json(const json& j) { return BigNat(j.get<std::string>()); }

inline json to_json(const SymmetricCertificate& c) {
    auto h = c.hilbert();
    json num = json::array(), den = json::array();
    for (const auto& e : h.numerator_exponents) num.push_back(e.str());
    for (const auto& d : h.denominator_exponents) den.push_back(d.str());
    return json{{"lambda", c.lambda.str()},
                {"pair", {c.pair[0].str(), c.pair[1].str()}},
                {"third", c.third.str()},
                {"e1", c.e1.str()},
                {"e2", c.e2.str()},
                {"frobenius", c.frobenius.str()},
                {"genus", c.genus.str()},
                {"hilbert", {{"numerator_exponents", num}, {"denominator_exponents", den}}}};
}

inline SymmetricCertificate certificate_from_json(const json& j) {
    SymmetricCertificate c;
    c.lambda = bignat_from_json(j.at("lambda"));
    c.pair = {bignat_from_json(j.at("pair")[0]), bignat_from_json(j.at("pair")[1])};
    c.third = bignat_from_json(j.at("third"));
    c.e1 = bignat_from_json(j.at("e1"));
    c.e2 = bignat_from_json(j.at("e2"));
    c.frobenius = bignat_from_json(j.at("frobenius"));
    c.genus = bignat_from_json(j.at("genus"));
    return c;
}

inline json to_json(const Verdict& v) {
    json j;
    j["family"] = to_string(v.family);
    if (v.family == Family::raw)
        j["indices"] = nullptr;
    else
        j["indices"] = {v.indices[0], v.indices[1], v.indices[2]};
    j["generators"] = {v.generators[0].str(), v.generators[1].str(), v.generators[2].str()};
    j["status"] = to_string(v.status);
    j["reason"] = to_string(v.reason);
    j["lucas_clause"] = to_string(v.lucas_clause);
    j["detail"] = v.detail;
    j["certificate"] = v.certificate ? to_json(*v.certificate) : json(nullptr);
    if (v.pair) {
        json p;
        p["values"] = {v.pair->values[0].str(), v.pair->values[1].str()};
        p["third_value"] = v.pair->third_value.str();
        p["lambda"] = v.pair->lambda_value.str();
        if (v.family != Family::raw) {
            p["indices"] = {v.pair->indices[0], v.pair->indices[1]};
            p["third_index"] = v.pair->third_index;
            p["lambda_index"] = v.pair->lambda_index;
        }
        if (v.pair->containment)
            p["containment"] = {{"a", v.pair->containment->first.str()},
                                {"b", v.pair->containment->second.str()}};
        j["pair"] = p;
    } else {
        j["pair"] = nullptr;
    }
    if (v.dependence) {
        j["dependence"] = {{"redundant", v.dependence->redundant.str()},
                           {"over", {v.dependence->over[0].str(), v.dependence->over[1].str()}},
                           {"coefficients",
                            {v.dependence->coeffs.first.str(), v.dependence->coeffs.second.str()}}};
    } else {
        j["dependence"] = nullptr;
    }
    j["reduced_pair"] = v.reduced_pair
                            ? json{(*v.reduced_pair)[0].str(), (*v.reduced_pair)[1].str()}
                            : json(nullptr);
    return j;
}

inline Verdict verdict_from_json(const json& j) {
    Verdict v;
    v.family = family_from_string(j.at("family").get<std::string>());
    if (!j.at("indices").is_null()) {
        for (int i = 0; i < 3; ++i) v.indices[i] = j.at("indices")[i].get<SeqIndex>();
    }
    for (int i = 0; i < 3; ++i) v.generators[i] = bignat_from_json(j.at("generators")[i]);
    v.status = status_from_string(j.at("status").get<std::string>());
    v.reason = reason_from_string(j.at("reason").get<std::string>());
    v.lucas_clause = lucas_clause_from_string(j.at("lucas_clause").get<std::string>());
    v.detail = j.at("detail").get<std::string>();
    if (!j.at("certificate").is_null()) v.certificate = certificate_from_json(j.at("certificate"));
    if (!j.at("pair").is_null()) {
        const json& p = j.at("pair");
        PairWitness w;
        w.values = {bignat_from_json(p.at("values")[0]), bignat_from_json(p.at("values")[1])};
        w.third_value = bignat_from_json(p.at("third_value"));
        w.lambda_value = bignat_from_json(p.at("lambda"));
        if (p.contains("indices")) {
            w.indices = {p.at("indices")[0].get<SeqIndex>(), p.at("indices")[1].get<SeqIndex>()};
            w.third_index = p.at("third_index").get<SeqIndex>();
            w.lambda_index = p.at("lambda_index").get<SeqIndex>();
        }
        if (p.contains("containment"))
            w.containment = std::make_pair(bignat_from_json(p.at("containment").at("a")),
                                           bignat_from_json(p.at("containment").at("b")));
        v.pair = std::move(w);
    }
    if (!j.at("dependence").is_null()) {
        const json& d = j.at("dependence");
        Dependence dep;
        dep.redundant = bignat_from_json(d.at("redundant"));
        dep.over = {bignat_from_json(d.at("over")[0]), bignat_from_json(d.at("over")[1])};
        dep.coeffs = {bignat_from_json(d.at("coefficients")[0]),
                      bignat_from_json(d.at("coefficients")[1])};
        v.dependence = std::move(dep);
    }
    if (!j.at("reduced_pair").is_null())
        v.reduced_pair = std::array<BigNat, 2>{bignat_from_json(j.at("reduced_pair")[0]),
                                               bignat_from_json(j.at("reduced_pair")[1])};
    return v;
}

inline json to_json(const OracleAttachment& o) {
    json j;
    j["outcome"] = to_string(o.outcome);
    j["frobenius"] = o.frobenius ? json(*o.frobenius) : json(nullptr);
    j["genus"] = o.genus ? json(*o.genus) : json(nullptr);
    j["conductor"] = o.conductor ? json(*o.conductor) : json(nullptr);
    j["symmetric"] = o.symmetric ? json(*o.symmetric) : json(nullptr);
    j["note"] = o.note;
    return j;
}

inline OracleAttachment oracle_from_json(const json& j) {
    OracleAttachment o;
    o.outcome = oracle_outcome_from_string(j.at("outcome").get<std::string>());
    if (!j.at("frobenius").is_null()) o.frobenius = j.at("frobenius").get<std::uint64_t>();
    if (!j.at("genus").is_null()) o.genus = j.at("genus").get<std::uint64_t>();
    if (!j.at("conductor").is_null()) o.conductor = j.at("conductor").get<std::uint64_t>();
    if (!j.at("symmetric").is_null()) o.symmetric = j.at("symmetric").get<bool>();
    o.note = j.at("note").get<std::string>();
    return o;
}

inline json to_json(const AnalyzedTriple& row) {
    json j = to_json(row.verdict);
    j["oracle"] = to_json(row.oracle);
    return j;
}

inline AnalyzedTriple analyzed_from_json(const json& j) {
    AnalyzedTriple row;
    row.verdict = verdict_from_json(j);
    row.oracle = oracle_from_json(j.at("oracle"));
    return row;
}

// ---- CSV ------------------------------------------------------------------

inline std::string csv_header() {
    return "family,i1,i2,i3,d1,d2,d3,status,reason,lambda,e1,e2,frobenius,genus,oracle";
}

inline std::string to_csv_row(const AnalyzedTriple& row) {
    const Verdict& v = row.verdict;
    std::ostringstream os;
    os << to_string(v.family) << ',';
    if (v.family == Family::raw)
        os << ",,,";
    else
        os << v.indices[0] << ',' << v.indices[1] << ',' << v.indices[2] << ',';
    os << v.generators[0] << ',' << v.generators[1] << ',' << v.generators[2] << ','
       << to_string(v.status) << ',' << to_string(v.reason) << ',';
    if (v.certificate)
        os << v.certificate->lambda;
    else if (v.pair)
        os << v.pair->lambda_value;
    os << ',';
    if (v.certificate)
        os << v.certificate->e1 << ',' << v.certificate->e2 << ',' << v.certificate->frobenius
           << ',' << v.certificate->genus;
    else
        os << ",,,";
    os << ',' << to_string(row.oracle.outcome);
    return os.str();
}

// ---- text -----------------------------------------------------------------

inline std::string hilbert_display(const HilbertForm& h) {
    std::ostringstream os;
    for (const auto& e : h.numerator_exponents) os << "(1 - z^" << e << ")";
    os << " / (";
    for (const auto& d : h.denominator_exponents) os << "(1 - z^" << d << ")";
    os << ")";
    return os.str();
}

inline std::string render_text(const AnalyzedTriple& row) {
    const Verdict& v = row.verdict;
    std::ostringstream os;
    os << "family:      " << to_string(v.family) << '\n';
    if (v.family != Family::raw)
        os << "indices:     " << v.indices[0] << ' ' << v.indices[1] << ' ' << v.indices[2]
           << '\n';
    os << "generators:  " << v.generators[0] << ' ' << v.generators[1] << ' ' << v.generators[2]
       << '\n';
    os << "status:      " << to_string(v.status) << '\n';
    os << "reason:      " << to_string(v.reason);
    if (v.lucas_clause != LucasClause::none) os << " [" << to_string(v.lucas_clause) << "]";
    os << '\n';
    os << "detail:      " << v.detail << '\n';
    if (v.pair) {
        os << "pair:        (" << v.pair->values[0] << ", " << v.pair->values[1] << ")  third "
           << v.pair->third_value << '\n';
        os << "lambda:      " << v.pair->lambda_value;
        if (v.family != Family::raw) os << "  (index gcd " << v.pair->lambda_index << ")";
        os << '\n';
        if (v.pair->containment)
            os << "witness:     " << v.pair->third_value << " = " << v.pair->containment->first
               << "*" << (v.pair->values[0] / v.pair->lambda_value) << " + "
               << v.pair->containment->second << "*"
               << (v.pair->values[1] / v.pair->lambda_value) << '\n';
    }
    if (v.certificate) {
        // the customary names: f1/f2 for Fibonacci triples, l1/l2 for Lucas
        const char* label = v.family == Family::fibonacci ? "f1, f2:     "
                            : v.family == Family::lucas   ? "l1, l2:     "
                                                          : "e1, e2:     ";
        os << label << ' ' << v.certificate->e1 << ", " << v.certificate->e2 << '\n';
        os << "frobenius:   " << v.certificate->frobenius << '\n';
        os << "genus:       " << v.certificate->genus << '\n';
        os << "hilbert:     " << hilbert_display(v.certificate->hilbert()) << '\n';
    }
    os << "oracle:      " << to_string(row.oracle.outcome);
    if (row.oracle.frobenius)
        os << " (frobenius " << *row.oracle.frobenius << ", genus " << *row.oracle.genus
           << ", conductor " << *row.oracle.conductor << ", "
           << (*row.oracle.symmetric ? "symmetric" : "not symmetric") << ")";
    if (!row.oracle.note.empty()) os << " -- " << row.oracle.note;
    os << '\n';
    return os.str();
}

}  // namespace sgt
