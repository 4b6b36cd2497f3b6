#ifndef SEXTIC_RECORDS_HPP
#define SEXTIC_RECORDS_HPP

/* Machine-readable renderings of reports and scan records.  All integers
 * travel as decimal strings: discriminants overflow 64 bits long before
 * the supported parameter range runs out, and nothing here may ever be
 * rounded.
 */

#include "sextic/integral_basis.hpp"
#include "sextic/monogenity.hpp"
#include "sextic/numeric.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sextic {

using json = nlohmann::json;

inline json to_json(const CertificationReport& r) {
    json evidence = json::array();
    for (const MaximalityEvidence& e : r.maximality)
        evidence.push_back({{"p", e.p.get_str()}, {"method", e.method}, {"ok", e.ok}});
    return json{{"m", r.m.get_str()},
                {"q", r.q.get_str()},
                {"r", r.template_r},
                {"ell", r.disc_exponent},
                {"q_squarefree", to_string(r.q_squarefree)},
                {"integrality_ok", r.integrality_ok},
                {"disc_computed", r.disc_computed.get_str()},
                {"disc_claimed", r.disc_claimed.get_str()},
                {"maximality", evidence},
                {"certified", r.certified},
                {"failure_reason", r.failure_reason}};
}

inline json to_json(const IndexFactorization& f) {
    return json{{"G1", f.G1.get_str()},
                {"G2", f.G2.get_str()},
                {"absG3", f.absG3.get_str()},
                {"q", f.qm.get_str()},
                {"ell", f.ell}};
}

inline json to_json(const CoordVector& v) {
    json a = json::array();
    for (const Int& y : v.y) a.push_back(y.get_str());
    return a;
}

inline json to_json(const ScanRecord& r) {
    json j{{"m", r.m.get_str()}, {"q", r.q.get_str()}};
    if (r.skipped) {
        j["skipped_reason"] = r.skipped_reason;
        return j;
    }
    j["r"] = r.template_r;
    j["disc"] = r.disc.get_str();
    j["certified"] = r.certified;
    j["verdict"] = r.verdict;
    return j;
}

inline ScanRecord scan_record_from_json(const json& j) {
    ScanRecord r;
    r.m = parse_int(j.at("m").get<std::string>());
    r.q = parse_int(j.at("q").get<std::string>());
    if (j.contains("skipped_reason")) {
        r.skipped = true;
        r.skipped_reason = j.at("skipped_reason").get<std::string>();
        return r;
    }
    r.template_r = j.at("r").get<int>();
    r.disc = parse_int(j.at("disc").get<std::string>());
    r.certified = j.at("certified").get<bool>();
    r.verdict = j.at("verdict").get<std::string>();
    return r;
}

inline bool operator==(const ScanRecord& a, const ScanRecord& b) {
    return a.m == b.m && a.q == b.q && a.template_r == b.template_r && a.disc == b.disc &&
           a.certified == b.certified && a.skipped == b.skipped && a.verdict == b.verdict &&
           a.skipped_reason == b.skipped_reason;
}

/* One JSON object per line, exactly as `scan` writes them. */
inline std::string render_scan_records(const std::vector<ScanRecord>& records) {
    std::string out;
    for (const ScanRecord& r : records) {
        out += to_json(r).dump();
        out += '\n';
    }
    return out;
}

}  // namespace sextic

#endif
