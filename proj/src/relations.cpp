#include "shimrel/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "shimrel/arith.hpp"

#ifndef SHIMREL_VERSION_STRING
#define SHIMREL_VERSION_STRING "dev"
#endif

namespace shimrel::relations {

using json = nlohmann::ordered_json;

namespace {

// Rank of an even characteristic in the fixed configuration-table order.
int class_rank(const ThetaCharacteristic& c) {
    const auto& rows = thetasign::configuration_table();
    for (size_t k = 0; k < rows.size(); ++k)
        if (rows[k].even_char == c) return int(k);
    return int(rows.size());
}

bool term_order(const RelationTerm& x, const RelationTerm& y) {
    int rx = class_rank(x.level_class), ry = class_rank(y.level_class);
    if (rx != ry) return rx < ry;
    if (x.disc != y.disc) return x.disc < y.disc;
    return x.mu < y.mu;
}

std::string tuple_str(const mpz_class& r, const mpz_class& s, const mpz_class& dlt) {
    return "(r,s,delta)=(" + r.get_str() + "," + s.get_str() + "," + dlt.get_str() +
           ")";
}

struct CatalogEntry {
    HashimotoModel model;
    long n;
    std::vector<CanonicalTuple> tuples;
};

// Reference enumerations for the worked triples at degree 1.
const std::vector<CatalogEntry>& reference_catalog() {
    static const std::vector<CatalogEntry> cat = {
        {{6, 1, 5, 2, 5, 3}, 1, {{1, 4, -4}, {1, 6, -3}}},
        {{26, 1, 5, 2, 21, 3}, 1, {{1, 18, -11}, {1, 20, -20}, {1, 22, -19}}},
        {{26, 1, 149, 19, 63, 3},
         1,
         {{1, 6, -11}, {3, 20, -24}, {7, 46, -11}, {9, 60, -8}}},
    };
    return cat;
}

// One admissible (tuple, d) slot of the relation: the per-class term data.
struct TermSlot {
    mpz_class r, s, d, disc, mu;
};

// Valid slots for (m, n), plus one warning per rejected d.  A d with d^2 | delta
// and delta/d^2 a discriminant is still unusable when s1/d is not an integer or
// fails the orientation congruence; such d are reported, not emitted.
std::vector<TermSlot> collect_slots(const HashimotoModel& m, long n,
                                    std::vector<std::string>& warnings) {
    std::vector<TermSlot> slots;
    mpz_class fourD = 4 * mpz_class(m.d());
    for (const auto& t : heegner::enumerate_rs(m, n)) {
        for (const auto& d : arith::square_divisors(t.delta)) {
            mpz_class disc = t.delta / (d * d);
            if (!arith::is_discriminant(disc)) continue;
            if (t.s1 % d != 0) {
                warnings.push_back("skipped d=" + d.get_str() + " for " +
                                   tuple_str(t.r, t.s, t.delta) +
                                   ": orientation s1/d is not integral");
                continue;
            }
            mpz_class mu = t.s1 / d;
            if ((mu * mu - m.p * disc) % fourD != 0) {
                warnings.push_back("skipped d=" + d.get_str() + " for " +
                                   tuple_str(t.r, t.s, t.delta) +
                                   ": orientation congruence fails");
                continue;
            }
            slots.push_back(TermSlot{t.r, t.s, d, disc, mu});
        }
    }
    return slots;
}

json mpz_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class mpz_from(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.dump());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("report parse: expected integer, got " + j.dump());
}

}  // namespace

heegner::HeegnerCycleLabel RelationTerm::label() const {
    return heegner::HeegnerCycleLabel{disc, level_class, mu, coefficient};
}

RelationReport build_relation(const HashimotoModel& m, long n,
                              const ThetaCharacteristic& P,
                              const ThetaCharacteristic& Q, const Calibration& cal) {
    // Validates P, Q (distinct branch points) up front; throws on bad input.
    thetasign::epsilon_sign(P, Q, thetasign::configuration_table()[0].even_char, cal);

    RelationReport rep;
    rep.model = m;
    rep.n = n;
    rep.P = P;
    rep.Q = Q;
    rep.calibration_source = cal.source;
    const auto& ram = thetasign::ramification_points();
    for (size_t k = 0; k < ram.size(); ++k)
        rep.calibration_map.push_back(ram[k].str() + " " +
                                      std::to_string(cal.index_of[k]));
    rep.tool_version = tool_version();

    auto slots = collect_slots(m, n, rep.warnings);

    for (const auto& row : thetasign::configuration_table()) {
        int eps = thetasign::epsilon_sign(P, Q, row.even_char, cal);
        if (eps == 0) {
            rep.skipped_classes.push_back(row.even_char);
            continue;
        }
        for (const auto& slot : slots) {
            RelationTerm term;
            term.coefficient = eps * slot.d;
            term.disc = slot.disc;
            term.level_class = row.even_char;
            term.mu = slot.mu;
            term.r = slot.r;
            term.s = slot.s;
            term.d = slot.d;
            rep.terms.push_back(std::move(term));
        }
    }
    std::sort(rep.terms.begin(), rep.terms.end(), term_order);
    rep.empty_relation = rep.terms.empty();

    auto extra = catalog_warnings(m, n);
    rep.warnings.insert(rep.warnings.end(), extra.begin(), extra.end());
    return rep;
}

std::vector<CheckResult> check_relation(const RelationReport& rep) {
    std::vector<CheckResult> out;
    auto add = [&](std::string name, bool ok, std::string detail) {
        out.push_back(CheckResult{std::move(name), ok, ok ? "" : std::move(detail)});
    };
    const HashimotoModel& m = rep.model;
    mpz_class fourD = 4 * mpz_class(m.d());

    bool nz = true;
    std::string nz_msg;
    for (const auto& t : rep.terms)
        if (t.coefficient == 0) {
            nz = false;
            nz_msg = "zero coefficient at disc " + t.disc.get_str();
        }
    add("nonzero-coefficients", nz, nz_msg);

    bool dv = true;
    std::string dv_msg;
    for (const auto& t : rep.terms)
        if (t.disc >= 0 || !arith::is_discriminant(t.disc)) {
            dv = false;
            dv_msg = "disc " + t.disc.get_str() + " is not a negative discriminant";
        }
    add("discriminant-validity", dv, dv_msg);

    bool oc = true;
    std::string oc_msg;
    for (const auto& t : rep.terms)
        if ((t.mu * t.mu - m.p * t.disc) % fourD != 0) {
            oc = false;
            oc_msg = "mu=" + t.mu.get_str() + " fails mu^2 = p*disc (mod 4D) at disc " +
                     t.disc.get_str();
        }
    add("orientation-congruence", oc, oc_msg);

    // Recover the calibration echoed into the report to recompute signs.
    bool sc = true;
    std::string sc_msg;
    try {
        Calibration cal;
        cal.index_of.fill(0);
        cal.source = rep.calibration_source;
        const auto& ram = thetasign::ramification_points();
        for (const auto& line : rep.calibration_map) {
            std::istringstream ls(line);
            std::string bits;
            int idx = 0;
            if (!(ls >> bits >> idx)) throw std::invalid_argument("bad line " + line);
            auto c = ThetaCharacteristic::from_string(bits);
            auto it = std::find(ram.begin(), ram.end(), c);
            if (it == ram.end()) throw std::invalid_argument("bad point " + bits);
            cal.index_of[size_t(it - ram.begin())] = idx;
        }
        for (const auto& t : rep.terms) {
            int eps = thetasign::epsilon_sign(rep.P, rep.Q, t.level_class, cal);
            if (t.d < 1 || t.coefficient != eps * t.d) {
                sc = false;
                sc_msg = "coefficient " + t.coefficient.get_str() +
                         " != eps*d at class " + t.level_class.str();
            }
        }
        for (const auto& c : rep.skipped_classes)
            if (thetasign::epsilon_sign(rep.P, rep.Q, c, cal) != 0) {
                sc = false;
                sc_msg = "class " + c.str() + " skipped despite nonzero sign";
            }
    } catch (const std::exception& e) {
        sc = false;
        sc_msg = e.what();
    }
    add("sign-consistency", sc, sc_msg);

    bool pr = true;
    std::string pr_msg;
    for (const auto& t : rep.terms) {
        try {
            mpz_class dlt = heegner::delta(m, rep.n, t.r, t.s);
            mpz_class s1 = heegner::s1_of(m, t.r, t.s);
            if (t.d == 0 || dlt % (t.d * t.d) != 0 || t.disc != dlt / (t.d * t.d) ||
                s1 % t.d != 0 || t.mu != s1 / t.d) {
                pr = false;
                pr_msg = "provenance " + tuple_str(t.r, t.s, dlt) + ", d=" +
                         t.d.get_str() + " does not reproduce (disc,mu)";
            }
        } catch (const std::exception& e) {
            pr = false;
            pr_msg = e.what();
        }
    }
    add("provenance-reproduction", pr, pr_msg);

    bool tw = true;
    std::string tw_msg;
    std::map<std::string, std::multiset<std::pair<mpz_class, mpz_class>>> by_class;
    for (const auto& t : rep.terms)
        by_class[t.level_class.str()].insert({t.disc, t.mu});
    for (const auto& [cls, pairs] : by_class)
        for (const auto& pm : pairs)
            if (pairs.count({pm.first, -pm.second}) != pairs.count(pm)) {
                tw = false;
                tw_msg = "unpaired (disc,mu)=(" + pm.first.get_str() + "," +
                         pm.second.get_str() + ") in class " + cls;
            }
    add("twin-pairing", tw, tw_msg);

    bool tc = true;
    std::string tc_msg;
    try {
        std::vector<std::string> scratch;
        size_t per_class = collect_slots(m, rep.n, scratch).size();
        size_t nonzero_classes =
            thetasign::configuration_table().size() - rep.skipped_classes.size();
        if (rep.terms.size() != nonzero_classes * per_class) {
            tc = false;
            tc_msg = "got " + std::to_string(rep.terms.size()) + " terms, expected " +
                     std::to_string(nonzero_classes) + " x " +
                     std::to_string(per_class);
        }
    } catch (const std::exception& e) {
        tc = false;
        tc_msg = e.what();
    }
    add("term-count-formula", tc, tc_msg);

    bool ord = std::is_sorted(rep.terms.begin(), rep.terms.end(), term_order);
    add("ordering", ord, ord ? "" : "terms not in (class, disc, mu) order");

    return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

std::vector<CanonicalTuple> summarize_discs(const HashimotoModel& m, long n) {
    std::vector<CanonicalTuple> out;
    for (const auto& t : heegner::enumerate_rs(m, n))
        if (t.r > 0 || (t.r == 0 && t.s > 0))
            out.push_back(CanonicalTuple{t.r, t.s, t.delta});
    std::sort(out.begin(), out.end(), [](const CanonicalTuple& x, const CanonicalTuple& y) {
        if (x.r != y.r) return x.r < y.r;
        return x.s < y.s;
    });
    return out;
}

std::vector<std::string> catalog_warnings(const HashimotoModel& m, long n) {
    std::vector<std::string> out;
    for (const auto& entry : reference_catalog()) {
        if (!(entry.model == m) || entry.n != n) continue;
        auto got = summarize_discs(m, n);
        for (const auto& t : entry.tuples)
            if (std::find(got.begin(), got.end(), t) == got.end())
                out.push_back("catalogued tuple " + tuple_str(t.r, t.s, t.delta) +
                              " was not produced by the enumeration");
        for (const auto& t : got)
            if (std::find(entry.tuples.begin(), entry.tuples.end(), t) ==
                entry.tuples.end())
                out.push_back("tuple " + tuple_str(t.r, t.s, t.delta) +
                              " is absent from the bundled reference catalog");
    }
    return out;
}

std::string report_to_json(const RelationReport& rep) {
    json j;
    j["model"] = {{"d0", rep.model.d0}, {"n_level", rep.model.n_level},
                  {"p", rep.model.p},   {"a", rep.model.a},
                  {"b", rep.model.b},   {"k", rep.model.k}};
    j["n"] = rep.n;
    j["P"] = rep.P.str();
    j["Q"] = rep.Q.str();
    j["terms"] = json::array();
    for (const auto& t : rep.terms) {
        json jt;
        jt["coefficient"] = mpz_json(t.coefficient);
        jt["disc"] = mpz_json(t.disc);
        jt["level_class"] = t.level_class.str();
        jt["mu"] = mpz_json(t.mu);
        jt["r"] = mpz_json(t.r);
        jt["s"] = mpz_json(t.s);
        jt["d"] = mpz_json(t.d);
        j["terms"].push_back(std::move(jt));
    }
    j["skipped_classes"] = json::array();
    for (const auto& c : rep.skipped_classes) j["skipped_classes"].push_back(c.str());
    j["calibration"] = {{"source", rep.calibration_source},
                        {"map", rep.calibration_map}};
    j["warnings"] = rep.warnings;
    j["empty_relation"] = rep.empty_relation;
    j["tool_version"] = rep.tool_version;
    return j.dump(2);
}

RelationReport report_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        RelationReport rep;
        const auto& jm = j.at("model");
        rep.model.d0 = jm.at("d0").get<long>();
        rep.model.n_level = jm.at("n_level").get<long>();
        rep.model.p = jm.at("p").get<long>();
        rep.model.a = jm.at("a").get<long>();
        rep.model.b = jm.at("b").get<long>();
        rep.model.k = jm.at("k").get<long>();
        rep.n = j.at("n").get<long>();
        rep.P = ThetaCharacteristic::from_string(j.at("P").get<std::string>());
        rep.Q = ThetaCharacteristic::from_string(j.at("Q").get<std::string>());
        for (const auto& jt : j.at("terms")) {
            RelationTerm t;
            t.coefficient = mpz_from(jt.at("coefficient"));
            t.disc = mpz_from(jt.at("disc"));
            t.level_class =
                ThetaCharacteristic::from_string(jt.at("level_class").get<std::string>());
            t.mu = mpz_from(jt.at("mu"));
            t.r = mpz_from(jt.at("r"));
            t.s = mpz_from(jt.at("s"));
            t.d = mpz_from(jt.at("d"));
            rep.terms.push_back(std::move(t));
        }
        for (const auto& jc : j.at("skipped_classes"))
            rep.skipped_classes.push_back(
                ThetaCharacteristic::from_string(jc.get<std::string>()));
        rep.calibration_source = j.at("calibration").at("source").get<std::string>();
        rep.calibration_map =
            j.at("calibration").at("map").get<std::vector<std::string>>();
        rep.warnings = j.at("warnings").get<std::vector<std::string>>();
        rep.empty_relation = j.at("empty_relation").get<bool>();
        rep.tool_version = j.at("tool_version").get<std::string>();
        return rep;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("report parse: ") + e.what());
    }
}

std::string report_to_text(const RelationReport& rep) {
    std::ostringstream os;
    os << "model (d0=" << rep.model.d0 << ", level=" << rep.model.n_level
       << ", p=" << rep.model.p << ", a=" << rep.model.a << ", b=" << rep.model.b
       << ", k=" << rep.model.k << "), degree n=" << rep.n << ", P=[" << rep.P.str()
       << "], Q=[" << rep.Q.str() << "]\n";
    os << "calibration: " << rep.calibration_source << "\n";
    for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
    if (rep.empty_relation) {
        os << "empty relation: no admissible (r,s) tuples\n";
        return os.str();
    }
    os << rep.terms.size() << " terms:\n";
    for (const auto& t : rep.terms) {
        std::string coef = t.coefficient.get_str();
        if (t.coefficient >= 0) coef = "+" + coef;
        os << "  " << coef << " * Z_{" << t.disc.get_str() << ",[" << t.level_class.str()
           << "]," << t.mu.get_str() << "," << mpz_class(-t.mu).get_str() << "}\n";
    }
    os << "== 0\n";
    return os.str();
}

std::string tool_version() { return SHIMREL_VERSION_STRING; }

}  // namespace shimrel::relations
