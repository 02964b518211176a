#include "shimrel/shimrel.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "json.hpp"
#include "shimrel/arith.hpp"
#include "shimrel/model.hpp"
#include "shimrel/relations.hpp"
#include "shimrel/theta.hpp"

namespace {

using json = nlohmann::ordered_json;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating exceptions into statuses and the thread error slot.
template <typename Fn>
shimrel_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return SHIMREL_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SHIMREL_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SHIMREL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SHIMREL_ERR_INTERNAL;
    }
}

shimrel_status null_argument(const char* what) {
    g_last_error = std::string(what) + " must not be NULL";
    return SHIMREL_ERR_NULL_ARGUMENT;
}

mpz_class parse_mpz(const char* text, const char* what) {
    try {
        return mpz_class(std::string(text));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string(what) + ": not a decimal integer: " +
                                    text);
    }
}

json model_json(const shimrel::quatalg::HashimotoModel& m) {
    return json{{"d0", m.d0}, {"n_level", m.n_level}, {"p", m.p},
                {"a", m.a},   {"b", m.b},             {"k", m.k}};
}

}  // namespace

struct shimrel_model {
    shimrel::quatalg::HashimotoModel m;
};

struct shimrel_report {
    shimrel::relations::RelationReport rep;
};

const char* shimrel_version(void) {
    static const std::string version = shimrel::relations::tool_version();
    return version.c_str();
}

const char* shimrel_last_error(void) { return g_last_error.c_str(); }

void shimrel_string_free(char* s) { std::free(s); }

shimrel_status shimrel_model_create(long d0, long n_level, long p, long a, long b,
                                    long k, shimrel_model** out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        auto m = shimrel::model::make_model(d0, n_level, p, a, b, k);
        *out = new shimrel_model{m};
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_model_validate(long d0, long n_level, long p, long a, long b,
                                      long k, char** diagnostic) {
    if (!diagnostic) return null_argument("diagnostic");
    return guarded([&] {
        auto res = shimrel::model::validate_model(d0, n_level, p, a, b, k);
        *diagnostic = res.valid ? nullptr : dup_string(res.diagnostic);
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_model_params(const shimrel_model* m, long* d0, long* n_level,
                                    long* p, long* a, long* b, long* k) {
    if (!m) return null_argument("m");
    g_last_error.clear();
    if (d0) *d0 = m->m.d0;
    if (n_level) *n_level = m->m.n_level;
    if (p) *p = m->m.p;
    if (a) *a = m->m.a;
    if (b) *b = m->m.b;
    if (k) *k = m->m.k;
    return SHIMREL_OK;
}

shimrel_status shimrel_model_search_json(long d0, long n_level, long p_bound, long k,
                                         int require_all, int all_residues,
                                         char** out) {
    if (!out) return null_argument("json");
    return guarded([&] {
        shimrel::model::ModelSearchParams params;
        params.d0 = d0;
        params.n_level = n_level;
        params.p_bound = p_bound;
        params.k = k;
        params.require_all = require_all != 0;
        params.all_residues = all_residues != 0;
        json arr = json::array();
        for (const auto& m : shimrel::model::find_models(params))
            arr.push_back(model_json(m));
        *out = dup_string(arr.dump(2));
        return SHIMREL_OK;
    });
}

void shimrel_model_free(shimrel_model* m) { delete m; }

shimrel_status shimrel_relation_build(const shimrel_model* m, long n, const char* P,
                                      const char* Q, shimrel_report** out) {
    if (!m) return null_argument("m");
    if (!P) return null_argument("P");
    if (!Q) return null_argument("Q");
    if (!out) return null_argument("out");
    return guarded([&] {
        auto cal = shimrel::thetasign::Calibration::resolve();
        auto rep = shimrel::relations::build_relation(
            m->m, n, shimrel::thetasign::ThetaCharacteristic::from_string(P),
            shimrel::thetasign::ThetaCharacteristic::from_string(Q), cal);
        *out = new shimrel_report{std::move(rep)};
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_report_to_json(const shimrel_report* rep, char** out) {
    if (!rep) return null_argument("rep");
    if (!out) return null_argument("json");
    return guarded([&] {
        *out = dup_string(shimrel::relations::report_to_json(rep->rep));
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_report_to_text(const shimrel_report* rep, char** out) {
    if (!rep) return null_argument("rep");
    if (!out) return null_argument("text");
    return guarded([&] {
        *out = dup_string(shimrel::relations::report_to_text(rep->rep));
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_report_from_json(const char* text, shimrel_report** out) {
    if (!text) return null_argument("json");
    if (!out) return null_argument("out");
    shimrel_status st = guarded([&] {
        auto rep = shimrel::relations::report_from_json(text);
        *out = new shimrel_report{std::move(rep)};
        return SHIMREL_OK;
    });
    // Malformed report text is a parse failure, not a bad argument.
    return st == SHIMREL_ERR_INVALID_ARGUMENT ? SHIMREL_ERR_PARSE : st;
}

shimrel_status shimrel_report_check_json(const shimrel_report* rep, char** out) {
    if (!rep) return null_argument("rep");
    if (!out) return null_argument("json");
    return guarded([&] {
        json arr = json::array();
        for (const auto& c : shimrel::relations::check_relation(rep->rep))
            arr.push_back(
                json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        *out = dup_string(arr.dump(2));
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_report_term_count(const shimrel_report* rep, long* count) {
    if (!rep) return null_argument("rep");
    if (!count) return null_argument("count");
    g_last_error.clear();
    *count = long(rep->rep.terms.size());
    return SHIMREL_OK;
}

void shimrel_report_free(shimrel_report* rep) { delete rep; }

shimrel_status shimrel_enumerate_json(const shimrel_model* m, long n, char** out) {
    if (!m) return null_argument("m");
    if (!out) return null_argument("json");
    return guarded([&] {
        json tuples = json::array();
        for (const auto& t : shimrel::relations::summarize_discs(m->m, n)) {
            mpz_class s1 = shimrel::heegner::s1_of(m->m, t.r, t.s);
            tuples.push_back(json{{"r", t.r.get_si()},
                                  {"s", t.s.get_si()},
                                  {"delta", t.delta.get_si()},
                                  {"s1", s1.get_si()}});
        }
        json j;
        j["tuples"] = std::move(tuples);
        j["warnings"] = shimrel::relations::catalog_warnings(m->m, n);
        *out = dup_string(j.dump(2));
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_class_number(const char* disc, long* h) {
    if (!disc) return null_argument("disc");
    if (!h) return null_argument("h");
    return guarded([&] {
        *h = shimrel::arith::class_number(parse_mpz(disc, "disc"));
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_reduced_forms_json(const char* disc, char** out) {
    if (!disc) return null_argument("disc");
    if (!out) return null_argument("json");
    return guarded([&] {
        json arr = json::array();
        for (const auto& f : shimrel::arith::reduced_forms(parse_mpz(disc, "disc")))
            arr.push_back(json{{"a", f.a.get_str()},
                               {"b", f.b.get_str()},
                               {"c", f.c.get_str()}});
        *out = dup_string(arr.dump(2));
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_kronecker(const char* a, const char* n, int* out) {
    if (!a) return null_argument("a");
    if (!n) return null_argument("n");
    if (!out) return null_argument("out");
    return guarded([&] {
        mpz_class zn = parse_mpz(n, "n");
        if (zn == 0) throw std::invalid_argument("kronecker: n must be nonzero");
        *out = shimrel::arith::kronecker_symbol(parse_mpz(a, "a"), zn);
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_hilbert(const char* a, const char* b, const char* place,
                               int* out) {
    if (!a) return null_argument("a");
    if (!b) return null_argument("b");
    if (!place) return null_argument("place");
    if (!out) return null_argument("out");
    return guarded([&] {
        shimrel::arith::Place v;
        std::string pl(place);
        if (pl == "inf" || pl == "infinity" || pl == "oo") {
            v = shimrel::arith::Place::infinity();
        } else {
            mpz_class p = parse_mpz(place, "place");
            if (!shimrel::arith::is_prime(p))
                throw std::invalid_argument("place: " + pl + " is not prime");
            v = shimrel::arith::Place::finite(p);
        }
        mpq_class qa(parse_mpz(a, "a")), qb(parse_mpz(b, "b"));
        if (qa == 0 || qb == 0)
            throw std::invalid_argument("hilbert: a and b must be nonzero");
        *out = shimrel::arith::hilbert_symbol(qa, qb, v);
        return SHIMREL_OK;
    });
}

shimrel_status shimrel_signtable_json(const char* P, const char* Q, char** out) {
    if (!P) return null_argument("P");
    if (!Q) return null_argument("Q");
    if (!out) return null_argument("json");
    return guarded([&] {
        auto cal = shimrel::thetasign::Calibration::resolve();
        auto cp = shimrel::thetasign::ThetaCharacteristic::from_string(P);
        auto cq = shimrel::thetasign::ThetaCharacteristic::from_string(Q);
        json arr = json::array();
        for (const auto& row : shimrel::thetasign::configuration_table())
            arr.push_back(json{
                {"level_class", row.even_char.str()},
                {"sign", shimrel::thetasign::epsilon_sign(cp, cq, row.even_char, cal)}});
        *out = dup_string(arr.dump(2));
        return SHIMREL_OK;
    });
}
