// Command-line front end.  Everything goes through the public C interface;
// this translation unit deliberately knows nothing about the library
// internals, so it doubles as a consumer test of the installed API surface.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "shimrel/shimrel.h"

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";

struct CStr {
    char* p = nullptr;
    ~CStr() { shimrel_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct ModelHandle {
    shimrel_model* m = nullptr;
    ~ModelHandle() { shimrel_model_free(m); }
};

struct ReportHandle {
    shimrel_report* r = nullptr;
    ~ReportHandle() { shimrel_report_free(r); }
};

int api_error() {
    std::cerr << "error: " << shimrel_last_error() << "\n";
    return 2;
}

json envelope(const std::string& command, json inputs, json result, json warnings) {
    json env;
    env["schema_version"] = kSchemaVersion;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["result"] = std::move(result);
    env["warnings"] = std::move(warnings);
    return env;
}

void emit(const json& env, const std::string& format, const std::string& text) {
    if (format == "json")
        std::cout << env.dump(2) << "\n";
    else
        std::cout << text;
}

std::string sign_str(int s) { return s > 0 ? "+1" : s < 0 ? "-1" : "0"; }

struct ModelArgs {
    long d0 = 0, level = 1, p = 0, a = 0, b = 0, k = 3;

    void add_search_opts(CLI::App* sub) {
        sub->add_option("--d0", d0, "product of ramified primes")->required();
        sub->add_option("--level", level, "level, coprime to d0")->required();
        sub->add_option("--k", k, "odd auxiliary degree parameter");
    }
    void add_full_opts(CLI::App* sub) {
        add_search_opts(sub);
        sub->add_option("--p", p, "split prime")->required();
        sub->add_option("--a", a, "residue with a^2 d0 level = -1 (mod p)")->required();
        sub->add_option("--b", b, "cofactor with a^2 d0 level + 1 = b p")->required();
    }
    int create(ModelHandle& mh) const {
        if (shimrel_model_create(d0, level, p, a, b, k, &mh.m) != SHIMREL_OK)
            return api_error();
        return 0;
    }
    json echo_search() const {
        return json{{"d0", d0}, {"level", level}, {"k", k}};
    }
    json echo_full() const {
        json j = echo_search();
        j["p"] = p;
        j["a"] = a;
        j["b"] = b;
        return j;
    }
};

int run_model(const ModelArgs& ma, long p_bound, bool all, bool all_residues,
              bool strict, const std::string& format) {
    CStr out;
    if (shimrel_model_search_json(ma.d0, ma.level, p_bound, ma.k, all ? 1 : 0,
                                  all_residues ? 1 : 0, &out.p) != SHIMREL_OK)
        return api_error();
    json models = json::parse(out.str());

    json inputs = ma.echo_search();
    inputs["p_bound"] = p_bound;
    inputs["all"] = all;
    inputs["all_residues"] = all_residues;
    inputs["format"] = format;
    json warnings = json::array();
    if (models.empty())
        warnings.push_back("no models found for d0=" + std::to_string(ma.d0) +
                           ", level=" + std::to_string(ma.level) +
                           " with p <= " + std::to_string(p_bound));

    std::string text;
    for (const auto& m : models)
        text += "p=" + m["p"].dump() + " a=" + m["a"].dump() + " b=" + m["b"].dump() +
                "  (d0=" + m["d0"].dump() + ", level=" + m["n_level"].dump() +
                ", k=" + m["k"].dump() + ")\n";
    if (models.empty()) text = "no models found\n";

    emit(envelope("model", inputs, json{{"models", models}}, warnings), format, text);
    return (strict && models.empty()) ? 1 : 0;
}

int run_relation(const ModelArgs& ma, long deg, const std::string& P,
                 const std::string& Q, bool strict, const std::string& format) {
    ModelHandle mh;
    if (int rc = ma.create(mh)) return rc;
    ReportHandle rh;
    if (shimrel_relation_build(mh.m, deg, P.c_str(), Q.c_str(), &rh.r) != SHIMREL_OK)
        return api_error();

    CStr jout;
    if (shimrel_report_to_json(rh.r, &jout.p) != SHIMREL_OK) return api_error();
    json report = json::parse(jout.str());
    CStr tout;
    if (shimrel_report_to_text(rh.r, &tout.p) != SHIMREL_OK) return api_error();

    json inputs = ma.echo_full();
    inputs["deg"] = deg;
    inputs["P"] = P;
    inputs["Q"] = Q;
    inputs["format"] = format;

    bool empty = report["empty_relation"].get<bool>();
    emit(envelope("relation", inputs, report, report["warnings"]), format, tout.str());
    return (strict && empty) ? 1 : 0;
}

int run_enumerate(const ModelArgs& ma, long deg, bool strict,
                  const std::string& format) {
    ModelHandle mh;
    if (int rc = ma.create(mh)) return rc;
    CStr out;
    if (shimrel_enumerate_json(mh.m, deg, &out.p) != SHIMREL_OK) return api_error();
    json payload = json::parse(out.str());

    json inputs = ma.echo_full();
    inputs["deg"] = deg;
    inputs["format"] = format;

    std::string text;
    for (const auto& t : payload["tuples"])
        text += "(" + t["r"].dump() + "," + t["s"].dump() + "," + t["delta"].dump() +
                ")  s1=" + t["s1"].dump() + "\n";
    if (payload["tuples"].empty()) text = "no admissible (r,s) tuples\n";
    for (const auto& w : payload["warnings"])
        text += "warning: " + w.get<std::string>() + "\n";

    emit(envelope("enumerate", inputs, json{{"tuples", payload["tuples"]}},
                  payload["warnings"]),
         format, text);
    return (strict && payload["tuples"].empty()) ? 1 : 0;
}

int run_classno(const std::string& disc, const std::string& format) {
    long h = 0;
    if (shimrel_class_number(disc.c_str(), &h) != SHIMREL_OK) return api_error();
    CStr forms;
    if (shimrel_reduced_forms_json(disc.c_str(), &forms.p) != SHIMREL_OK)
        return api_error();

    json inputs{{"disc", disc}, {"format", format}};
    json result{{"disc", disc},
                {"class_number", h},
                {"forms", json::parse(forms.str())}};
    emit(envelope("classno", inputs, result, json::array()), format,
         std::to_string(h) + "\n");
    return 0;
}

int run_hilbert(const std::string& a, const std::string& b, const std::string& place,
                const std::string& format) {
    int sym = 0;
    if (shimrel_hilbert(a.c_str(), b.c_str(), place.c_str(), &sym) != SHIMREL_OK)
        return api_error();
    json inputs{{"a", a}, {"b", b}, {"place", place}, {"format", format}};
    json result{{"a", a}, {"b", b}, {"place", place}, {"symbol", sym}};
    emit(envelope("hilbert", inputs, result, json::array()), format,
         std::to_string(sym) + "\n");
    return 0;
}

int run_signtable(const std::string& P, const std::string& Q,
                  const std::string& format) {
    CStr out;
    if (shimrel_signtable_json(P.c_str(), Q.c_str(), &out.p) != SHIMREL_OK)
        return api_error();
    json rows = json::parse(out.str());

    json inputs{{"P", P}, {"Q", Q}, {"format", format}};
    std::string text;
    for (const auto& row : rows)
        text += "[" + row["level_class"].get<std::string>() + "] " +
                sign_str(row["sign"].get<int>()) + "\n";
    emit(envelope("signtable", inputs, json{{"rows", rows}}, json::array()), format,
         text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heegner-cycle relations on quaternionic abelian-surface families"};
    app.set_version_flag("--version", std::string(shimrel_version()));
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    ModelArgs search_args;
    long p_bound = 1000;
    bool all = false, all_residues = false, strict = false;
    auto* model_cmd =
        app.add_subcommand("model", "search for models over a discriminant");
    search_args.add_search_opts(model_cmd);
    model_cmd->add_option("--p-bound", p_bound, "largest prime to scan");
    model_cmd->add_flag("--all", all, "report every prime up to the bound");
    model_cmd->add_flag("--all-residues", all_residues,
                        "report every residue for each prime");
    model_cmd->add_flag("--strict", strict, "exit 1 when nothing is found");
    add_format(model_cmd);

    ModelArgs rel_args;
    long deg = 1;
    std::string P, Q;
    auto* relation_cmd =
        app.add_subcommand("relation", "assemble the cycle relation for (P, Q)");
    rel_args.add_full_opts(relation_cmd);
    relation_cmd->add_option("--deg", deg, "isogeny degree")->required();
    relation_cmd->add_option("--P", P, "first branch-point characteristic, e.g. 0000")
        ->required();
    relation_cmd->add_option("--Q", Q, "second branch-point characteristic")
        ->required();
    relation_cmd->add_flag("--strict", strict, "exit 1 when the relation is empty");
    add_format(relation_cmd);

    ModelArgs enum_args;
    long enum_deg = 1;
    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "list the admissible (r, s) tuples");
    enum_args.add_full_opts(enumerate_cmd);
    enumerate_cmd->add_option("--deg", enum_deg, "isogeny degree");
    enumerate_cmd->add_flag("--strict", strict, "exit 1 when nothing is admissible");
    add_format(enumerate_cmd);

    std::string disc;
    auto* classno_cmd =
        app.add_subcommand("classno", "class number of a negative discriminant");
    classno_cmd->add_option("--disc", disc, "discriminant, = 0 or 1 (mod 4)")
        ->required();
    add_format(classno_cmd);

    std::string ha, hb, place;
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_v");
    hilbert_cmd->add_option("-a,--a", ha, "first argument")->required();
    hilbert_cmd->add_option("-b,--b", hb, "second argument")->required();
    hilbert_cmd->add_option("--place", place, "a prime, or inf")->required();
    add_format(hilbert_cmd);

    std::string sp, sq;
    auto* signtable_cmd =
        app.add_subcommand("signtable", "sign of every even class for (P, Q)");
    signtable_cmd->add_option("--P", sp, "first characteristic")->required();
    signtable_cmd->add_option("--Q", sq, "second characteristic")->required();
    add_format(signtable_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*model_cmd)
        return run_model(search_args, p_bound, all, all_residues, strict, format);
    if (*relation_cmd) return run_relation(rel_args, deg, P, Q, strict, format);
    if (*enumerate_cmd) return run_enumerate(enum_args, enum_deg, strict, format);
    if (*classno_cmd) return run_classno(disc, format);
    if (*hilbert_cmd) return run_hilbert(ha, hb, place, format);
    if (*signtable_cmd) return run_signtable(sp, sq, format);
    return 2;
}
