#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "shimrel/heegner.hpp"
#include "shimrel/quat.hpp"
#include "shimrel/theta.hpp"

namespace shimrel::relations {

using quatalg::HashimotoModel;
using thetasign::Calibration;
using thetasign::ThetaCharacteristic;

// One term (eps * d) Z_{disc, [level], mu, -mu} with its provenance (r, s, d).
struct RelationTerm {
    mpz_class coefficient;  // eps * d, never zero
    mpz_class disc;         // delta / d^2
    ThetaCharacteristic level_class;  // even
    mpz_class mu;  // s1 / d
    mpz_class r, s, d;
    bool operator==(const RelationTerm&) const = default;
    heegner::HeegnerCycleLabel label() const;
};

// The assembled formal relation "sum of terms == 0".
struct RelationReport {
    HashimotoModel model;
    long n = 1;
    ThetaCharacteristic P, Q;
    std::vector<RelationTerm> terms;  // grouped by class, then disc, then mu
    std::vector<ThetaCharacteristic> skipped_classes;  // even classes with eps = 0
    std::string calibration_source;
    std::vector<std::string> calibration_map;  // "bits index", one per branch point
    std::vector<std::string> warnings;
    bool empty_relation = false;
    std::string tool_version;
    bool operator==(const RelationReport&) const = default;
};

// Assemble the full relation for (model, degree n, torsion pair P != Q).
RelationReport build_relation(const HashimotoModel& m, long n,
                              const ThetaCharacteristic& P,
                              const ThetaCharacteristic& Q,
                              const Calibration& cal = Calibration::builtin());

// Internal-consistency audit over a report.  Failures are data, not errors.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    bool operator==(const CheckResult&) const = default;
};
std::vector<CheckResult> check_relation(const RelationReport& rep);
bool all_passed(const std::vector<CheckResult>& checks);

// Canonical tuple summary: the representative with r > 0 (or r = 0, s > 0) of
// each +- pair, ordered by r ascending then s ascending.
struct CanonicalTuple {
    mpz_class r, s, delta;
    bool operator==(const CanonicalTuple&) const = default;
};
std::vector<CanonicalTuple> summarize_discs(const HashimotoModel& m, long n);

// Differences against the bundled reference catalog; empty for models the
// catalog does not cover.
std::vector<std::string> catalog_warnings(const HashimotoModel& m, long n);

// Lossless JSON round-trip of reports.
std::string report_to_json(const RelationReport& rep);
RelationReport report_from_json(const std::string& text);

// Stable line-oriented rendering: one "coef * Z_{disc,[bits],mu,-mu}" per term.
std::string report_to_text(const RelationReport& rep);

std::string tool_version();

}  // namespace shimrel::relations
