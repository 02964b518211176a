#pragma once

#include <array>
#include <string>

namespace shimrel::thetasign {

enum class Parity { even, odd };

// Genus-2 characteristic [eps, eps'] over F_2, written as four bits
// "e1 e2 e1' e2'" (so "1011" means [(1,0),(1,1)]).
struct ThetaCharacteristic {
    std::array<int, 2> eps{};
    std::array<int, 2> eps_prime{};

    static ThetaCharacteristic from_string(const std::string& bits);
    std::string str() const;

    bool operator==(const ThetaCharacteristic&) const = default;
    bool operator<(const ThetaCharacteristic& o) const;
};

// e1 e1' + e2 e2' mod 2; 10 even and 6 odd characteristics in total
Parity parity(const ThetaCharacteristic& c);

// The six ramification characteristics P1..P6 of the fixed genus-2 model,
// in print order.
const std::array<ThetaCharacteristic, 6>& ramification_points();

// A (3,3) configuration: the even characteristic of a split component and
// the partition of the six Weierstrass indices across the two elliptic
// factors.
struct ConfigurationRow {
    ThetaCharacteristic even_char;
    std::array<int, 3> triple_first;
    std::array<int, 3> triple_second;
};

// The ten configuration rows in print order (rows I..X); each even
// characteristic appears exactly once.
const std::array<ConfigurationRow, 10>& configuration_table();

// Even characteristics in configuration-table row order.
std::array<ThetaCharacteristic, 10> even_characteristics();

// Bijection from the ramification characteristics to the index 1..6 of the
// odd-characteristic labels the configuration table is written in.  The two
// printed conventions disagree on coordinate order, so the full bijection is
// calibration data: a compiled-in table, overridable by a fixture file.
struct Calibration {
    std::array<int, 6> index_of{};  // index_of[k] = label of ramification point k+1
    std::string source;             // provenance, echoed into relation reports

    static const Calibration& builtin();
    // parse a six-line file "<4 bits> <index>"; validates the bijection
    static Calibration load_file(const std::string& path);
    // <dir>/ram_to_igusa.txt if dir or $SHIMREL_FIXTURE_DIR is set, else builtin
    static Calibration resolve(const std::string& dir = "");
};

// index 1..6 of a ramification characteristic; rejects anything else
int ram_to_igusa_index(const ThetaCharacteristic& p,
                       const Calibration& cal = Calibration::builtin());

// Sign of the pair (P,Q) on the split component labelled by the even
// characteristic ell: 0 when both indices land in the same triple, +1 when
// P's index lies in the first and Q's in the second, -1 in the other order.
int epsilon_sign(const ThetaCharacteristic& p, const ThetaCharacteristic& q,
                 const ThetaCharacteristic& ell,
                 const Calibration& cal = Calibration::builtin());

}  // namespace shimrel::thetasign
