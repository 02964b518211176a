#include "shimrel/theta.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace shimrel::thetasign {

ThetaCharacteristic ThetaCharacteristic::from_string(const std::string& bits) {
    if (bits.size() != 4 || bits.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("theta characteristic must be four bits, got \"" +
                                    bits + "\"");
    auto b = [&](int k) { return bits[k] - '0'; };
    return {{b(0), b(1)}, {b(2), b(3)}};
}

std::string ThetaCharacteristic::str() const {
    std::string s(4, '0');
    s[0] = char('0' + eps[0]);
    s[1] = char('0' + eps[1]);
    s[2] = char('0' + eps_prime[0]);
    s[3] = char('0' + eps_prime[1]);
    return s;
}

bool ThetaCharacteristic::operator<(const ThetaCharacteristic& o) const {
    return str() < o.str();
}

Parity parity(const ThetaCharacteristic& c) {
    int v = c.eps[0] * c.eps_prime[0] + c.eps[1] * c.eps_prime[1];
    return (v % 2 == 0) ? Parity::even : Parity::odd;
}

namespace {

ThetaCharacteristic tc(const char* bits) {
    return ThetaCharacteristic::from_string(bits);
}

}  // namespace

const std::array<ThetaCharacteristic, 6>& ramification_points() {
    static const std::array<ThetaCharacteristic, 6> pts = {
        tc("0000"), tc("1000"), tc("1011"), tc("1111"), tc("1110"), tc("0010"),
    };
    return pts;
}

const std::array<ConfigurationRow, 10>& configuration_table() {
    static const std::array<ConfigurationRow, 10> rows = {{
        {tc("1111"), {3, 4, 6}, {1, 2, 5}},
        {tc("1000"), {1, 2, 3}, {4, 5, 6}},
        {tc("1100"), {3, 4, 5}, {1, 2, 6}},
        {tc("0110"), {1, 2, 4}, {3, 5, 6}},
        {tc("0011"), {1, 4, 5}, {2, 3, 6}},
        {tc("1001"), {1, 5, 6}, {2, 3, 4}},
        {tc("0000"), {2, 3, 5}, {1, 4, 6}},
        {tc("0010"), {2, 4, 6}, {1, 3, 5}},
        {tc("0100"), {2, 5, 6}, {1, 3, 4}},
        {tc("0001"), {1, 3, 6}, {2, 4, 5}},
    }};
    return rows;
}

std::array<ThetaCharacteristic, 10> even_characteristics() {
    std::array<ThetaCharacteristic, 10> out;
    const auto& rows = configuration_table();
    for (size_t k = 0; k < rows.size(); ++k) out[k] = rows[k].even_char;
    return out;
}

const Calibration& Calibration::builtin() {
    static const Calibration cal{{1, 6, 5, 3, 4, 2}, "builtin"};
    return cal;
}

Calibration Calibration::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("calibration: cannot open " + path);
    Calibration cal;
    cal.index_of.fill(0);
    cal.source = path;
    std::array<bool, 6> image_used{};
    std::string line;
    int entries = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string bits;
        int index = 0;
        if (!(ls >> bits)) continue;  // blank line
        if (!(ls >> index))
            throw std::runtime_error("calibration: malformed line \"" + line + "\" in " +
                                     path);
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error("calibration: trailing tokens in \"" + line +
                                     "\" in " + path);
        auto c = ThetaCharacteristic::from_string(bits);
        const auto& ram = ramification_points();
        auto it = std::find(ram.begin(), ram.end(), c);
        if (it == ram.end())
            throw std::runtime_error("calibration: " + bits +
                                     " is not a ramification characteristic");
        size_t slot = size_t(it - ram.begin());
        if (index < 1 || index > 6)
            throw std::runtime_error("calibration: index out of range in \"" + line +
                                     "\"");
        if (cal.index_of[slot] != 0)
            throw std::runtime_error("calibration: duplicate entry for " + bits);
        if (image_used[size_t(index - 1)])
            throw std::runtime_error("calibration: index " + std::to_string(index) +
                                     " assigned twice");
        cal.index_of[slot] = index;
        image_used[size_t(index - 1)] = true;
        ++entries;
    }
    if (entries != 6)
        throw std::runtime_error("calibration: expected 6 entries in " + path + ", got " +
                                 std::to_string(entries));
    return cal;
}

Calibration Calibration::resolve(const std::string& dir) {
    std::string base = dir;
    if (base.empty()) {
        if (const char* env = std::getenv("SHIMREL_FIXTURE_DIR")) base = env;
    }
    if (base.empty()) return builtin();
    return load_file(base + "/ram_to_igusa.txt");
}

int ram_to_igusa_index(const ThetaCharacteristic& p, const Calibration& cal) {
    const auto& ram = ramification_points();
    auto it = std::find(ram.begin(), ram.end(), p);
    if (it == ram.end())
        throw std::invalid_argument(p.str() + " is not a ramification characteristic");
    return cal.index_of[size_t(it - ram.begin())];
}

int epsilon_sign(const ThetaCharacteristic& p, const ThetaCharacteristic& q,
                 const ThetaCharacteristic& ell, const Calibration& cal) {
    if (p == q) throw std::invalid_argument("epsilon_sign: P and Q must be distinct");
    if (parity(ell) != Parity::even)
        throw std::invalid_argument("epsilon_sign: " + ell.str() +
                                    " is not an even characteristic");
    int i = ram_to_igusa_index(p, cal);
    int j = ram_to_igusa_index(q, cal);
    const auto& rows = configuration_table();
    auto row = std::find_if(rows.begin(), rows.end(),
                            [&](const ConfigurationRow& r) { return r.even_char == ell; });
    if (row == rows.end())
        throw std::logic_error("epsilon_sign: even characteristic missing from table");
    auto in = [](const std::array<int, 3>& t, int v) {
        return std::find(t.begin(), t.end(), v) != t.end();
    };
    bool pi = in(row->triple_first, i);
    bool qi = in(row->triple_first, j);
    if (pi == qi) return 0;
    return pi ? 1 : -1;
}

}  // namespace shimrel::thetasign
