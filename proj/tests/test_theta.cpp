#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "shimrel/theta.hpp"

using namespace shimrel::thetasign;

namespace {

std::vector<ThetaCharacteristic> all_characteristics() {
    std::vector<ThetaCharacteristic> out;
    for (int m = 0; m < 16; ++m) {
        std::string bits(4, '0');
        for (int k = 0; k < 4; ++k) bits[k] = char('0' + ((m >> (3 - k)) & 1));
        out.push_back(ThetaCharacteristic::from_string(bits));
    }
    return out;
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("characteristic parsing and parity") {
    auto c = ThetaCharacteristic::from_string("1011");
    CHECK(c.eps == std::array<int, 2>{1, 0});
    CHECK(c.eps_prime == std::array<int, 2>{1, 1});
    CHECK(c.str() == "1011");

    CHECK_THROWS_AS(ThetaCharacteristic::from_string("101"), std::invalid_argument);
    CHECK_THROWS_AS(ThetaCharacteristic::from_string("10111"), std::invalid_argument);
    CHECK_THROWS_AS(ThetaCharacteristic::from_string("10a1"), std::invalid_argument);

    int even = 0, odd = 0;
    for (const auto& ch : all_characteristics())
        (parity(ch) == Parity::even ? even : odd)++;
    CHECK(even == 10);
    CHECK(odd == 6);

    CHECK(parity(ThetaCharacteristic::from_string("0000")) == Parity::even);
    CHECK(parity(ThetaCharacteristic::from_string("0101")) == Parity::odd);
    CHECK(parity(ThetaCharacteristic::from_string("1111")) == Parity::even);
    CHECK(parity(ThetaCharacteristic::from_string("1010")) == Parity::odd);
}

TEST_CASE("ramification characteristics are the pinned six") {
    const auto& ram = ramification_points();
    std::vector<std::string> got;
    for (const auto& c : ram) got.push_back(c.str());
    CHECK(got == std::vector<std::string>{"0000", "1000", "1011", "1111", "1110",
                                          "0010"});
    std::set<std::string> distinct(got.begin(), got.end());
    CHECK(distinct.size() == 6);
}

TEST_CASE("configuration table combinatorics") {
    const auto& rows = configuration_table();
    REQUIRE(rows.size() == 10);

    // The even characteristic of each row is even and appears exactly once.
    std::set<std::string> evens;
    for (const auto& r : rows) {
        CHECK(parity(r.even_char) == Parity::even);
        evens.insert(r.even_char.str());
    }
    CHECK(evens.size() == 10);

    // Each row splits {1..6} into two disjoint triples.
    for (const auto& r : rows) {
        std::set<int> u(r.triple_first.begin(), r.triple_first.end());
        u.insert(r.triple_second.begin(), r.triple_second.end());
        CHECK(u == std::set<int>{1, 2, 3, 4, 5, 6});
    }

    // Every unordered pair of indices lies in a common triple in exactly 4 rows.
    for (int i = 1; i <= 6; ++i) {
        for (int j = i + 1; j <= 6; ++j) {
            int together = 0;
            for (const auto& r : rows) {
                auto in = [&](const std::array<int, 3>& t, int v) {
                    return std::find(t.begin(), t.end(), v) != t.end();
                };
                bool fi = in(r.triple_first, i), fj = in(r.triple_first, j);
                bool si = in(r.triple_second, i), sj = in(r.triple_second, j);
                if ((fi && fj) || (si && sj)) ++together;
            }
            CHECK(together == 4);
        }
    }

    auto evens_arr = even_characteristics();
    for (size_t k = 0; k < rows.size(); ++k) CHECK(evens_arr[k] == rows[k].even_char);
}

TEST_CASE("builtin calibration and index map") {
    const auto& cal = Calibration::builtin();
    CHECK(cal.index_of == std::array<int, 6>{1, 6, 5, 3, 4, 2});
    CHECK(cal.source == "builtin");

    const auto& ram = ramification_points();
    CHECK(ram_to_igusa_index(ram[0]) == 1);
    CHECK(ram_to_igusa_index(ram[1]) == 6);
    CHECK(ram_to_igusa_index(ram[2]) == 5);
    CHECK(ram_to_igusa_index(ram[3]) == 3);
    CHECK(ram_to_igusa_index(ram[4]) == 4);
    CHECK(ram_to_igusa_index(ram[5]) == 2);

    std::set<int> image;
    for (const auto& c : ram) image.insert(ram_to_igusa_index(c));
    CHECK(image == std::set<int>{1, 2, 3, 4, 5, 6});

    CHECK_THROWS_AS(ram_to_igusa_index(ThetaCharacteristic::from_string("0101")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ram_to_igusa_index(ThetaCharacteristic::from_string("1100")),
                    std::invalid_argument);
}

TEST_CASE("calibration file loading") {
    auto cal = Calibration::load_file(std::string(SHIMREL_FIXTURE_DIR) +
                                      "/ram_to_igusa.txt");
    CHECK(cal.index_of == Calibration::builtin().index_of);
    CHECK(cal.source != "builtin");

    auto resolved = Calibration::resolve(SHIMREL_FIXTURE_DIR);
    CHECK(resolved.index_of == Calibration::builtin().index_of);

    CHECK_THROWS_AS(Calibration::load_file("/nonexistent/ram_to_igusa.txt"),
                    std::runtime_error);

    auto bad_bits = write_temp("shimrel_cal_badbits.txt",
                               "0000 1\n1000 6\n10x1 5\n1111 3\n1110 4\n0010 2\n");
    CHECK_THROWS(Calibration::load_file(bad_bits));

    auto dup_index = write_temp("shimrel_cal_dupidx.txt",
                                "0000 1\n1000 1\n1011 5\n1111 3\n1110 4\n0010 2\n");
    CHECK_THROWS_AS(Calibration::load_file(dup_index), std::runtime_error);

    auto dup_char = write_temp("shimrel_cal_dupchar.txt",
                               "0000 1\n0000 6\n1011 5\n1111 3\n1110 4\n0010 2\n");
    CHECK_THROWS_AS(Calibration::load_file(dup_char), std::runtime_error);

    auto non_ram = write_temp("shimrel_cal_nonram.txt",
                              "0101 1\n1000 6\n1011 5\n1111 3\n1110 4\n0010 2\n");
    CHECK_THROWS_AS(Calibration::load_file(non_ram), std::runtime_error);

    auto short_file = write_temp("shimrel_cal_short.txt", "0000 1\n1000 6\n");
    CHECK_THROWS_AS(Calibration::load_file(short_file), std::runtime_error);

    auto bad_range = write_temp("shimrel_cal_range.txt",
                                "0000 1\n1000 7\n1011 5\n1111 3\n1110 4\n0010 2\n");
    CHECK_THROWS_AS(Calibration::load_file(bad_range), std::runtime_error);

    auto comments = write_temp("shimrel_cal_comments.txt",
                               "# map\n\n0000 1\n1000 6  # second\n1011 5\n1111 3\n"
                               "1110 4\n0010 2\n");
    auto cal2 = Calibration::load_file(comments);
    CHECK(cal2.index_of == Calibration::builtin().index_of);
}

TEST_CASE("sign vector for the first two ramification points") {
    auto P = ThetaCharacteristic::from_string("0000");
    auto Q = ThetaCharacteristic::from_string("1000");

    std::map<std::string, int> expected = {
        {"1111", -1}, {"1000", +1}, {"1100", 0}, {"0110", +1}, {"0011", +1},
        {"1001", 0},  {"0000", 0},  {"0010", -1}, {"0100", -1}, {"0001", 0},
    };
    int plus = 0, minus = 0, zero = 0;
    for (const auto& row : configuration_table()) {
        int s = epsilon_sign(P, Q, row.even_char);
        CHECK(s == expected.at(row.even_char.str()));
        if (s > 0) ++plus;
        else if (s < 0) ++minus;
        else ++zero;
    }
    CHECK(plus == 3);
    CHECK(minus == 3);
    CHECK(zero == 4);
}

TEST_CASE("epsilon sign is antisymmetric with a four-six split") {
    const auto& ram = ramification_points();
    for (size_t a = 0; a < ram.size(); ++a) {
        for (size_t b = 0; b < ram.size(); ++b) {
            if (a == b) continue;
            int zero = 0, nonzero = 0;
            for (const auto& row : configuration_table()) {
                int s = epsilon_sign(ram[a], ram[b], row.even_char);
                int t = epsilon_sign(ram[b], ram[a], row.even_char);
                CHECK(s == -t);
                CHECK(s >= -1);
                CHECK(s <= 1);
                (s == 0 ? zero : nonzero)++;
            }
            // Two indices share a triple in exactly 4 of the 10 configurations.
            CHECK(zero == 4);
            CHECK(nonzero == 6);
        }
    }
}

TEST_CASE("epsilon sign argument validation") {
    auto P = ThetaCharacteristic::from_string("0000");
    auto Q = ThetaCharacteristic::from_string("1000");
    auto odd = ThetaCharacteristic::from_string("0101");
    auto even = ThetaCharacteristic::from_string("1111");

    CHECK_THROWS_AS(epsilon_sign(P, P, even), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_sign(P, Q, odd), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_sign(odd, Q, even), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_sign(P, odd, even), std::invalid_argument);
}
