#include "ech2q/io.hpp"

#include "doctest.h"

#include <nlohmann/json.hpp>

#include <stdexcept>

using namespace ech2q;

TEST_CASE("current rendering mirrors the generator tables") {
    CHECK(io::render_current(ReebCurrent()) == "\xe2\x88\x85");
    CHECK(io::render_current(ReebCurrent(0, 0, 1)) == "e");
    CHECK(io::render_current(ReebCurrent(0, 1, 9)) == "he^9");
    CHECK(io::render_current(ReebCurrent(2, 1, 1)) == "b^2he");
    CHECK(io::render_current(ReebCurrent(1, 0, 3)) == "be^3");
}

TEST_CASE("rational rendering") {
    CHECK(io::render_rational(Rational(5, 6)) == "5/6");
    CHECK(io::render_rational(Rational(6)) == "6");
    CHECK(io::render_rational_canonical(Rational(6)) == "6/1");
    CHECK(io::render_rational_canonical(Rational(0)) == "0/1");
}

TEST_CASE("perturbed parsing accepts the documented spellings") {
    CHECK(io::parse_perturbed("6") == Perturbed(Rational(6)));
    CHECK(io::parse_perturbed("6+\xce\xb4") == Perturbed(Rational(6), 1));
    CHECK(io::parse_perturbed("6+d") == Perturbed(Rational(6), 1));
    CHECK(io::parse_perturbed("6-2d") == Perturbed(Rational(6), -2));
    CHECK(io::parse_perturbed("6\xe2\x88\x92\xce\xb4") == Perturbed(Rational(6), -1));
    CHECK(io::parse_perturbed("3/2+d") == Perturbed(Rational(3, 2), 1));
    CHECK(io::parse_perturbed("-1/2-3d") == Perturbed(Rational(-1, 2), -3));
    CHECK_THROWS_AS(io::parse_perturbed("6+"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_perturbed("x"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_perturbed("6+dd"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_perturbed("1/0"), std::invalid_argument);
}

TEST_CASE("perturbed rendering round-trips through the parser") {
    for (const Perturbed& x :
         {Perturbed(Rational(6)), Perturbed(Rational(6), 1), Perturbed(Rational(6), -2),
          Perturbed(Rational(5, 2), 3), Perturbed(Rational(-7, 3), -1)}) {
        CHECK(io::parse_perturbed(io::render_perturbed(x)) == x);
    }
}

TEST_CASE("integer parsing is strict") {
    CHECK(io::parse_int("12") == 12);
    CHECK(io::parse_int("-3") == -3);
    CHECK_THROWS_AS(io::parse_int("12x"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_int(""), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_int("1.5"), std::invalid_argument);
}

namespace {

io::OutputRecord sample_record() {
    io::OutputRecord record;
    record.command = "gens";
    record.params = {{"q", "3"}, {"max_degree", "6"}};
    record.columns = {"degree", "generator", "index"};
    record.rows = {{"0", "\xe2\x88\x85", "0"}, {"2", "e", "2"}};
    return record;
}

}  // namespace

TEST_CASE("tsv emission is bare tab-separated rows") {
    CHECK(io::emit(sample_record(), io::Format::tsv) == "0\t\xe2\x88\x85\t0\n2\te\t2\n");
}

TEST_CASE("markdown emission carries a header") {
    CHECK(io::emit(sample_record(), io::Format::md) ==
          "| degree | generator | index |\n"
          "|---|---|---|\n"
          "| 0 | \xe2\x88\x85 | 0 |\n"
          "| 2 | e | 2 |\n");
}

TEST_CASE("json emission reparses and re-emits byte-identically") {
    std::string emitted = io::emit(sample_record(), io::Format::json);
    auto doc = nlohmann::ordered_json::parse(emitted);
    CHECK(doc.dump(2) + "\n" == emitted);
    CHECK(doc["format_version"] == io::format_version);
    CHECK(doc["command"] == "gens");
    CHECK(doc["params"]["q"] == "3");
    CHECK(doc["rows"][1]["generator"] == "e");
}
