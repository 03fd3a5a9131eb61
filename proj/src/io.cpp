#include "ech2q/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ech2q::io {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kDelta = "\xce\xb4";       // δ
constexpr std::string_view kMinusSign = "\xe2\x88\x92";  // −
constexpr std::string_view kEmptySet = "\xe2\x88\x85";   // ∅

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
    if (s == "tsv") return Format::tsv;
    if (s == "json") return Format::json;
    if (s == "md") return Format::md;
    return std::nullopt;
}

Format default_format() {
    if (const char* env = std::getenv("ECH_FORMAT")) {
        if (auto f = parse_format(env)) return *f;
    }
    return Format::tsv;
}

std::string render_current(const ReebCurrent& c) {
    if (c.empty()) return std::string(kEmptySet);
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string render_rational(const Rational& r) { return r.str(); }

std::string render_rational_canonical(const Rational& r) {
    return r.num().str() + "/" + r.den().str();
}

std::string render_perturbed(const Perturbed& x) { return x.str(); }

namespace {

bool consume(std::string_view& s, std::string_view token) {
    if (s.substr(0, token.size()) != token) return false;
    s.remove_prefix(token.size());
    return true;
}

Int parse_int_prefix(std::string_view& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw std::invalid_argument("expected an integer");
    Int value(std::string(s.substr(0, i)));
    s.remove_prefix(i);
    return value;
}

Rational parse_rational_prefix(std::string_view& s) {
    Int num = parse_int_prefix(s);
    if (!s.empty() && s.front() == '/') {
        s.remove_prefix(1);
        Int den = parse_int_prefix(s);
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return {std::move(num), std::move(den)};
    }
    return {std::move(num)};
}

}  // namespace

Int parse_int(std::string_view s) {
    Int value = parse_int_prefix(s);
    if (!s.empty()) throw std::invalid_argument("trailing characters after integer");
    return value;
}

Rational parse_rational(std::string_view s) {
    Rational value = parse_rational_prefix(s);
    if (!s.empty()) throw std::invalid_argument("trailing characters after fraction");
    return value;
}

Perturbed parse_perturbed(std::string_view s) {
    Rational base = parse_rational_prefix(s);
    if (s.empty()) return {std::move(base)};

    int sign;
    if (consume(s, "+"))
        sign = 1;
    else if (consume(s, "-") || consume(s, kMinusSign))
        sign = -1;
    else
        throw std::invalid_argument("expected +/- before the infinitesimal term");

    Int coeff = 1;
    if (!s.empty() && s.front() >= '0' && s.front() <= '9') coeff = parse_int_prefix(s);
    if (!consume(s, kDelta) && !consume(s, "d"))
        throw std::invalid_argument("expected the infinitesimal symbol (δ or d)");
    if (!s.empty()) throw std::invalid_argument("trailing characters after perturbed value");
    return {std::move(base), sign * coeff};
}

std::string emit(const OutputRecord& record, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::tsv:
            for (const auto& row : record.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (i) os << '\t';
                    os << row[i];
                }
                os << '\n';
            }
            break;
        case Format::md: {
            os << '|';
            for (const auto& col : record.columns) os << ' ' << col << " |";
            os << "\n|";
            for (std::size_t i = 0; i < record.columns.size(); ++i) os << "---|";
            os << '\n';
            for (const auto& row : record.rows) {
                os << '|';
                for (const auto& cell : row) os << ' ' << cell << " |";
                os << '\n';
            }
            break;
        }
        case Format::json: {
            ordered_json doc;
            doc["format_version"] = format_version;
            doc["command"] = record.command;
            ordered_json params = ordered_json::object();
            for (const auto& [key, value] : record.params) params[key] = value;
            doc["params"] = params;
            ordered_json rows = ordered_json::array();
            for (const auto& row : record.rows) {
                ordered_json obj = ordered_json::object();
                for (std::size_t i = 0; i < row.size(); ++i) obj[record.columns[i]] = row[i];
                rows.push_back(std::move(obj));
            }
            doc["rows"] = std::move(rows);
            os << doc.dump(2) << '\n';
            break;
        }
    }
    return os.str();
}

}  // namespace ech2q::io
