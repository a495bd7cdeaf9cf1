#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "booklie/poisson.hpp"

namespace booklie {

/// Parses {"a":..., "b":..., ..., "f":...} where each field is a JSON
/// integer, an exact decimal or fraction string, or the literal "sym"
/// (the matching formal symbol). Non-integer JSON numbers are rejected:
/// binary doubles do not round-trip decimals exactly, so exact values
/// must arrive as strings.
inline PLParams plparams_from_json(const nlohmann::json& j) {
    static const std::array<const char*, 6> keys = {"a", "b", "c", "d", "e", "f"};
    static const std::array<Var, 6> symbols = {vars::a, vars::b, vars::c,
                                               vars::d, vars::e, vars::f};
    PLParams P = PLParams::zero();
    for (std::size_t i = 0; i < 6; ++i) {
        if (!j.contains(keys[i]))
            throw std::invalid_argument(std::string("PLParams: missing field \"") + keys[i] + "\"");
        const auto& field = j.at(keys[i]);
        if (field.is_number_integer()) {
            P.v[i] = Poly::constant(Rational(field.get<long>()));
        } else if (field.is_string()) {
            const auto s = field.get<std::string>();
            P.v[i] = s == "sym" ? Poly::variable(symbols[i]) : Poly::constant(Rational::parse(s));
        } else {
            throw std::invalid_argument(std::string("PLParams: field \"") + keys[i] +
                                        "\" must be an integer, an exact decimal/fraction string, "
                                        "or \"sym\"");
        }
    }
    return P;
}

inline nlohmann::json plparams_to_json(const PLParams& P) {
    static const std::array<const char*, 6> keys = {"a", "b", "c", "d", "e", "f"};
    static const std::array<Var, 6> symbols = {vars::a, vars::b, vars::c,
                                               vars::d, vars::e, vars::f};
    nlohmann::json j;
    for (std::size_t i = 0; i < 6; ++i) {
        if (P.v[i].is_constant())
            j[keys[i]] = P.v[i].constant_value().str();
        else if (P.v[i] == Poly::variable(symbols[i]))
            j[keys[i]] = "sym";
        else
            j[keys[i]] = P.v[i].str();
    }
    return j;
}

/// Comma-separated CLI form "a,b,c,d,e,f"; entries are exact integers,
/// decimals or fractions.
inline PLParams plparams_from_csv(const std::string& csv) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = csv.find(',', pos);
        tokens.push_back(csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (tokens.size() != 6)
        throw std::invalid_argument("PLParams: expected six comma-separated values");
    std::array<Rational, 6> vals;
    for (std::size_t i = 0; i < 6; ++i) vals[i] = Rational::parse(tokens[i]);
    return PLParams::numeric(vals);
}

}  // namespace booklie
