#include "scmm/format.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace scmm {

std::string to_text(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (int i = 0; i < m.vars(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

std::string to_text(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string out;
    for (const Monomial& g : I.generators()) {
        if (!out.empty()) out += ", ";
        out += to_text(g);
    }
    return out;
}

std::string to_text(const PrimeRef& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        if (i) out += ',';
        out += 'x';
        out += std::to_string(p.vars[i] + 1);
    }
    return out + ")";
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    long read_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected a number at position " + std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }
};

// monomial := "0" | "1" | factor (('*')? factor)*
// factor   := 'x' index ('^' exponent)?
std::vector<std::pair<int, int>> parse_factors(Cursor& c) {
    std::vector<std::pair<int, int>> factors;
    while (true) {
        char ch = c.peek();
        if (ch == '*') { ++c.pos; continue; }
        if (ch != 'x' && ch != 'X') break;
        ++c.pos;
        long idx = c.read_int();
        if (idx < 1) throw parse_error("variable indices are 1-based");
        int exp = 1;
        if (c.peek() == '^') {
            ++c.pos;
            long e = c.read_int();
            if (e < 0) throw parse_error("negative exponent");
            exp = static_cast<int>(e);
        }
        factors.emplace_back(static_cast<int>(idx - 1), exp);
    }
    return factors;
}

} // namespace

MonomialIdeal ideal_from_text(const std::string& text, int n) {
    Cursor c{text};
    if (c.done()) throw parse_error("empty ideal input");

    struct RawGen { std::vector<std::pair<int, int>> factors; bool is_one = false; };
    std::vector<RawGen> raw;
    bool zero = false;
    int max_index = -1;

    while (!c.done()) {
        char ch = c.peek();
        if (ch == '0') {
            ++c.pos;
            zero = true;
        } else if (ch == '1') {
            ++c.pos;
            raw.push_back(RawGen{{}, true});
        } else {
            RawGen g;
            g.factors = parse_factors(c);
            if (g.factors.empty())
                throw parse_error("expected a monomial at position " + std::to_string(c.pos));
            for (auto& [idx, exp] : g.factors) max_index = std::max(max_index, idx);
            raw.push_back(std::move(g));
        }
        if (c.done()) break;
        if (c.peek() != ',')
            throw parse_error("expected ',' at position " + std::to_string(c.pos));
        ++c.pos;
        if (c.done()) throw parse_error("trailing comma");
    }

    if (zero && (raw.size() > 0))
        throw parse_error("'0' cannot be combined with other generators");

    int ambient = n >= 0 ? n : max_index + 1;
    if (max_index >= ambient)
        throw parse_error("variable index exceeds the ambient count");

    std::vector<Monomial> gens;
    for (const RawGen& g : raw) {
        std::vector<int> e(ambient, 0);
        for (auto& [idx, exp] : g.factors) e[idx] += exp;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::from_generators(ambient, std::move(gens));
}

std::string to_json(const MonomialIdeal& I) {
    nlohmann::ordered_json j;
    j["n"] = I.vars();
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const Monomial& g : I.generators()) gens.push_back(g.exponents());
    j["gens"] = gens;
    return j.dump();
}

MonomialIdeal ideal_from_json(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("gens"))
        throw parse_error(R"(expected {"n": ..., "gens": [...]})");
    if (!j["n"].is_number_integer() || j["n"].get<long>() < 0)
        throw parse_error("\"n\" must be a non-negative integer");
    int n = j["n"].get<int>();
    if (!j["gens"].is_array()) throw parse_error("\"gens\" must be an array");
    std::vector<Monomial> gens;
    for (const auto& row : j["gens"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw parse_error("each generator needs exactly n exponents");
        std::vector<int> e;
        e.reserve(n);
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<long>() < 0)
                throw parse_error("exponents must be non-negative integers");
            e.push_back(v.get<int>());
        }
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal parse_ideal(const std::string& input, int n) {
    for (char ch : input) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return ideal_from_json(input);
        break;
    }
    return ideal_from_text(input, n);
}

} // namespace scmm
