#include "liehr/parse.hpp"

#include <cctype>

#include "liehr/homrank.hpp"  // classical group constructors

namespace liehr {

namespace {

[[noreturn]] void fail(const std::string& text, size_t pos, size_t len,
                       const std::string& what) {
    std::string span = text.substr(pos, len == 0 ? 1 : len);
    throw parse_error(what + " at offset " + std::to_string(pos) + ": '" + span +
                      "' in \"" + text + "\"");
}

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            pos++;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            pos++;
            return true;
        }
        return false;
    }
    long long number() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && text[pos] == '-') pos++;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            pos++;
        if (pos == start || (pos == start + 1 && text[start] == '-'))
            fail(text, start, pos - start, "expected a number");
        return std::stoll(text.substr(start, pos - start));
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            pos++;
        return text.substr(start, pos - start);
    }
};

long long factor_rank(Cursor& c) {
    bool parens = c.eat('(');
    long long n = c.number();
    if (parens && !c.eat(')')) fail(c.text, c.pos, 1, "expected ')'");
    return n;
}

GroupSpec parse_factor(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    std::string name = c.word();
    if (name.empty()) fail(c.text, c.pos, 1, "expected a group name");
    if (name == "SU") return su_group(static_cast<int>(factor_rank(c)));
    if (name == "SO" || name == "Spin") {
        GroupSpec g = so_group(static_cast<int>(factor_rank(c)));
        if (name == "Spin") g.display_name = "Spin" + g.display_name.substr(2);
        return g;
    }
    if (name == "Sp") return sp_group(static_cast<int>(factor_rank(c)));
    if (name == "T") {
        GroupSpec g;
        g.torus_rank = c.peek() == '(' || std::isdigit(static_cast<unsigned char>(c.peek()))
                           ? static_cast<int>(factor_rank(c))
                           : 1;
        g.display_name = "T" + std::to_string(g.torus_rank);
        if (g.torus_rank < 1) throw domain_error("torus rank must be positive");
        return g;
    }
    // bare simple type, e.g. "B3", "E7", "G2"
    Family f;
    if (name == "A") f = Family::A;
    else if (name == "B") f = Family::B;
    else if (name == "C") f = Family::C;
    else if (name == "D") f = Family::D;
    else if (name == "E") f = Family::E6;  // fixed up from the rank below
    else if (name == "F") f = Family::F4;
    else if (name == "G") f = Family::G2;
    else fail(c.text, start, name.size(), "unknown group name");
    long long rank = c.number();
    if (name == "E") {
        if (rank == 6) f = Family::E6;
        else if (rank == 7) f = Family::E7;
        else if (rank == 8) f = Family::E8;
        else fail(c.text, start, c.pos - start, "E family has ranks 6, 7, 8");
    }
    if ((name == "F" && rank != 4) || (name == "G" && rank != 2))
        fail(c.text, start, c.pos - start, "no such exceptional type");
    try {
        return simple_group(SimpleType(f, static_cast<int>(rank)));
    } catch (const domain_error& e) {
        fail(c.text, start, c.pos - start, e.what());
    }
}

}  // namespace

GroupSpec parse_group(const std::string& text) {
    Cursor c{text};
    GroupSpec g;
    std::string display;
    bool saw_infinite = false;
    while (true) {
        GroupSpec f = parse_factor(c);
        if (!display.empty()) display += "x";
        display += f.display_name;
        for (auto& s : f.simple_factors) g.simple_factors.push_back(s);
        g.torus_rank += f.torus_rank;
        if (!f.finite_flag) saw_infinite = true;
        if (c.done()) break;
        if (!c.eat('*')) fail(text, c.pos, 1, "expected '*' between factors");
    }
    g.display_name = display;
    g.finite_flag = !saw_infinite && g.simple_factors.empty() && g.torus_rank == 0;
    return g;
}

std::vector<HighestWeight> parse_weights(const std::string& text) {
    Cursor c{text};
    std::vector<HighestWeight> out;
    while (true) {
        if (!c.eat('[')) fail(text, c.pos, 1, "expected '['");
        HighestWeight w;
        if (!c.eat(']')) {
            while (true) {
                long long v = c.number();
                if (v < 0) throw domain_error("weight coordinates must be >= 0");
                w.coords.push_back(static_cast<int>(v));
                if (c.eat(']')) break;
                if (!c.eat(',')) fail(text, c.pos, 1, "expected ',' or ']'");
            }
        }
        out.push_back(std::move(w));
        if (c.done()) break;
        if (!c.eat('x')) fail(text, c.pos, 1, "expected 'x' between weight lists");
    }
    return out;
}

IrrepSpec parse_irrep(const std::string& group_text, const std::string& weights_text) {
    IrrepSpec spec;
    spec.group = parse_group(group_text);
    spec.weights = parse_weights(weights_text);
    if (spec.weights.size() != spec.group.simple_factors.size())
        throw domain_error("group has " +
                           std::to_string(spec.group.simple_factors.size()) +
                           " simple factors but " + std::to_string(spec.weights.size()) +
                           " weight lists were given");
    for (size_t i = 0; i < spec.weights.size(); i++)
        if (spec.weights[i].coords.size() !=
            static_cast<size_t>(spec.group.simple_factors[i].rank))
            throw domain_error("weight list " + std::to_string(i + 1) + " has " +
                               std::to_string(spec.weights[i].coords.size()) +
                               " coordinates; factor " +
                               spec.group.simple_factors[i].name() + " needs " +
                               std::to_string(spec.group.simple_factors[i].rank));
    spec.torus_charges.assign(spec.group.torus_rank, 0);
    return spec;
}

}  // namespace liehr
