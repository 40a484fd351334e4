#include "polymat/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace polymat {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

void skip_spaces(Cursor& c) {
    while (!c.done()) {
        char ch = c.peek();
        if (ch == '#') {
            while (!c.done() && c.peek() != '\n') c.advance();
        } else if (ch == ' ' || ch == '\t' || ch == '\r') {
            c.advance();
        } else {
            break;
        }
    }
}

void skip_blank(Cursor& c) {
    for (;;) {
        skip_spaces(c);
        if (!c.done() && c.peek() == '\n')
            c.advance();
        else
            return;
    }
}

long long parse_int(Cursor& c) {
    skip_spaces(c);
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected an integer");
    long long value = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        value = value * 10 + (c.advance() - '0');
        if (value > (1ll << 40)) c.fail("integer literal too large");
    }
    return value;
}

Monomial parse_generator(Cursor& c, int n) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (;;) {
        skip_spaces(c);
        if (c.done() || c.peek() != 'x') c.fail("expected a factor of the form x<i> or x<i>^<e>");
        c.advance();
        long long var = parse_int(c);
        if (var < 1 || var > n) c.fail("variable index out of range for ring dimension " + std::to_string(n));
        long long exp = 1;
        skip_spaces(c);
        if (!c.done() && c.peek() == '^') {
            c.advance();
            exp = parse_int(c);
            if (exp < 1) c.fail("exponent must be at least 1");
        }
        exps[static_cast<std::size_t>(var - 1)] += static_cast<int>(exp);
        skip_spaces(c);
        if (!c.done() && c.peek() == '*') {
            c.advance();
            continue;
        }
        break;
    }
    return Monomial(std::move(exps));
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
    Cursor c{text};
    skip_blank(c);
    // Header: "ring <n>".
    for (const char* kw = "ring"; *kw; ++kw) {
        if (c.done() || c.peek() != *kw) c.fail("expected header line `ring <n>`");
        c.advance();
    }
    if (c.done() || (c.peek() != ' ' && c.peek() != '\t')) c.fail("expected ring dimension after `ring`");
    long long n = parse_int(c);
    if (n < 1 || n > kMaxRingVars) c.fail("ring dimension must be between 1 and 64");
    skip_spaces(c);
    if (!c.done() && c.peek() != '\n') c.fail("unexpected text after ring dimension");

    std::vector<Monomial> gens;
    for (;;) {
        skip_blank(c);
        if (c.done()) break;
        gens.push_back(parse_generator(c, static_cast<int>(n)));
        skip_spaces(c);
        if (!c.done() && c.peek() == ',') {
            const int comma_line = c.line;
            const int comma_col = c.col;
            c.advance();
            skip_blank(c);
            if (c.done()) throw ParseError("trailing comma in generator list", comma_line, comma_col);
            continue;
        }
        if (!c.done() && c.peek() != '\n') c.fail("expected `,`, end of line or end of input after generator");
    }
    return minimalize(static_cast<int>(n), std::move(gens));
}

Monomial parse_monomial(std::string_view text, int n) {
    Cursor c{text};
    skip_spaces(c);
    Monomial m = parse_generator(c, n);
    skip_spaces(c);
    if (!c.done()) c.fail("unexpected trailing text after monomial");
    return m;
}

std::string format_monomial(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < m.dim(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!first) out << '*';
        first = false;
        out << 'x' << (i + 1);
        if (e > 1) out << '^' << e;
    }
    return out.str();
}

std::string format_ideal(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "ring " << ideal.dim() << '\n';
    for (const auto& g : ideal.generators()) out << format_monomial(g) << '\n';
    return out.str();
}

std::string ideal_json(const MonomialIdeal& ideal) {
    nlohmann::json j;
    j["n"] = ideal.dim();
    j["generators"] = nlohmann::json::array();
    for (const auto& g : ideal.generators()) j["generators"].push_back(g.exponents());
    return j.dump();
}

}  // namespace polymat
