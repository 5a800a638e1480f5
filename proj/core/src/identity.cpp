#include "jrel/identity.hpp"

#include <cctype>
#include <sstream>

namespace jrel {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) { throw ParseError(why, i); }

    Int digits() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return int_from_dec(s.substr(start, i - start));
    }

    Exp exponent() {
        bool braced = eat('{');
        bool neg = eat('-');
        Int v = digits();
        if (braced && !eat('}')) fail("expected '}'");
        if (!v.fits_slong_p()) fail("exponent out of range");
        Exp e = v.get_si();
        return neg ? -e : e;
    }

    // atom := 't' ['^' exponent]; returns the exponent.
    Exp atom() {
        if (!eat('t')) fail("expected 't'");
        if (eat('^')) return exponent();
        return 1;
    }

    // term := INT ['*'] atom | INT | atom. Adds sign*term into out.
    void term(std::map<Exp, Int>& out, int sign) {
        skip_ws();
        if (i >= s.size()) fail("expected a term");
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            Int c = digits();
            if (eat('*')) {
                out[atom()] += sign * c;
                return;
            }
            skip_ws();
            if (i < s.size() && s[i] == 't') {  // juxtaposition: "16t" = 16*t
                out[atom()] += sign * c;
                return;
            }
            out[0] += sign * c;  // bare integer: multiple of t^0
            return;
        }
        if (s[i] == 't') {
            out[atom()] += sign;
            return;
        }
        fail(std::string("unexpected character '") + s[i] + "'");
    }

    // side := ['-'] term (('+'|'-') term)*
    void side(std::map<Exp, Int>& out, int outer_sign) {
        int sign = eat('-') ? -outer_sign : outer_sign;
        term(out, sign);
        while (true) {
            skip_ws();
            if (eat('+'))
                sign = outer_sign;
            else if (eat('-'))
                sign = -outer_sign;
            else
                return;
            term(out, sign);
        }
    }
};

}  // namespace

std::map<Exp, Int> parse_identity(const std::string& text) {
    Cursor cur{text};
    std::map<Exp, Int> acc;
    cur.side(acc, +1);
    if (!cur.eat('=')) cur.fail("expected '='");
    cur.side(acc, -1);
    if (!cur.done()) cur.fail("trailing input after identity");
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
}

std::string identity_to_string(const std::map<Exp, Int>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (c == 0) continue;
        Int a = iabs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (a != 1) os << dec(a) << "*";
        os << "t^" << e;
    }
    return os.str();
}

}  // namespace jrel
