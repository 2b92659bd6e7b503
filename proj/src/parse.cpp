#include <algorithm>
#include <cctype>

#include "json.hpp"

#include "fthresh/errors.hpp"
#include "fthresh/monomial.hpp"

namespace fthresh {

namespace {

// A generator in raw form: variable index -> exponent, or a full tuple.
struct RawGen {
    std::vector<std::pair<std::size_t, BigInt>> factors;
    std::optional<std::vector<BigInt>> tuple;
    std::size_t pos = 0;
};

struct Cursor {
    std::string_view text;
    std::size_t offset;  // position of text[0] in the original input
    std::size_t i = 0;

    bool done() const { return i >= text.size(); }
    char peek() const { return done() ? '\0' : text[i]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
    std::size_t pos() const { return offset + i; }
    [[noreturn]] void fail(const std::string& what) const {
        std::size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != '*' &&
               text[end] != ';' && text[end] != ',')
            ++end;
        std::string tok(text.substr(i, std::max<std::size_t>(end - i, done() ? 0 : 1)));
        if (tok.empty()) tok = "<end>";
        throw ParseError(what, pos(), tok);
    }
    BigInt number() {
        std::size_t start = i;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail("expected a number");
        return BigInt(std::string(text.substr(start, i - start)), 10);
    }
};

RawGen parse_term(Cursor& c) {
    RawGen g;
    c.skip_ws();
    g.pos = c.pos();
    if (c.peek() == '[') {
        ++c.i;
        std::vector<BigInt> t;
        c.skip_ws();
        if (c.peek() == ']') c.fail("empty exponent tuple");
        while (true) {
            c.skip_ws();
            t.push_back(c.number());
            c.skip_ws();
            if (c.peek() == ',') {
                ++c.i;
                continue;
            }
            if (c.peek() == ']') {
                ++c.i;
                break;
            }
            c.fail("expected ',' or ']' in exponent tuple");
        }
        g.tuple = std::move(t);
        return g;
    }
    while (true) {
        c.skip_ws();
        if (c.peek() == 'x') {
            ++c.i;
            BigInt idx = c.number();
            if (idx < 1) c.fail("variable index must be >= 1");
            BigInt e = 1;
            c.skip_ws();
            if (c.peek() == '^') {
                ++c.i;
                c.skip_ws();
                e = c.number();
            }
            g.factors.emplace_back(idx.get_ui() - 1, e);
        } else if (c.peek() == '1') {
            c.number();  // "1" as a factor: the constant monomial
        } else {
            c.fail("expected a variable like x1 or an exponent tuple");
        }
        c.skip_ws();
        if (c.peek() == '*') {
            ++c.i;
            continue;
        }
        break;
    }
    return g;
}

RawGen parse_generator_text(std::string_view text, std::size_t offset) {
    Cursor c{text, offset};
    RawGen g = parse_term(c);
    c.skip_ws();
    if (!c.done()) c.fail("unexpected token");
    return g;
}

std::size_t needed_vars(const RawGen& g) {
    if (g.tuple) return g.tuple->size();
    std::size_t n = 0;
    for (const auto& [j, e] : g.factors) n = std::max(n, j + 1);
    return n;
}

Monomial materialize(const RawGen& g, std::size_t n) {
    if (g.tuple) {
        if (g.tuple->size() != n)
            throw ParseError("exponent tuple has length " + std::to_string(g.tuple->size()) + ", expected " +
                                 std::to_string(n),
                             g.pos, "[");
        return Monomial(*g.tuple);
    }
    Monomial u(n);
    for (const auto& [j, e] : g.factors) {
        if (j >= n) throw ParseError("variable x" + std::to_string(j + 1) + " outside ambient ring", g.pos, "x" + std::to_string(j + 1));
        u.set(j, u[j] + e);
    }
    return u;
}

std::vector<RawGen> raw_from_json(const nlohmann::json& arr) {
    std::vector<RawGen> out;
    std::size_t k = 0;
    for (const auto& item : arr) {
        if (item.is_string()) {
            out.push_back(parse_generator_text(item.get<std::string>(), 0));
        } else if (item.is_array()) {
            RawGen g;
            std::vector<BigInt> t;
            for (const auto& v : item) {
                if (v.is_number_unsigned()) t.emplace_back(v.get<unsigned long>());
                else if (v.is_string()) t.emplace_back(v.get<std::string>(), 10);
                else throw ParseError("exponent must be a non-negative integer", k, v.dump());
            }
            g.tuple = std::move(t);
            g.pos = k;
            out.push_back(std::move(g));
        } else {
            throw ParseError("generator must be a string or an exponent array", k, item.dump());
        }
        ++k;
    }
    return out;
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t n) {
    RawGen g = parse_generator_text(text, 0);
    if (n == 0) n = std::max<std::size_t>(needed_vars(g), 1);
    return materialize(g, n);
}

MonomialIdeal parse_ideal(std::string_view text, std::size_t n) {
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty ideal", 0, "<end>");
    std::string_view t = text.substr(first, last - first + 1);
    if (t == "m" || t == "0" || t == "1") {
        if (n == 0) throw ParseError("ambient size unknown for reserved ideal", first, std::string(t));
        if (t == "m") return MonomialIdeal::maximal(n);
        if (t == "0") return MonomialIdeal::zero(n);
        return MonomialIdeal::unit(n);
    }
    std::vector<RawGen> raws;
    bool json_list = t.size() >= 2 && t.front() == '[' && t.back() == ']' && t.find(';') == std::string_view::npos &&
                     t.find_first_of("x\"[", 1) != std::string_view::npos &&
                     (t.find('"') != std::string_view::npos || t.find('[', 1) != std::string_view::npos);
    if (json_list) {
        nlohmann::json arr;
        try {
            arr = nlohmann::json::parse(t);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("malformed JSON ideal", first + e.byte, std::string(t.substr(0, 16)));
        }
        if (arr.empty()) {
            if (n == 0) throw ParseError("ambient size unknown for empty ideal", first, "[]");
            return MonomialIdeal::zero(n);
        }
        raws = raw_from_json(arr);
    } else {
        std::size_t start = 0;
        while (true) {
            auto semi = t.find(';', start);
            auto piece = t.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
            raws.push_back(parse_generator_text(piece, first + start));
            if (semi == std::string_view::npos) break;
            start = semi + 1;
        }
    }
    std::size_t need = 0;
    for (const auto& g : raws) need = std::max(need, needed_vars(g));
    if (n == 0) n = std::max<std::size_t>(need, 1);
    std::vector<Monomial> gens;
    for (const auto& g : raws) gens.push_back(materialize(g, n));
    return MonomialIdeal(n, std::move(gens));
}

}  // namespace fthresh
