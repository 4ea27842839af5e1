#include "eiscalc/serialize.hpp"

#include <sstream>

namespace eiscalc {

std::string scalar_str(const Scalar& s) { return s.str(); }

namespace {

Rat parse_rat(const std::string& tok) {
    if (tok.empty()) throw arithmetic_error("empty rational literal");
    Rat r;
    if (r.set_str(tok, 10) != 0) throw arithmetic_error("bad rational literal '" + tok + "'");
    r.canonicalize();
    return r;
}

}  // namespace

/*
  Grammar: term ( ('+'|'-') term )* with term = rat | rat '*' 'r' | 'r'.
  Whitespace-free; leading '-' binds to the first term.
*/
Scalar parse_scalar(const std::string& text, long q) {
    if (text.empty()) throw arithmetic_error("empty scalar literal");
    Rat a = 0, b = 0;
    size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw arithmetic_error("expected sign in scalar literal '" + text + "'");
        }
        size_t end = pos;
        while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
        std::string term = text.substr(pos, end - pos);
        if (term.empty()) throw arithmetic_error("dangling sign in '" + text + "'");
        size_t star = term.find('*');
        if (term == "r") {
            b += sign;
        } else if (star != std::string::npos) {
            if (term.substr(star + 1) != "r")
                throw arithmetic_error("bad scalar term '" + term + "'");
            b += Rat(sign) * parse_rat(term.substr(0, star));
        } else {
            a += Rat(sign) * parse_rat(term);
        }
        pos = end;
        first = false;
    }
    return Scalar(a, b, q);
}

UnramifiedCharacter parse_character(const std::string& text, long q) {
    UnramifiedCharacter chi;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) chi.values.push_back(parse_scalar(tok, q));
    if (chi.values.empty()) throw arithmetic_error("empty character");
    return chi;
}

std::string datum_record(const BasedRootDatum& d) {
    std::ostringstream os;
    os << "{\"name\":\"" << d.name() << "\",\"rank\":" << d.rank() << ",\"coroots\":[";
    for (int i = 0; i < d.num_simple(); ++i) {
        if (i) os << ",";
        os << "\"" << vec_str(d.simple_coroots()[i]) << "\"";
    }
    os << "],\"roots\":[";
    for (int i = 0; i < d.num_simple(); ++i) {
        if (i) os << ",";
        os << "\"" << vec_str(d.simple_roots()[i]) << "\"";
    }
    os << "]}";
    return os.str();
}

std::string series_json(const ConeSeries& s) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto& [mu, c] : s.coeffs()) {
        if (!first) os << ",";
        os << "{\"mu\":\"" << vec_str(mu) << "\",\"value\":\"" << c.str() << "\"}";
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace eiscalc
