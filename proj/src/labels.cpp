#include "dtree/labels.hpp"

#include <cctype>
#include <sstream>
#include <tuple>

#include "dtree/errors.hpp"

namespace dtree {

bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
}

bool operator==(const IntVec& x, const IntVec& y) { return x.parts == y.parts; }

bool operator==(const OddPair& x, const OddPair& y) {
    return x.a == y.a && x.b == y.b;
}

bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

bool operator<(const Rational& x, const Rational& y) {
    return std::tie(x.num, x.den) < std::tie(y.num, y.den);
}

bool operator<(const IntVec& x, const IntVec& y) { return x.parts < y.parts; }

bool operator<(const OddPair& x, const OddPair& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
}

bool operator<(const Mat2& x, const Mat2& y) {
    return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
}

std::string to_string(const Rational& r) { return r.num.str() + "/" + r.den.str(); }

std::string to_string(const IntVec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.parts.size(); ++i) {
        if (i) out += ",";
        out += v.parts[i].str();
    }
    out += "]";
    return out;
}

std::string to_string(const OddPair& p) {
    return "(" + p.a.str() + "," + p.b.str() + ")";
}

std::string to_string(const Mat2& m) {
    return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," +
           m.d.str() + "]]";
}

std::string to_string(const NodeLabel& label) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Int>) {
                return v.str();
            } else {
                return to_string(v);
            }
        },
        label);
}

namespace {

class Scanner {
  public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }

    char peek() const { return done() ? '\0' : text_[pos_]; }

    void expect(char c) {
        if (done() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    // Commas may be followed by spaces; nothing else may.
    void comma() {
        expect(',');
        while (!done() && text_[pos_] == ' ') ++pos_;
    }

    Int uint() {
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a digit");
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 1 && digits[0] == '0')
            fail("leading zeros are not canonical");
        return Int(digits);
    }

    void end() {
        if (!done()) fail("trailing characters");
    }

    [[noreturn]] void fail(const std::string& what) {
        std::ostringstream msg;
        msg << "parse error at position " << pos_ << " in \"" << text_
            << "\": " << what;
        throw ParseError(msg.str());
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string_view trimmed(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

} // namespace

Int parse_integer(std::string_view text) {
    Scanner s(trimmed(text));
    Int n = s.uint();
    s.end();
    return n;
}

Rational parse_rational(std::string_view text) {
    Scanner s(trimmed(text));
    Rational r;
    r.num = s.uint();
    s.expect('/');
    r.den = s.uint();
    s.end();
    return r;
}

IntVec parse_int_vector(std::string_view text) {
    Scanner s(trimmed(text));
    IntVec v;
    s.expect('[');
    v.parts.push_back(s.uint());
    while (s.peek() == ',') {
        s.comma();
        v.parts.push_back(s.uint());
    }
    s.expect(']');
    s.end();
    return v;
}

OddPair parse_odd_pair(std::string_view text) {
    Scanner s(trimmed(text));
    OddPair p;
    s.expect('(');
    p.a = s.uint();
    s.comma();
    p.b = s.uint();
    s.expect(')');
    s.end();
    return p;
}

Mat2 parse_mat2(std::string_view text) {
    Scanner s(trimmed(text));
    Mat2 m;
    s.expect('[');
    s.expect('[');
    m.a = s.uint();
    s.comma();
    m.b = s.uint();
    s.expect(']');
    s.comma();
    s.expect('[');
    m.c = s.uint();
    s.comma();
    m.d = s.uint();
    s.expect(']');
    s.expect(']');
    s.end();
    return m;
}

} // namespace dtree
