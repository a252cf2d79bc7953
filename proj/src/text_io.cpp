#include "orchard/text_io.hpp"

#include <sstream>

namespace orchard {

namespace {

std::int64_t parse_int(const std::string& token) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(token, &used);
    } catch (const std::exception&) {
        fail(Errc::ParseError, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) fail(Errc::ParseError, "trailing junk in integer '" + token + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// "y2=x3", then optional "+Ax" / "-Ax" / "+x" / "-x", then optional "+B" / "-B".
std::pair<std::int64_t, std::int64_t> parse_short_form_sugar(const std::string& text) {
    if (text.rfind("y2=x3", 0) != 0) fail(Errc::ParseError, "short form must start with y2=x3");
    std::int64_t A = 0, B = 0;
    std::size_t pos = 5;
    bool saw_x = false, saw_b = false;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+') {
            ++pos;
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        } else {
            fail(Errc::ParseError, "expected + or - in curve sugar");
        }
        std::string digits;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') digits.push_back(text[pos++]);
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            if (saw_x || saw_b) fail(Errc::ParseError, "misplaced x term in curve sugar");
            saw_x = true;
            A = sign * (digits.empty() ? 1 : parse_int(digits));
        } else {
            if (saw_b || digits.empty()) fail(Errc::ParseError, "misplaced constant in curve sugar");
            saw_b = true;
            B = sign * parse_int(digits);
        }
    }
    return {A, B};
}

} // namespace

FieldPtr parse_field(const std::string& text) {
    auto colon = text.find(':');
    std::string base = colon == std::string::npos ? text : text.substr(0, colon);
    auto caret = base.find('^');
    if (caret == std::string::npos) fail(Errc::ParseError, "field spec must look like p^n");
    std::int64_t p = parse_int(base.substr(0, caret));
    std::int64_t n = parse_int(base.substr(caret + 1));
    if (n < 1 || n > kMaxExtensionDegree) fail(Errc::ParseError, "bad extension degree");

    if (colon == std::string::npos) return Field::make(p, static_cast<int>(n));

    std::vector<std::uint32_t> modulus;
    for (const auto& tok : split(text.substr(colon + 1), ',')) {
        std::int64_t c = parse_int(tok);
        if (c < 0) fail(Errc::ParseError, "modulus coefficients must be nonnegative");
        modulus.push_back(static_cast<std::uint32_t>(c));
    }
    if (modulus.size() != static_cast<std::size_t>(n) + 1)
        fail(Errc::ParseError, "modulus must list n+1 coefficients");
    return Field::make(p, static_cast<int>(n), modulus);
}

EllipticCurve parse_curve(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        fail(Errc::ParseError, "curve spec must look like <field>;a1,a2,a3,a4,a6");
    FieldPtr field = parse_field(text.substr(0, semi));
    std::string rest = text.substr(semi + 1);

    if (rest.rfind("y2=", 0) == 0) {
        auto [A, B] = parse_short_form_sugar(rest);
        return EllipticCurve::short_form(field, A, B);
    }

    auto tokens = split(rest, ',');
    const std::size_t n = static_cast<std::size_t>(field->degree());
    if (tokens.size() != 5 * n)
        fail(Errc::ParseError, "expected 5*n coefficient residues, got " + std::to_string(tokens.size()));
    std::array<FieldElement, 5> coeff;
    for (std::size_t i = 0; i < 5; ++i) {
        std::vector<std::int64_t> residues;
        for (std::size_t j = 0; j < n; ++j) residues.push_back(parse_int(tokens[i * n + j]));
        coeff[i] = field->element(residues);
    }
    return EllipticCurve(field, coeff[0], coeff[1], coeff[2], coeff[3], coeff[4]);
}

AbelianStructure parse_group(const std::string& text) {
    AbelianStructure g;
    for (const auto& tok : split(text, ',')) g.factors.push_back(parse_int(tok));
    g.validate();
    return g;
}

std::string arrangement_to_text(const Arrangement& arr, const Field& field) {
    std::ostringstream os;
    os << arr.n_points() << ' ' << arr.n_lines() << ' ' << field.q() << '\n';
    for (const auto& P : arr.points) os << P.str() << '\n';
    for (const auto& line : arr.lines) os << line[0] << ' ' << line[1] << ' ' << line[2] << '\n';
    return os.str();
}

RationalConfig parse_rational_config(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    std::size_t pos = 0;
    auto next = [&]() -> const std::string& {
        if (pos >= tokens.size()) fail(Errc::ParseError, "truncated configuration file");
        return tokens[pos++];
    };

    const std::int64_t n = parse_int(next());
    const std::int64_t t = parse_int(next());
    const std::int64_t q = parse_int(next());
    if (q != 0) fail(Errc::ParseError, "rational configuration expects q = 0 in the header");
    if (n < 0 || t < 0) fail(Errc::ParseError, "negative counts in header");

    RationalConfig config;
    for (std::int64_t i = 0; i < n; ++i) {
        Rational x = Rational::parse(next());
        Rational y = Rational::parse(next());
        Rational z = Rational::parse(next());
        if (z.is_zero()) {
            if (!x.is_zero() || y != Rational(1))
                fail(Errc::ParseError, "point at infinity must be written 0 1 0");
            config.points.push_back(RationalPoint::infinity());
        } else {
            if (z != Rational(1)) fail(Errc::ParseError, "affine points must have Z = 1");
            config.points.push_back(RationalPoint::affine(x, y));
        }
    }
    for (std::int64_t i = 0; i < t; ++i) {
        int a = static_cast<int>(parse_int(next()));
        int b = static_cast<int>(parse_int(next()));
        int c = static_cast<int>(parse_int(next()));
        if (a < 0 || b <= a || c <= b || c >= n)
            fail(Errc::ParseError, "line indices must be sorted and in range");
        config.lines.push_back({a, b, c});
    }
    if (pos != tokens.size()) fail(Errc::ParseError, "trailing tokens in configuration file");
    return config;
}

std::string rational_config_to_text(const RationalConfig& config) {
    std::ostringstream os;
    os << config.points.size() << ' ' << config.lines.size() << " 0\n";
    for (const auto& P : config.points) {
        if (P.at_infinity)
            os << "0 1 0\n";
        else
            os << P.x.str() << ' ' << P.y.str() << " 1\n";
    }
    for (const auto& line : config.lines) os << line[0] << ' ' << line[1] << ' ' << line[2] << '\n';
    return os.str();
}

} // namespace orchard
