#include "wcauchy/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "wcauchy/errors.hpp"

namespace wcauchy::parse {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

double number(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw PreconditionError("cannot parse " + what + ": '" + s + "'");
    }
    if (used != s.size()) throw PreconditionError("cannot parse " + what + ": '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

cplx complex_number(const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) throw PreconditionError("empty complex number");
    if (s.back() != 'i') return {number(s, "complex number"), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not leading and not an exponent sign.
    std::size_t cut = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            cut = i;
            break;
        }
    }
    auto imag_of = [](const std::string& p) {
        if (p.empty() || p == "+") return 1.0;
        if (p == "-") return -1.0;
        return number(p, "imaginary part");
    };
    if (cut == std::string::npos) return {0.0, imag_of(body)};
    return {number(body.substr(0, cut), "real part"), imag_of(body.substr(cut))};
}

WeightSpec weight_table(const std::string& path) {
    std::istringstream in(slurp(path));
    std::string line;
    if (!std::getline(in, line) || strip(line) != "t,omega")
        throw InvalidWeightError("weight table '" + path + "': header must be 't,omega'");
    std::vector<WeightKnot> knots;
    while (std::getline(in, line)) {
        const std::string l = strip(line);
        if (l.empty()) continue;
        const auto parts = split(l, ',');
        if (parts.size() != 2) throw InvalidWeightError("weight table '" + path + "': bad row '" + l + "'");
        knots.push_back({number(parts[0], "t"), number(parts[1], "omega")});
    }
    return WeightSpec::tabulated(std::move(knots), "table:" + path);
}

WeightSpec weight(const std::string& spec) {
    const std::string s = strip(spec);
    if (s == "const") return WeightSpec::constant();
    if (s == "expexp") return WeightSpec::double_exponential();
    if (s.rfind("pow:", 0) == 0) return WeightSpec::power(number(s.substr(4), "power exponent"));
    if (s.rfind("table:", 0) == 0) return weight_table(spec.substr(spec.find(':') + 1));
    throw PreconditionError("unknown weight '" + spec + "' (const | pow:<a> | expexp | table:<path>)");
}

ConformalMap map(const std::string& spec) {
    const std::string s = strip(spec);
    auto build = [&]() {
        if (s == "identity") return ConformalMap::identity();
        if (s.rfind("poly:", 0) == 0) {
            std::vector<cplx> c;
            for (const auto& p : split(s.substr(5), ',')) c.push_back(complex_number(p));
            return ConformalMap::polynomial(std::move(c));
        }
        if (s.rfind("scale:", 0) == 0) return ConformalMap::moebius(0.0, complex_number(s.substr(6)));
        if (s.rfind("moebius:", 0) == 0) {
            const auto p = split(s.substr(8), ',');
            if (p.size() != 2) throw PreconditionError("moebius map needs 'moebius:a,lambda'");
            return ConformalMap::moebius(complex_number(p[0]), complex_number(p[1]));
        }
        throw PreconditionError("unknown map '" + spec + "' (identity | poly:c1,... | scale:lambda | moebius:a,lambda)");
    };
    ConformalMap m = build();
    const auto rep = m.check_univalent();
    if (!rep.pass) throw PreconditionError("map '" + spec + "' is not univalent: " + rep.witness);
    return m;
}

TaylorSeries series(const std::string& inline_or_path) {
    const std::string s = strip(inline_or_path);
    if (!s.empty() && s.front() == '[') return TaylorSeries(io::from_json(s));
    return TaylorSeries(io::from_json(slurp(inline_or_path)));
}

}  // namespace wcauchy::parse
