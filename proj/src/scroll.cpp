#include "scrolldiv/scroll.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "scrolldiv/errors.hpp"

namespace scrolldiv {

std::string_view regime_name(Regime regime) {
    switch (regime) {
        case Regime::Smooth: return "Smooth";
        case Regime::HigherCodim: return "HigherCodim";
        case Regime::Cone: return "Cone";
    }
    return "Unknown";
}

Scroll classify(std::vector<Int> degrees) {
    if (degrees.empty())
        throw DomainError("EmptyOrAllZero", "splitting type must be nonempty");
    for (const Int& a : degrees)
        if (a < 0)
            throw DomainError("NegativeEntry", "splitting type entries must be >= 0");
    if (std::all_of(degrees.begin(), degrees.end(), [](const Int& a) { return a == 0; }))
        throw DomainError("EmptyOrAllZero", "splitting type must have a positive entry");
    if (degrees.size() == 1)
        throw DomainError("LengthOne", "splitting type must have length >= 2");

    std::sort(degrees.begin(), degrees.end());
    Scroll s;
    s.f = std::accumulate(degrees.begin(), degrees.end(), Int(0));
    s.r = static_cast<int>(degrees.size());
    s.n = s.f + s.r - 1;
    int l = static_cast<int>(
        std::count(degrees.begin(), degrees.end(), Int(0)));
    s.vertex_dim = l - 1;
    if (l == 0)
        s.regime = Regime::Smooth;
    else if (l == s.r - 1)
        s.regime = Regime::Cone;
    else
        s.regime = Regime::HigherCodim;
    s.degrees = std::move(degrees);
    return s;
}

std::vector<Int> parse_scroll_spec(const std::string& spec) {
    std::vector<Int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw std::invalid_argument("scroll spec has an empty entry: '" + spec + "'");
        for (size_t i = 0; i < token.size(); ++i) {
            char c = token[i];
            bool ok = std::isdigit(static_cast<unsigned char>(c)) ||
                      (i == 0 && c == '-' && token.size() > 1);
            if (!ok)
                throw std::invalid_argument("scroll spec entry is not an integer: '" + token + "'");
        }
        out.emplace_back(token);
        token.clear();
    };
    for (char c : spec) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            token += c;
    }
    flush();
    return out;
}

}  // namespace scrolldiv
