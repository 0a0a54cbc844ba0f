#include "kgfam/golden.hpp"

#include <cctype>

namespace kgfam {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
    }
    return s;
}

void add_factor(std::string_view factor, std::size_t nvars, Exponents& e, Rational& coeff, std::string_view whole)
{
    factor = trim(factor);
    const auto bad = [&]() { return std::invalid_argument("parse_xi_poly: bad factor in '" + std::string(whole) + "'"); };
    if (factor.empty()) {
        throw bad();
    }
    if (factor.substr(0, 2) == "xi") {
        const auto caret = factor.find('^');
        const auto index = std::stoul(std::string(factor.substr(2, caret == std::string_view::npos ? std::string_view::npos : caret - 2)));
        const auto power = caret == std::string_view::npos ? 1UL : std::stoul(std::string(factor.substr(caret + 1)));
        if (index == 0 || index > nvars) {
            throw bad();
        }
        e[index - 1] += static_cast<std::uint32_t>(power);
        return;
    }
    coeff *= parse_rational(std::string(factor));
}

ResolventExpansion resolvent_from_text(std::size_t r, const std::vector<std::string>& numerators, std::size_t nvars)
{
    // numerators[i] belongs to pole order (r == 0 ? 1 : i + 2).
    ResolventExpansion a{r, {}};
    for (std::size_t i = 0; i < numerators.size(); ++i) {
        a.parts.emplace(r == 0 ? 1 : i + 2, parse_xi_poly(numerators[i], nvars));
    }
    return a;
}

} // namespace

XiPoly parse_xi_poly(std::string_view text, std::size_t nvars)
{
    XiPoly out(nvars);
    std::size_t pos = 0;
    bool negative = false;
    while (pos <= text.size()) {
        const auto next = text.find_first_of("+-", pos);
        const auto term = trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (term.empty() && (pos != 0 || next == std::string_view::npos)) {
            throw std::invalid_argument("parse_xi_poly: empty term in \"" + std::string(text) + "\"");
        }
        if (!term.empty()) {
            Exponents e(nvars, 0);
            Rational coeff(negative ? -1 : 1);
            std::size_t start = 0;
            while (start <= term.size()) {
                const auto star = term.find('*', start);
                add_factor(term.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start),
                           nvars, e, coeff, text);
                if (star == std::string_view::npos) {
                    break;
                }
                start = star + 1;
            }
            out.add_term(std::move(e), QCplx(coeff));
        }
        if (next == std::string_view::npos) {
            break;
        }
        negative = text[next] == '-';
        pos = next + 1;
    }
    return out.normalize();
}

const GoldenCorpus& golden_corpus()
{
    static const GoldenCorpus corpus = [] {
        GoldenCorpus c;
        c.nvars = 6;
        // Polynomial factors of U_0..U_5, coefficients as typeset (k/d!).
        c.atilde_text = {
            "1",
            "xi1",
            "xi2 + 1/2*xi1^2",
            "xi3 + xi1*xi2 + 1/6*xi1^3",
            "xi4 + 2/2*xi1*xi3 + 1/2*xi2^2 + 3/6*xi1^2*xi2 + 1/24*xi1^4",
            "xi5 + xi1*xi4 + xi2*xi3 + 1/2*xi1*xi2^2 + 1/2*xi1^2*xi3 + 1/6*xi1^3*xi2 + 1/120*xi1^5",
        };
        // Numerators of (t - xi0)^{-s}, s = 2, 3, ... (s = 1 for A_0).
        c.resolvent_text = {
            {"1"},
            {"xi1"},
            {"xi2", "xi1^2"},
            {"xi3", "2*xi1*xi2", "xi1^3"},
            {"xi4", "2*xi1*xi3 + xi2^2", "3*xi1^2*xi2", "xi1^4"},
            {"xi5", "2*xi1*xi4 + 2*xi2*xi3", "3*xi1^2*xi3 + 3*xi1*xi2^2", "4*xi1^3*xi2", "xi1^5"},
            {"xi6", "xi3^2 + 2*xi1*xi5 + 2*xi2*xi4", "xi2^3 + 6*xi1*xi2*xi3 + 3*xi1^2*xi4",
             "4*xi1^3*xi3 + 6*xi1^2*xi2^2", "5*xi1^4*xi2", "xi1^6"},
        };
        c.p_of_a3_text = "xi3 + xi1*xi2 + 1/6*xi1^3";

        for (const auto& t : c.atilde_text) {
            c.atilde.push_back(parse_xi_poly(t, c.nvars));
        }
        for (std::size_t r = 0; r < c.resolvent_text.size(); ++r) {
            c.resolvent.push_back(resolvent_from_text(r, c.resolvent_text[r], c.nvars));
        }
        c.p_of_a3 = parse_xi_poly(c.p_of_a3_text, c.nvars);
        return c;
    }();
    return corpus;
}

} // namespace kgfam
